#include "postalg/cohomology.hpp"

#include <stdexcept>

#include "postalg/post_structures.hpp"

namespace postalg {

namespace {

Matrix combine(const std::vector<Matrix>& mats, const Vec& x, int mdim,
               const FieldSpec& field) {
  Matrix out(mdim, mdim, field);
  for (std::size_t i = 0; i < mats.size(); ++i) {
    const Scalar& c = x[i];
    if (c.is_zero()) continue;
    out = out + mats[i].scaled(c);
  }
  return out;
}

}  // namespace

Representation::Representation(Algebra alg_in, std::vector<Matrix> action_in)
    : alg(std::move(alg_in)), mdim(0), action(std::move(action_in)) {
  if (alg.kind() != AlgebraKind::Lie) {
    throw std::invalid_argument("representation needs a Lie algebra");
  }
  if (static_cast<int>(action.size()) != alg.dim()) {
    throw std::invalid_argument("one action matrix per basis element required");
  }
  mdim = action.empty() ? 0 : action[0].rows();
  for (const Matrix& m : action) {
    if (!m.is_square() || m.rows() != mdim || m.field() != alg.field()) {
      throw std::invalid_argument("action matrices must be square, equal size");
    }
  }
  for (int i = 0; i < alg.dim(); ++i) {
    for (int j = 0; j < alg.dim(); ++j) {
      Matrix lhs = act(alg.basis_product(i, j));
      Matrix rhs = action[static_cast<std::size_t>(i)] *
                       action[static_cast<std::size_t>(j)] -
                   action[static_cast<std::size_t>(j)] *
                       action[static_cast<std::size_t>(i)];
      if (lhs != rhs) {
        throw std::invalid_argument(
            "not a representation: rho([x,y]) != [rho(x),rho(y)] at (" +
            std::to_string(i) + "," + std::to_string(j) + ")");
      }
    }
  }
}

Matrix Representation::act(const Vec& x) const {
  return combine(action, x, mdim, alg.field());
}

Bimodule::Bimodule(Algebra alg_in, std::vector<Matrix> left_in,
                   std::vector<Matrix> right_in)
    : alg(std::move(alg_in)),
      mdim(0),
      left(std::move(left_in)),
      right(std::move(right_in)) {
  if (alg.kind() != AlgebraKind::Associative) {
    throw std::invalid_argument("bimodule needs an associative algebra");
  }
  if (static_cast<int>(left.size()) != alg.dim() ||
      static_cast<int>(right.size()) != alg.dim()) {
    throw std::invalid_argument("one action matrix per basis element required");
  }
  mdim = left.empty() ? 0 : left[0].rows();
  for (const std::vector<Matrix>* side : {&left, &right}) {
    for (const Matrix& m : *side) {
      if (!m.is_square() || m.rows() != mdim || m.field() != alg.field()) {
        throw std::invalid_argument(
            "action matrices must be square, equal size");
      }
    }
  }
  for (int i = 0; i < alg.dim(); ++i) {
    for (int j = 0; j < alg.dim(); ++j) {
      Matrix prod_left = act_left(alg.basis_product(i, j));
      if (prod_left != left[static_cast<std::size_t>(i)] *
                           left[static_cast<std::size_t>(j)]) {
        throw std::invalid_argument("left action is not an algebra map");
      }
      Matrix prod_right = act_right(alg.basis_product(i, j));
      if (prod_right != right[static_cast<std::size_t>(j)] *
                            right[static_cast<std::size_t>(i)]) {
        throw std::invalid_argument("right action is not an anti-map");
      }
      if (left[static_cast<std::size_t>(i)] *
              right[static_cast<std::size_t>(j)] !=
          right[static_cast<std::size_t>(j)] *
              left[static_cast<std::size_t>(i)]) {
        throw std::invalid_argument("left and right actions do not commute");
      }
    }
  }
}

Matrix Bimodule::act_left(const Vec& x) const {
  return combine(left, x, mdim, alg.field());
}

Matrix Bimodule::act_right(const Vec& x) const {
  return combine(right, x, mdim, alg.field());
}

bool is_cocycle_lie(const Representation& rep, const Cocycle& d) {
  const int n = rep.alg.dim();
  if (d.map.rows() != rep.mdim || d.map.cols() != n ||
      d.map.field() != rep.alg.field()) {
    throw std::invalid_argument("cocycle shape mismatch");
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Vec lhs = d.map.apply(rep.alg.basis_product(i, j));
      Vec rhs = sub(rep.action[static_cast<std::size_t>(i)].apply(d.map.col(j)),
                    rep.action[static_cast<std::size_t>(j)].apply(d.map.col(i)));
      if (lhs != rhs) return false;
    }
  }
  return true;
}

bool is_cocycle_assoc(const Bimodule& bim, const Cocycle& d) {
  const int n = bim.alg.dim();
  if (d.map.rows() != bim.mdim || d.map.cols() != n ||
      d.map.field() != bim.alg.field()) {
    throw std::invalid_argument("cocycle shape mismatch");
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Vec lhs = d.map.apply(bim.alg.basis_product(i, j));
      Vec rhs = add(bim.right[static_cast<std::size_t>(j)].apply(d.map.col(i)),
                    bim.left[static_cast<std::size_t>(i)].apply(d.map.col(j)));
      if (lhs != rhs) return false;
    }
  }
  return true;
}

Vec flatten_cocycle(const Cocycle& d) {
  Vec v;
  v.reserve(static_cast<std::size_t>(d.map.rows() * d.map.cols()));
  for (int j = 0; j < d.map.cols(); ++j) {
    for (int i = 0; i < d.map.rows(); ++i) v.push_back(d.map.at(i, j));
  }
  return v;
}

Cocycle unflatten_cocycle(const Vec& v, int mdim, int dim,
                          const FieldSpec& field) {
  if (static_cast<int>(v.size()) != mdim * dim) {
    throw std::invalid_argument("cocycle coefficient size mismatch");
  }
  Matrix m(mdim, dim, field);
  for (int j = 0; j < dim; ++j) {
    for (int i = 0; i < mdim; ++i) {
      m.set(i, j, v[static_cast<std::size_t>(j * mdim + i)]);
    }
  }
  return Cocycle{std::move(m)};
}

namespace {

// Unknown d is flattened column-major: coefficient (r, k) at k*mdim + r.
std::pair<Subspace, Subspace> z1_b1_common(
    const Algebra& alg, int mdim,
    const std::function<void(int, int, Matrix&)>& add_action_terms,
    const std::vector<Matrix>& boundary_blocks) {
  const int n = alg.dim();
  const FieldSpec& f = alg.field();
  const int unknowns = n * mdim;
  Matrix sys(n * n * mdim, unknowns, f);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Matrix block(mdim, unknowns, f);
      Vec cij = alg.basis_product(i, j);
      for (int k = 0; k < n; ++k) {
        const Scalar& c = cij[static_cast<std::size_t>(k)];
        if (c.is_zero()) continue;
        for (int r = 0; r < mdim; ++r) {
          block.at(r, k * mdim + r) += c;
        }
      }
      add_action_terms(i, j, block);
      for (int r = 0; r < mdim; ++r) {
        for (int c = 0; c < unknowns; ++c) {
          sys.at((i * n + j) * mdim + r, c) = block.at(r, c);
        }
      }
    }
  }
  auto [z1, im_unused] = kernel_image(sys);
  Matrix stacked(n * mdim, mdim, f);
  for (int j = 0; j < n; ++j) {
    const Matrix& b = boundary_blocks[static_cast<std::size_t>(j)];
    for (int r = 0; r < mdim; ++r) {
      for (int c = 0; c < mdim; ++c) {
        stacked.at(j * mdim + r, c) = b.at(r, c);
      }
    }
  }
  auto [ker_unused, b1] = kernel_image(stacked);
  if (!z1.contains(b1)) {
    throw std::logic_error("B1 is not contained in Z1");
  }
  return {z1, b1};
}

}  // namespace

std::pair<Subspace, Subspace> z1_b1_lie(const Representation& rep) {
  const int n = rep.alg.dim();
  const int mdim = rep.mdim;
  std::vector<Matrix> boundary;
  boundary.reserve(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    boundary.push_back(rep.action[static_cast<std::size_t>(j)]);
  }
  auto fill = [&](int i, int j, Matrix& block) {
    // d([e_i,e_j]) - rho_i d(e_j) + rho_j d(e_i) = 0
    const Matrix& ri = rep.action[static_cast<std::size_t>(i)];
    const Matrix& rj = rep.action[static_cast<std::size_t>(j)];
    for (int r = 0; r < mdim; ++r) {
      for (int s = 0; s < mdim; ++s) {
        block.at(r, j * mdim + s) -= ri.at(r, s);
        block.at(r, i * mdim + s) += rj.at(r, s);
      }
    }
  };
  return z1_b1_common(rep.alg, mdim, fill, boundary);
}

std::pair<Subspace, Subspace> z1_b1_assoc(const Bimodule& bim) {
  const int n = bim.alg.dim();
  const int mdim = bim.mdim;
  std::vector<Matrix> boundary;
  boundary.reserve(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    boundary.push_back(bim.left[static_cast<std::size_t>(j)] -
                       bim.right[static_cast<std::size_t>(j)]);
  }
  auto fill = [&](int i, int j, Matrix& block) {
    // d(e_i e_j) - d(e_i).e_j - e_i.d(e_j) = 0
    const Matrix& li = bim.left[static_cast<std::size_t>(i)];
    const Matrix& rj = bim.right[static_cast<std::size_t>(j)];
    for (int r = 0; r < mdim; ++r) {
      for (int s = 0; s < mdim; ++s) {
        block.at(r, i * mdim + s) -= rj.at(r, s);
        block.at(r, j * mdim + s) -= li.at(r, s);
      }
    }
  };
  return z1_b1_common(bim.alg, mdim, fill, boundary);
}

std::pair<Representation, Cocycle> twist_and_pullback_lie(
    const Representation& rep, const RBOperator& r, const Cocycle& d) {
  Report check = verify_rb(rep.alg, r);
  if (!check.pass) {
    throw VerificationError("twist needs a Rota-Baxter operator",
                            std::move(check));
  }
  if (!is_cocycle_lie(rep, d)) {
    throw std::invalid_argument("twist_and_pullback_lie: d is not in Z1(n, M)");
  }
  Algebra g = from_rb_lie(rep.alg, r).g;
  std::vector<Matrix> twisted;
  twisted.reserve(static_cast<std::size_t>(rep.alg.dim()));
  for (int i = 0; i < rep.alg.dim(); ++i) {
    twisted.push_back(rep.act(r.matrix.col(i)));
  }
  // The Representation constructor re-verifies the module law over g.
  Representation trep(std::move(g), std::move(twisted));
  Cocycle dr{d.map * r.matrix};
  if (!is_cocycle_lie(trep, dr)) {
    throw std::logic_error("pullback d o R failed the cocycle identity");
  }
  return {std::move(trep), std::move(dr)};
}

std::pair<Bimodule, Cocycle> twist_and_pullback_assoc(const Bimodule& bim,
                                                      const RBOperator& r,
                                                      const Cocycle& d) {
  Report check = verify_rb(bim.alg, r);
  if (!check.pass) {
    throw VerificationError("twist needs a Rota-Baxter operator",
                            std::move(check));
  }
  if (!is_cocycle_assoc(bim, d)) {
    throw std::invalid_argument(
        "twist_and_pullback_assoc: d is not in Z1(B, M)");
  }
  Algebra a = from_rb_assoc(bim.alg, r).A;
  std::vector<Matrix> tleft, tright;
  for (int i = 0; i < bim.alg.dim(); ++i) {
    tleft.push_back(bim.act_left(r.matrix.col(i)));
    tright.push_back(bim.act_right(r.matrix.col(i)));
  }
  Bimodule tbim(std::move(a), std::move(tleft), std::move(tright));
  Cocycle dr{d.map * r.matrix};
  if (!is_cocycle_assoc(tbim, dr)) {
    throw std::logic_error("pullback d o R failed the cocycle identity");
  }
  return {std::move(tbim), std::move(dr)};
}

Vec whitehead_split(const Representation& rep, const Cocycle& d) {
  if (!is_semisimple(rep.alg)) {
    throw std::invalid_argument("whitehead_split needs a semisimple algebra");
  }
  if (!is_cocycle_lie(rep, d)) {
    throw std::invalid_argument("whitehead_split: d is not a cocycle");
  }
  const int n = rep.alg.dim();
  const int mdim = rep.mdim;
  Matrix stacked(n * mdim, mdim, rep.alg.field());
  for (int j = 0; j < n; ++j) {
    const Matrix& b = rep.action[static_cast<std::size_t>(j)];
    for (int r = 0; r < mdim; ++r) {
      for (int c = 0; c < mdim; ++c) stacked.at(j * mdim + r, c) = b.at(r, c);
    }
  }
  auto m = solve(stacked, flatten_cocycle(d));
  if (!m) {
    throw std::logic_error(
        "Whitehead split has no solution on a semisimple algebra");
  }
  return *m;
}

}  // namespace postalg
