#include "postalg/rota_baxter.hpp"

#include <stdexcept>

namespace postalg {

namespace {

void require_shape(const Algebra& a, const RBOperator& r) {
  if (!r.matrix.is_square() || r.matrix.rows() != a.dim() ||
      r.matrix.field() != a.field() || r.weight.field() != a.field()) {
    throw std::invalid_argument("operator does not match the algebra");
  }
}

std::vector<Vec> operator_columns(const RBOperator& r) {
  std::vector<Vec> cols;
  cols.reserve(static_cast<std::size_t>(r.matrix.cols()));
  for (int i = 0; i < r.matrix.cols(); ++i) cols.push_back(r.matrix.col(i));
  return cols;
}

}  // namespace

Matrix RBOperator::plus_weight_id() const {
  return matrix + Matrix::identity(matrix.rows(), matrix.field()).scaled(weight);
}

VerificationError::VerificationError(std::string message, Report report)
    : std::runtime_error(std::move(message)), report_(std::move(report)) {}

Report verify_rb(const Algebra& a, const RBOperator& r) {
  require_shape(a, r);
  const int n = a.dim();
  Report report;
  std::vector<Vec> rcol = operator_columns(r);
  for (int i = 0; i < n; ++i) {
    Vec ei = unit_vec(n, i, a.field());
    for (int j = 0; j < n; ++j) {
      Vec ej = unit_vec(n, j, a.field());
      Vec lhs = a.multiply(rcol[static_cast<std::size_t>(i)],
                           rcol[static_cast<std::size_t>(j)]);
      Vec inner = a.multiply(rcol[static_cast<std::size_t>(i)], ej);
      inner = add(inner, a.multiply(ei, rcol[static_cast<std::size_t>(j)]));
      inner = add(inner, scale(r.weight, a.basis_product(i, j)));
      Vec res = sub(lhs, r.apply(inner));
      if (!is_zero_vec(res)) {
        report.add_violation("rb", {i, j}, std::move(res));
      }
    }
  }
  report.sort_violations();
  return report;
}

RBOperator from_splitting(const Algebra& a, const Subspace& s1,
                          const Subspace& s2) {
  if (s1.ambient_dim() != a.dim() || s2.ambient_dim() != a.dim()) {
    throw std::invalid_argument("splitting: ambient dimension mismatch");
  }
  // Throws SubstructureError with the witness pair when not closed.
  restrict_to(a, s1);
  restrict_to(a, s2);
  if (s1.dim() + s2.dim() != a.dim() ||
      !subspace_sum(s1, s2).is_full()) {
    throw std::invalid_argument("splitting is not a direct vector-space sum");
  }
  const int n = a.dim();
  // Solve e_k = u + w with u in s1, w in s2; R(e_k) = -w.
  Matrix stacked(n, n, a.field());
  for (int r = 0; r < s1.dim(); ++r) {
    for (int c = 0; c < n; ++c) stacked.at(c, r) = s1.basis().at(r, c);
  }
  for (int r = 0; r < s2.dim(); ++r) {
    for (int c = 0; c < n; ++c) {
      stacked.at(c, s1.dim() + r) = s2.basis().at(r, c);
    }
  }
  Matrix rmat(n, n, a.field());
  for (int k = 0; k < n; ++k) {
    auto x = solve(stacked, unit_vec(n, k, a.field()));
    if (!x) throw std::logic_error("direct sum failed to decompose a vector");
    for (int r = 0; r < s2.dim(); ++r) {
      const Scalar& c = (*x)[static_cast<std::size_t>(s1.dim() + r)];
      if (c.is_zero()) continue;
      for (int row = 0; row < n; ++row) {
        rmat.at(row, k) -= c * s2.basis().at(r, row);
      }
    }
  }
  RBOperator rb{std::move(rmat), Scalar(a.field(), 1)};
  Report check = verify_rb(a, rb);
  if (!check.pass) {
    throw std::logic_error("splitting operator failed the Rota-Baxter law: " +
                           check.summary());
  }
  return rb;
}

Algebra induced_algebra(const Algebra& a, const RBOperator& r) {
  Report check = verify_rb(a, r);
  if (!check.pass) {
    throw VerificationError(
        "not a Rota-Baxter operator; refusing to build the induced product",
        std::move(check));
  }
  const int n = a.dim();
  std::vector<Vec> rcol = operator_columns(r);
  ProductTable t = ProductTable::from_bilinear(
      n, a.field(), [&](int i, int j) {
        Vec w = a.multiply(rcol[static_cast<std::size_t>(i)],
                           unit_vec(n, j, a.field()));
        w = add(w, a.multiply(unit_vec(n, i, a.field()),
                              rcol[static_cast<std::size_t>(j)]));
        w = add(w, scale(r.weight, a.basis_product(i, j)));
        return w;
      });
  // Algebra construction re-verifies the kind law.
  return Algebra(a.kind(), std::move(t), a.labels());
}

Report check_rb_homomorphisms(const Algebra& a, const RBOperator& r) {
  Algebra induced = induced_algebra(a, r);
  const int n = a.dim();
  Report report;
  std::vector<Vec> rcol = operator_columns(r);
  Matrix splusid = r.plus_weight_id();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Vec prod = induced.basis_product(i, j);
      Vec res = sub(r.apply(prod),
                    a.multiply(rcol[static_cast<std::size_t>(i)],
                               rcol[static_cast<std::size_t>(j)]));
      if (!is_zero_vec(res)) {
        report.add_violation("hom-R", {i, j}, std::move(res));
      }
      Vec res2 = sub(splusid.apply(prod),
                     a.multiply(splusid.col(i), splusid.col(j)));
      if (!is_zero_vec(res2)) {
        report.add_violation("hom-R+id", {i, j}, std::move(res2));
      }
    }
  }
  report.sort_violations();
  return report;
}

Decomposition image_decomposition(const Algebra& a, const RBOperator& r) {
  if (!r.weight.is_one()) {
    throw std::invalid_argument("image_decomposition needs weight 1");
  }
  Report check = verify_rb(a, r);
  if (!check.pass) {
    throw VerificationError("image_decomposition needs a Rota-Baxter operator",
                            std::move(check));
  }
  auto [k1, im1] = kernel_image(r.matrix);
  auto [k2, im2] = kernel_image(r.plus_weight_id());
  return Decomposition(a, im1, im2);  // subalgebra invariants re-verified
}

Tower tower(const Algebra& a, const RBOperator& r, int steps) {
  if (steps < 0) throw std::invalid_argument("tower needs steps >= 0");
  Report base_check = verify_rb(a, r);
  if (!base_check.pass) {
    throw VerificationError("tower base fails the Rota-Baxter law",
                            std::move(base_check));
  }
  Tower t{a, r, {a}};
  for (int i = 0; i < steps; ++i) {
    const Algebra& cur = t.levels.back();
    Report rb_check = verify_rb(cur, r);
    if (!rb_check.pass) {
      throw VerificationError(
          "Rota-Baxter law failed at tower level " + std::to_string(i),
          std::move(rb_check));
    }
    Algebra next = [&]() {
      try {
        return induced_algebra(cur, r);
      } catch (const AlgebraLawError& e) {
        throw VerificationError("kind law failed at tower level " +
                                    std::to_string(i + 1) + ": " + e.what(),
                                e.report());
      }
    }();
    Report hom = check_rb_homomorphisms(cur, r);
    if (!hom.pass) {
      throw VerificationError("homomorphism check failed from tower level " +
                                  std::to_string(i + 1) + " to " +
                                  std::to_string(i),
                              std::move(hom));
    }
    t.levels.push_back(std::move(next));
  }
  return t;
}

Report kernel_chain(const Tower& t, int i) {
  if (!t.rb.weight.is_one()) {
    throw std::invalid_argument("kernel_chain needs weight 1");
  }
  if (i < 1 || i > t.steps()) {
    throw std::invalid_argument("kernel_chain index out of range");
  }
  auto [ker_r, im_r] = kernel_image(t.rb.matrix.pow(i));
  auto [ker_s, im_s] = kernel_image(t.rb.plus_weight_id().pow(i));
  Report report;
  for (int j = i; j <= t.steps(); ++j) {
    const Algebra& level = t.levels[static_cast<std::size_t>(j)];
    if (!substructure_test(level, ker_r, SubstructureMode::Ideal)) {
      report.add_violation("kerR-ideal", {i, j}, {});
    }
    if (!substructure_test(level, ker_s, SubstructureMode::Ideal)) {
      report.add_violation("kerR+id-ideal", {i, j}, {});
    }
  }
  report.sort_violations();
  return report;
}

bool spectrum_check(const RBOperator& r) {
  std::vector<Scalar> p = char_poly(r.matrix);
  const FieldSpec& f = r.matrix.field();
  // Strip the t^a factor.
  std::size_t a = 0;
  while (a < p.size() - 1 && p[a].is_zero()) ++a;
  p.erase(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(a));
  // Divide out (t+1) while -1 is a root.
  const Scalar minus_one(f, -1);
  while (p.size() > 1) {
    Scalar value(f);
    for (std::size_t k = p.size(); k-- > 0;) {
      value = value * minus_one + p[k];
    }
    if (!value.is_zero()) break;
    // Synthetic division by (t + 1): q[k-1] = p[k] - q[k].
    std::vector<Scalar> q(p.size() - 1, Scalar(f));
    Scalar carry(f);
    for (std::size_t k = p.size(); k-- > 1;) {
      carry = p[k] - carry;
      q[k - 1] = carry;
    }
    p = std::move(q);
  }
  return p.size() == 1 && p[0].is_one();
}

std::vector<RBOperator> search_rb_exhaustive(const Algebra& a,
                                             const Scalar& weight,
                                             const SearchOptions& opts) {
  if (!a.field().is_prime_field()) {
    throw std::invalid_argument("search_rb_exhaustive needs a prime field");
  }
  if (weight.field() != a.field()) {
    throw std::invalid_argument("weight field mismatch");
  }
  const std::int64_t p = a.field().p;
  const int n = a.dim();
  const int cells = n * n;
  long double total = 1.0L;
  for (int i = 0; i < cells; ++i) total *= static_cast<long double>(p);
  if (total > static_cast<long double>(opts.budget)) {
    throw std::invalid_argument(
        "search budget exceeded: p^(dim^2) > " + std::to_string(opts.budget));
  }

  struct DenseEntry {
    int i, j, k;
    std::int64_t c;
  };
  std::vector<DenseEntry> sc;
  for (const ScEntry& e : a.table().entries()) {
    sc.push_back(DenseEntry{e.i, e.j, e.k, e.c.residue()});
  }
  const std::int64_t lam = weight.residue();

  std::vector<std::int64_t> m(static_cast<std::size_t>(cells), 0);
  auto entry = [&m, n](int r, int c) {
    return m[static_cast<std::size_t>(r) * n + c];
  };
  auto mult = [&sc, n](const std::vector<std::int64_t>& u,
                       const std::vector<std::int64_t>& v, std::int64_t p) {
    std::vector<std::int64_t> out(static_cast<std::size_t>(n), 0);
    for (const DenseEntry& e : sc) {
      std::int64_t f = (u[static_cast<std::size_t>(e.i)] *
                        v[static_cast<std::size_t>(e.j)]) %
                       p;
      out[static_cast<std::size_t>(e.k)] =
          (out[static_cast<std::size_t>(e.k)] + f * e.c) % p;
    }
    return out;
  };

  std::vector<RBOperator> found;
  bool done = false;
  while (!done) {
    // Check the Rota-Baxter identity pair by pair, abandoning early.
    bool ok = true;
    for (int i = 0; ok && i < n; ++i) {
      std::vector<std::int64_t> ei(static_cast<std::size_t>(n), 0);
      ei[static_cast<std::size_t>(i)] = 1;
      std::vector<std::int64_t> ri(static_cast<std::size_t>(n));
      for (int r = 0; r < n; ++r) ri[static_cast<std::size_t>(r)] = entry(r, i);
      for (int j = 0; ok && j < n; ++j) {
        std::vector<std::int64_t> ej(static_cast<std::size_t>(n), 0);
        ej[static_cast<std::size_t>(j)] = 1;
        std::vector<std::int64_t> rj(static_cast<std::size_t>(n));
        for (int r = 0; r < n; ++r) {
          rj[static_cast<std::size_t>(r)] = entry(r, j);
        }
        std::vector<std::int64_t> lhs = mult(ri, rj, p);
        std::vector<std::int64_t> inner = mult(ri, ej, p);
        std::vector<std::int64_t> t2 = mult(ei, rj, p);
        std::vector<std::int64_t> t3 = mult(ei, ej, p);
        for (int r = 0; r < n; ++r) {
          inner[static_cast<std::size_t>(r)] =
              (inner[static_cast<std::size_t>(r)] +
               t2[static_cast<std::size_t>(r)] +
               lam * t3[static_cast<std::size_t>(r)]) %
              p;
        }
        for (int r = 0; ok && r < n; ++r) {
          std::int64_t rhs = 0;
          for (int c = 0; c < n; ++c) {
            rhs = (rhs + entry(r, c) * inner[static_cast<std::size_t>(c)]) % p;
          }
          std::int64_t diff =
              (lhs[static_cast<std::size_t>(r)] - rhs) % p;
          if (diff != 0) ok = false;
        }
      }
    }
    if (ok) {
      Matrix rm(n, n, a.field());
      for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
          rm.at(r, c) = Scalar(a.field(), static_cast<long>(entry(r, c)));
        }
      }
      found.push_back(RBOperator{std::move(rm), weight});
    }
    // Lexicographic odometer over row-major entries.
    int pos = cells - 1;
    while (pos >= 0) {
      if (++m[static_cast<std::size_t>(pos)] < p) break;
      m[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) done = true;
  }
  return found;
}

Report rb_tower_nonnilpotence(const Algebra& b, const RBOperator& r,
                              int steps) {
  if (!is_semisimple(b)) {
    throw std::invalid_argument(
        "rb_tower_nonnilpotence needs a semisimple base");
  }
  Tower t = tower(b, r, steps);
  Report report;
  for (int i = 0; i <= t.steps(); ++i) {
    NilpotencyResult nil =
        is_nilpotent_assoc(t.levels[static_cast<std::size_t>(i)]);
    if (nil.nilpotent) {
      report.add_violation("nilpotent-level", {i}, {});
    }
  }
  report.sort_violations();
  return report;
}

}  // namespace postalg
