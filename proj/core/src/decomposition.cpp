#include "postalg/decomposition.hpp"

#include <stdexcept>

#include "postalg/catalog.hpp"

namespace postalg {

Decomposition::Decomposition(Algebra ambient, Subspace s1, Subspace s2)
    : ambient_(std::move(ambient)), s1_(std::move(s1)), s2_(std::move(s2)) {
  if (s1_.ambient_dim() != ambient_.dim() ||
      s2_.ambient_dim() != ambient_.dim() ||
      s1_.field() != ambient_.field() || s2_.field() != ambient_.field()) {
    throw std::invalid_argument("decomposition: ambient dimension mismatch");
  }
  // restrict_to throws SubstructureError with a witness pair when not closed.
  restrict_to(ambient_, s1_);
  restrict_to(ambient_, s2_);
}

DecompositionReport verify_decomposition(const Decomposition& d) {
  DecompositionReport report;
  report.intersection = subspace_intersect(d.s1(), d.s2());
  report.is_sum = subspace_sum(d.s1(), d.s2()).is_full();
  report.is_proper = d.s1().dim() < d.ambient().dim() &&
                     d.s2().dim() < d.ambient().dim();
  report.is_direct = report.intersection.dim() == 0;
  return report;
}

namespace {

ComponentReport classify_one(const Algebra& ambient, const Subspace& s) {
  ComponentReport out;
  Algebra comp = restrict_to(ambient, s);
  out.fingerprint = invariant_fingerprint(comp);
  out.abelian = out.fingerprint.derived_dim == 0;
  if (comp.kind() == AlgebraKind::Lie && comp.field().is_rationals()) {
    Subspace derived = derived_subspace(comp);
    Subspace c = center(comp);
    bool derived_ss = true;
    if (derived.dim() > 0) {
      derived_ss = is_semisimple(restrict_to(comp, derived));
    }
    out.reductive_split =
        derived_ss && subspace_sum(derived, c).is_full() &&
        subspace_intersect(derived, c).dim() == 0;
  }
  return out;
}

}  // namespace

std::pair<ComponentReport, ComponentReport> classify_components(
    const Decomposition& d) {
  return {classify_one(d.ambient(), d.s1()),
          classify_one(d.ambient(), d.s2())};
}

namespace {

int pair_index(int i, int j, int n) {
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

// so(7)-coordinate image of the block so(k) fixing the last 7-k axes,
// optionally extended by the so(2) rotation in the next two axes.
Subspace so7_block(const Algebra& so7, int k, bool plus_so2) {
  std::vector<Vec> gens;
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      gens.push_back(unit_vec(so7.dim(), pair_index(i, j, 7), so7.field()));
    }
  }
  if (plus_so2) {
    gens.push_back(unit_vec(so7.dim(), pair_index(k, k + 1, 7), so7.field()));
  }
  return Subspace::span(gens, so7.dim(), so7.field());
}

}  // namespace

Decomposition onishchik_instance(const std::string& name, bool enable_d4) {
  const FieldSpec q = FieldSpec::rationals();
  if (name == "B3=G2+B2" || name == "B3=G2+B2T" || name == "B3=G2+D3") {
    Embedding g2 = make_g2(q);
    Subspace block = name == "B3=G2+D3"
                         ? so7_block(g2.target, 6, false)
                         : so7_block(g2.target, 5, name == "B3=G2+B2T");
    return Decomposition(g2.target, g2.image, std::move(block));
  }
  if (name == "D4=B3+B3") {
    if (!enable_d4) {
      throw std::invalid_argument(
          "decomposition D4=B3+B3 requires the d4 feature flag");
    }
    // so(8) on the octonion coordinates e0..e7. The first summand is the
    // stabilizer of e0; the second is the spin(7) copy
    // Der(O) + {L_a + 2 R_a : a imaginary}, which closes under brackets
    // (an element kills e0 only when 3a = 0, so the intersection is Der(O)).
    Algebra so8 = make_classical_lie(LieFamily::so, 8, q);
    Algebra oct = make_octonions(q);
    std::vector<Vec> stab;
    for (int i = 1; i < 8; ++i) {
      for (int j = i + 1; j < 8; ++j) {
        stab.push_back(unit_vec(so8.dim(), pair_index(i, j, 8), q));
      }
    }
    Embedding g2 = make_g2(q);
    std::vector<Vec> spin;
    for (int r = 0; r < g2.image.dim(); ++r) {
      // Lift a Der(O)|Im coordinate vector from so(7) to so(8) pairs (i+1, j+1).
      Vec in7 = g2.image.basis_vector(r);
      Vec in8 = zero_vec(so8.dim(), q);
      for (int i = 0; i < 7; ++i) {
        for (int j = i + 1; j < 7; ++j) {
          in8[static_cast<std::size_t>(pair_index(i + 1, j + 1, 8))] =
              in7[static_cast<std::size_t>(pair_index(i, j, 7))];
        }
      }
      spin.push_back(std::move(in8));
    }
    for (int t = 1; t < 8; ++t) {
      Matrix mult = oct.table().left_action(unit_vec(8, t, q)) +
                    oct.table().right_action(unit_vec(8, t, q)).scaled(
                        Scalar(q, 2));
      Vec coords = zero_vec(so8.dim(), q);
      for (int i = 0; i < 8; ++i) {
        for (int j = i + 1; j < 8; ++j) {
          if (mult.at(i, j) != -mult.at(j, i)) {
            throw std::logic_error("octonion multiplication map is not skew");
          }
          coords[static_cast<std::size_t>(pair_index(i, j, 8))] =
              mult.at(i, j);
        }
      }
      spin.push_back(std::move(coords));
    }
    return Decomposition(so8, Subspace::span(stab, so8.dim(), q),
                         Subspace::span(spin, so8.dim(), q));
  }
  throw std::invalid_argument("unknown decomposition instance: " + name);
}

Decomposition counterexample(int n) {
  if (n < 2) throw std::invalid_argument("counterexample needs n >= 2");
  const FieldSpec q = FieldSpec::rationals();
  Algebra amb = make_semidirect_sln_vn(n, q);
  const int m = n * n - 1;
  Vec x = zero_vec(amb.dim(), q);
  for (int j = 0; j < n; ++j) {
    x[static_cast<std::size_t>(m + j)] = Scalar(q, 1);
  }
  Matrix adx = amb.table().left_action(x);
  if (!(adx * adx).is_zero()) {
    throw std::logic_error("ad(e1+...+en) is not square-zero");
  }
  Matrix phi = Matrix::identity(amb.dim(), q) + adx;
  for (int i = 0; i < amb.dim(); ++i) {
    for (int j = 0; j < amb.dim(); ++j) {
      Vec lhs = phi.apply(amb.basis_product(i, j));
      Vec rhs = amb.multiply(phi.col(i), phi.col(j));
      if (lhs != rhs) {
        throw std::logic_error("id + ad(x) is not an automorphism");
      }
    }
  }
  std::vector<Vec> sl_gens, phi_gens;
  for (int b = 0; b < m; ++b) {
    sl_gens.push_back(unit_vec(amb.dim(), b, q));
    phi_gens.push_back(phi.col(b));
  }
  return Decomposition(amb, Subspace::span(sl_gens, amb.dim(), q),
                       Subspace::span(phi_gens, amb.dim(), q));
}

bool mutual_ideals_check(const Decomposition& d) {
  DecompositionReport report = verify_decomposition(d);
  if (!report.is_direct) {
    throw std::invalid_argument("mutual_ideals_check needs a direct decomposition");
  }
  for (int r = 0; r < d.s1().dim(); ++r) {
    for (int q = 0; q < d.s2().dim(); ++q) {
      if (!is_zero_vec(
              d.ambient().multiply(d.s1().basis_vector(r),
                                   d.s2().basis_vector(q)))) {
        return false;
      }
      if (!is_zero_vec(
              d.ambient().multiply(d.s2().basis_vector(q),
                                   d.s1().basis_vector(r)))) {
        return false;
      }
    }
  }
  return true;
}

NilpotentSumReport nilpotent_sum_check(const Decomposition& d) {
  if (d.ambient().kind() != AlgebraKind::Associative) {
    throw std::invalid_argument("nilpotent_sum_check needs an associative ambient");
  }
  NilpotentSumReport out;
  out.is_sum = subspace_sum(d.s1(), d.s2()).is_full();
  out.component1 = is_nilpotent_assoc(restrict_to(d.ambient(), d.s1()));
  out.component2 = is_nilpotent_assoc(restrict_to(d.ambient(), d.s2()));
  out.ambient = is_nilpotent_assoc(d.ambient());
  out.alarm = out.is_sum && out.component1.nilpotent &&
              out.component2.nilpotent && !out.ambient.nilpotent;
  return out;
}

}  // namespace postalg
