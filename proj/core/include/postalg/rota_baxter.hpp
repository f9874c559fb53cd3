#pragma once

#include "postalg/decomposition.hpp"

namespace postalg {

/// Linear operator R with a weight; candidate for the Rota-Baxter identity
/// R(x)R(y) = R(R(x)y + xR(y) + weight xy).
struct RBOperator {
  Matrix matrix;
  Scalar weight;

  Vec apply(const Vec& v) const { return matrix.apply(v); }
  Matrix plus_weight_id() const;  // R + weight id
};

/// A mathematical verification failed where an operation required it to
/// hold; carries the violating report.
class VerificationError : public std::runtime_error {
 public:
  VerificationError(std::string message, Report report);
  const Report& report() const { return report_; }

 private:
  Report report_;
};

/// Checks the Rota-Baxter identity on all basis pairs.
Report verify_rb(const Algebra& a, const RBOperator& r);

/// R = -(projection onto s2 along s1) for a direct sum a = s1 + s2 of
/// subalgebras; always a Rota-Baxter operator of weight 1.
RBOperator from_splitting(const Algebra& a, const Subspace& s1,
                          const Subspace& s2);

/// x o y = R(x)y + xR(y) + weight xy. Requires verify_rb to pass (throws
/// VerificationError otherwise); the output is re-verified against the
/// input's kind law before the kind tag is copied.
Algebra induced_algebra(const Algebra& a, const RBOperator& r);

/// Confirms R and R + weight id are homomorphisms from the induced algebra
/// to the base on all basis pairs.
Report check_rb_homomorphisms(const Algebra& a, const RBOperator& r);

/// a = im(R) + im(R + id) for weight-1 operators; both images are verified
/// subalgebras and the sum is always the whole space.
Decomposition image_decomposition(const Algebra& a, const RBOperator& r);

struct Tower {
  Algebra base;
  RBOperator rb;
  std::vector<Algebra> levels;  // levels[0] == base

  int steps() const { return static_cast<int>(levels.size()) - 1; }
};

/// Iterates the induced product: level i+1 from level i. At every step R is
/// re-verified, the kind law is re-verified, and the homomorphism property
/// level i+1 -> level i is checked; any failure aborts with the level index.
Tower tower(const Algebra& a, const RBOperator& r, int steps);

/// Confirms ker(R^i) and ker((R+id)^i) are ideals in levels j for
/// i <= j <= steps. Weight-1 towers only.
Report kernel_chain(const Tower& t, int i);

/// True iff char_poly(R) = t^a (t+1)^b.
bool spectrum_check(const RBOperator& r);

struct SearchOptions {
  long long budget = 100000000;  // max p^(dim^2) candidates
};

/// All weight-lambda Rota-Baxter operators on a prime-field algebra, by
/// exhaustive lexicographic enumeration with per-pair early rejection.
std::vector<RBOperator> search_rb_exhaustive(const Algebra& a,
                                             const Scalar& weight,
                                             const SearchOptions& opts = {});

/// Builds the tower over a semisimple associative base and confirms no
/// level is nilpotent.
Report rb_tower_nonnilpotence(const Algebra& b, const RBOperator& r,
                              int steps);

}  // namespace postalg
