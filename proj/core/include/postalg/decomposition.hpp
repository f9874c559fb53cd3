#pragma once

#include "postalg/algebra.hpp"

namespace postalg {

/// An ambient algebra with two distinguished subalgebras. Construction
/// verifies that both subspaces are closed under the product and throws
/// SubstructureError (with a witness pair) otherwise.
class Decomposition {
 public:
  Decomposition(Algebra ambient, Subspace s1, Subspace s2);

  const Algebra& ambient() const { return ambient_; }
  const Subspace& s1() const { return s1_; }
  const Subspace& s2() const { return s2_; }

 private:
  Algebra ambient_;
  Subspace s1_, s2_;
};

struct DecompositionReport {
  bool is_sum = false;
  bool is_proper = false;
  bool is_direct = false;
  Subspace intersection;
};

DecompositionReport verify_decomposition(const Decomposition& d);

struct ComponentReport {
  Fingerprint fingerprint;
  bool abelian = false;
  /// Derived subalgebra semisimple and derived + center = whole space:
  /// the computable stand-in for "reductive" (Lie kind over Q only).
  bool reductive_split = false;
};

std::pair<ComponentReport, ComponentReport> classify_components(
    const Decomposition& d);

/// Verified so(7) = G2 + so-block instances ("B3=G2+B2", "B3=G2+B2T",
/// "B3=G2+D3") plus the optional "D4=B3+B3" behind enable_d4.
Decomposition onishchik_instance(const std::string& name,
                                 bool enable_d4 = false);

/// sl(n) x V(n) = sl(n) + phi(sl(n)) with phi = id + ad(e1+...+en):
/// a perfect non-semisimple algebra spanned by two semisimple subalgebras.
Decomposition counterexample(int n);

/// True iff [s1, s2] = 0. Requires a direct decomposition.
bool mutual_ideals_check(const Decomposition& d);

struct NilpotentSumReport {
  bool is_sum = false;
  NilpotencyResult component1;
  NilpotencyResult component2;
  NilpotencyResult ambient;
  /// Both components nilpotent, decomposition a sum, yet ambient not
  /// nilpotent: contradicts Kegel's theorem, so this must never fire.
  bool alarm = false;
};

NilpotentSumReport nilpotent_sum_check(const Decomposition& d);

}  // namespace postalg
