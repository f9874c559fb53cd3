#pragma once

#include <optional>
#include <utility>

#include "postalg/linalg.hpp"

namespace postalg {

/// Subspace of F^n identified by its canonical RREF basis: two equal
/// subspaces hold bit-identical basis matrices.
class Subspace {
 public:
  Subspace() = default;  // {0} in Q^0

  static Subspace zero(int ambient_dim, const FieldSpec& field);
  static Subspace full(int ambient_dim, const FieldSpec& field);
  /// Row space of m, canonicalized.
  static Subspace row_space(const Matrix& m);
  static Subspace span(const std::vector<Vec>& vectors, int ambient_dim,
                       const FieldSpec& field);

  int ambient_dim() const { return basis_.cols(); }
  int dim() const { return basis_.rows(); }
  const FieldSpec& field() const { return basis_.field(); }
  /// dim x ambient matrix in RREF with strictly increasing pivot columns.
  const Matrix& basis() const { return basis_; }
  Vec basis_vector(int i) const { return basis_.row(i); }

  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_dim(); }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  /// Coefficients of v in the canonical basis rows, or nullopt if v is
  /// outside the subspace.
  std::optional<Vec> coordinates(const Vec& v) const;

  bool operator==(const Subspace& rhs) const { return basis_ == rhs.basis_; }
  bool operator!=(const Subspace& rhs) const { return !(*this == rhs); }

 private:
  explicit Subspace(Matrix basis) : basis_(std::move(basis)) {}

  Matrix basis_;  // rows form the canonical basis
  std::vector<int> pivots_;

  void recompute_pivots();
};

Subspace subspace_sum(const Subspace& s, const Subspace& t);
Subspace subspace_intersect(const Subspace& s, const Subspace& t);

/// Kernel and image (column space) of m, both canonical.
std::pair<Subspace, Subspace> kernel_image(const Matrix& m);

}  // namespace postalg
