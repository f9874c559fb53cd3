#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "postalg/field.hpp"

namespace postalg {

/// One failed identity instance: which law, at which basis index tuple,
/// with the exact residual vector (lhs - rhs).
struct Violation {
  std::string identity;
  std::vector<int> indices;
  Vec residual;
};

struct Report {
  bool pass = true;
  std::vector<Violation> violations;

  void add_violation(std::string identity, std::vector<int> indices,
                     Vec residual);
  void merge(const Report& other);
  /// Lexicographic by (identity, indices); merges become order-independent.
  void sort_violations();
  std::string summary() const;
};

/// An Algebra's declared kind contradicts its structure constants.
class AlgebraLawError : public std::runtime_error {
 public:
  AlgebraLawError(std::string message, Report report);
  const Report& report() const { return report_; }

 private:
  Report report_;
};

/// A subspace fails to be closed under the product; carries the witness pair.
class SubstructureError : public std::runtime_error {
 public:
  SubstructureError(std::string message, int i, int j, Vec residual);
  int witness_i() const { return i_; }
  int witness_j() const { return j_; }
  const Vec& residual() const { return residual_; }

 private:
  int i_, j_;
  Vec residual_;
};

/// Operation not defined over the given field (e.g. semisimplicity over F_p).
class UnsupportedFieldError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace postalg
