#pragma once

#include <functional>
#include <map>
#include <optional>

#include "postalg/report.hpp"
#include "postalg/subspace.hpp"

namespace postalg {

enum class AlgebraKind { Associative, Lie, General };

std::string kind_name(AlgebraKind kind);
AlgebraKind kind_from_name(std::string_view name);

/// One nonzero structure constant: (b_i . b_j) has coefficient c on b_k.
struct ScEntry {
  int i, j, k;
  Scalar c;
};

/// Sparse structure-constant tensor of one bilinear product on F^dim.
class ProductTable {
 public:
  ProductTable() = default;
  ProductTable(int dim, const FieldSpec& field) : dim_(dim), field_(field) {}
  static ProductTable from_entries(int dim, const FieldSpec& field,
                                   const std::vector<ScEntry>& entries);
  /// Evaluates products(i, j) on all basis pairs and keeps the nonzeros.
  static ProductTable from_bilinear(
      int dim, const FieldSpec& field,
      const std::function<Vec(int, int)>& products);

  int dim() const { return dim_; }
  const FieldSpec& field() const { return field_; }

  /// Sets (b_i b_j)_k = c; zero deletes the entry.
  void set(int i, int j, int k, const Scalar& c);

  std::vector<ScEntry> entries() const;  // sorted by (i, j, k)
  bool is_zero() const { return rows_.empty(); }

  Vec basis_product(int i, int j) const;
  Vec multiply(const Vec& u, const Vec& v) const;

  /// Matrix of v -> u.v.
  Matrix left_action(const Vec& u) const;
  /// Matrix of u -> u.v.
  Matrix right_action(const Vec& v) const;

  bool operator==(const ProductTable& rhs) const;
  bool operator!=(const ProductTable& rhs) const { return !(*this == rhs); }

  ProductTable negated() const;
  ProductTable scaled(const Scalar& c) const;
  ProductTable plus(const ProductTable& rhs) const;

 private:
  int dim_ = 0;
  FieldSpec field_;
  // (i, j) -> sorted list of (k, c); all c nonzero.
  std::map<std::pair<int, int>, std::vector<std::pair<int, Scalar>>> rows_;

  void check_index(int i, int j, int k) const;
};

/// Finite-dimensional algebra given by structure constants. Constructing
/// with kind Associative or Lie verifies the corresponding law and throws
/// AlgebraLawError on failure; kind General carries no law.
class Algebra {
 public:
  Algebra(AlgebraKind kind, ProductTable table,
          std::vector<std::string> labels = {});

  int dim() const { return table_.dim(); }
  const FieldSpec& field() const { return table_.field(); }
  AlgebraKind kind() const { return kind_; }
  const ProductTable& table() const { return table_; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(int i) const;

  Vec multiply(const Vec& u, const Vec& v) const;
  Vec basis_product(int i, int j) const { return table_.basis_product(i, j); }

  /// Same structure constants under a fresh kind tag (law re-verified).
  Algebra with_kind(AlgebraKind kind) const;

 private:
  AlgebraKind kind_;
  ProductTable table_;
  std::vector<std::string> labels_;
};

enum class LawKind { Associativity, Lie };
enum class SubstructureMode { Subalgebra, Ideal };
enum class FormKind { Killing, AssocTrace };

struct BilinearForm {
  Matrix gram;
};

struct NilpotencyResult {
  bool nilpotent = false;
  int index = 0;  // smallest k with A^k = 0; meaningful iff nilpotent
};

struct Fingerprint {
  int dim = 0;
  int center_dim = 0;
  int derived_dim = 0;
  std::optional<bool> semisimple;          // Q and kind Lie/Associative only
  std::optional<bool> nilpotent;           // kind Associative only
  std::optional<int> nilpotency_index;     // set iff nilpotent == true
  std::optional<bool> perfect;             // kind Lie only
  std::vector<Scalar> gram_char_poly;      // Killing / AssocTrace char poly
};

/// Basis-change invariants only; Gram char-polys are reported, not compared.
bool same_invariants(const Fingerprint& a, const Fingerprint& b);

Report check_identities(const Algebra& a, LawKind law);

/// A^- : same space, bracket x y - y x. Input must be associative.
Algebra commutator_algebra(const Algebra& a);

bool substructure_test(const Algebra& a, const Subspace& s,
                       SubstructureMode mode);

/// Lie kind: {x : x.v = 0 for all v in s}; Associative/General kind:
/// {x : x.v = v.x for all v in s}.
Subspace centralizer(const Algebra& a, const Subspace& s);
Subspace center(const Algebra& a);

/// Span of all basis products (derived subalgebra for Lie, A^2 for assoc).
Subspace derived_subspace(const Algebra& a);

BilinearForm bilinear_form(const Algebra& a, FormKind kind);

/// Cartan criterion (Lie) / trace-form kernel (associative); rationals only.
bool is_semisimple(const Algebra& a);

/// Kernel of the AssocTrace Gram matrix = Jacobson radical in char 0.
Subspace radical_assoc(const Algebra& a);

NilpotencyResult is_nilpotent_assoc(const Algebra& a);

bool is_perfect_lie(const Algebra& a);

Algebra direct_sum(const Algebra& a, const Algebra& b);

/// Structure constants of the induced product on the canonical basis of s.
/// Throws SubstructureError when s is not closed under the product.
Algebra restrict_to(const Algebra& a, const Subspace& s);

Fingerprint invariant_fingerprint(const Algebra& a);

}  // namespace postalg
