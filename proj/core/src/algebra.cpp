#include "postalg/algebra.hpp"

#include <stdexcept>

namespace postalg {

std::string kind_name(AlgebraKind kind) {
  switch (kind) {
    case AlgebraKind::Associative:
      return "assoc";
    case AlgebraKind::Lie:
      return "lie";
    case AlgebraKind::General:
      return "general";
  }
  return "general";
}

AlgebraKind kind_from_name(std::string_view name) {
  if (name == "assoc") return AlgebraKind::Associative;
  if (name == "lie") return AlgebraKind::Lie;
  if (name == "general") return AlgebraKind::General;
  throw std::invalid_argument("unknown algebra kind: " + std::string(name));
}

void ProductTable::check_index(int i, int j, int k) const {
  if (i < 0 || i >= dim_ || j < 0 || j >= dim_ || k < 0 || k >= dim_) {
    throw std::invalid_argument("structure constant index out of range");
  }
}

ProductTable ProductTable::from_entries(int dim, const FieldSpec& field,
                                        const std::vector<ScEntry>& entries) {
  ProductTable t(dim, field);
  for (const ScEntry& e : entries) {
    t.check_index(e.i, e.j, e.k);
    if (e.c.field() != field) {
      throw std::invalid_argument("structure constant field mismatch");
    }
    auto& row = t.rows_[{e.i, e.j}];
    for (const auto& [k, c] : row) {
      if (k == e.k) {
        throw std::invalid_argument("duplicate structure constant key");
      }
    }
    if (!e.c.is_zero()) row.emplace_back(e.k, e.c);
    if (row.empty()) t.rows_.erase({e.i, e.j});
  }
  for (auto& [key, row] : t.rows_) {
    std::sort(row.begin(), row.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
  }
  return t;
}

ProductTable ProductTable::from_bilinear(
    int dim, const FieldSpec& field,
    const std::function<Vec(int, int)>& products) {
  ProductTable t(dim, field);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      Vec w = products(i, j);
      for (int k = 0; k < dim; ++k) {
        const Scalar& c = w[static_cast<std::size_t>(k)];
        if (!c.is_zero()) t.rows_[{i, j}].emplace_back(k, c);
      }
    }
  }
  return t;
}

void ProductTable::set(int i, int j, int k, const Scalar& c) {
  check_index(i, j, k);
  if (c.field() != field_) {
    throw std::invalid_argument("structure constant field mismatch");
  }
  auto& row = rows_[{i, j}];
  auto it = std::find_if(row.begin(), row.end(),
                         [k](const auto& e) { return e.first == k; });
  if (c.is_zero()) {
    if (it != row.end()) row.erase(it);
  } else if (it != row.end()) {
    it->second = c;
  } else {
    row.emplace_back(k, c);
    std::sort(row.begin(), row.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
  }
  if (row.empty()) rows_.erase({i, j});
}

std::vector<ScEntry> ProductTable::entries() const {
  std::vector<ScEntry> out;
  for (const auto& [key, row] : rows_) {
    for (const auto& [k, c] : row) {
      out.push_back(ScEntry{key.first, key.second, k, c});
    }
  }
  return out;
}

Vec ProductTable::basis_product(int i, int j) const {
  check_index(i, j, 0);
  Vec w = zero_vec(dim_, field_);
  auto it = rows_.find({i, j});
  if (it != rows_.end()) {
    for (const auto& [k, c] : it->second) w[static_cast<std::size_t>(k)] = c;
  }
  return w;
}

Vec ProductTable::multiply(const Vec& u, const Vec& v) const {
  if (static_cast<int>(u.size()) != dim_ ||
      static_cast<int>(v.size()) != dim_) {
    throw std::invalid_argument("multiply: vector dimension mismatch");
  }
  Vec out = zero_vec(dim_, field_);
  for (const auto& [key, row] : rows_) {
    const Scalar& ui = u[static_cast<std::size_t>(key.first)];
    if (ui.is_zero()) continue;
    const Scalar& vj = v[static_cast<std::size_t>(key.second)];
    if (vj.is_zero()) continue;
    Scalar f = ui * vj;
    for (const auto& [k, c] : row) {
      out[static_cast<std::size_t>(k)] += f * c;
    }
  }
  return out;
}

Matrix ProductTable::left_action(const Vec& u) const {
  Matrix m(dim_, dim_, field_);
  for (int j = 0; j < dim_; ++j) {
    Vec w = multiply(u, unit_vec(dim_, j, field_));
    for (int k = 0; k < dim_; ++k) m.at(k, j) = w[static_cast<std::size_t>(k)];
  }
  return m;
}

Matrix ProductTable::right_action(const Vec& v) const {
  Matrix m(dim_, dim_, field_);
  for (int i = 0; i < dim_; ++i) {
    Vec w = multiply(unit_vec(dim_, i, field_), v);
    for (int k = 0; k < dim_; ++k) m.at(k, i) = w[static_cast<std::size_t>(k)];
  }
  return m;
}

bool ProductTable::operator==(const ProductTable& rhs) const {
  return dim_ == rhs.dim_ && field_ == rhs.field_ && rows_ == rhs.rows_;
}

ProductTable ProductTable::negated() const {
  return scaled(-Scalar(field_, 1));
}

ProductTable ProductTable::scaled(const Scalar& c) const {
  ProductTable out(dim_, field_);
  if (c.is_zero()) return out;
  out.rows_ = rows_;
  for (auto& [key, row] : out.rows_) {
    for (auto& [k, v] : row) v = c * v;
  }
  return out;
}

ProductTable ProductTable::plus(const ProductTable& rhs) const {
  if (dim_ != rhs.dim_ || field_ != rhs.field_) {
    throw std::invalid_argument("product table shape mismatch");
  }
  ProductTable out = *this;
  for (const auto& [key, row] : rhs.rows_) {
    for (const auto& [k, c] : row) {
      Vec cur = out.basis_product(key.first, key.second);
      out.set(key.first, key.second, k,
              cur[static_cast<std::size_t>(k)] + c);
    }
  }
  return out;
}

Algebra::Algebra(AlgebraKind kind, ProductTable table,
                 std::vector<std::string> labels)
    : kind_(kind), table_(std::move(table)), labels_(std::move(labels)) {
  if (!labels_.empty() &&
      static_cast<int>(labels_.size()) != table_.dim()) {
    throw std::invalid_argument("label count must match dimension");
  }
  if (kind_ == AlgebraKind::Associative) {
    Report r = check_identities(*this, LawKind::Associativity);
    if (!r.pass) {
      std::string message =
          "algebra tagged associative violates the law: " + r.summary();
      throw AlgebraLawError(std::move(message), std::move(r));
    }
  } else if (kind_ == AlgebraKind::Lie) {
    Report r = check_identities(*this, LawKind::Lie);
    if (!r.pass) {
      std::string message =
          "algebra tagged lie violates the law: " + r.summary();
      throw AlgebraLawError(std::move(message), std::move(r));
    }
  }
}

std::string Algebra::label(int i) const {
  if (i >= 0 && i < static_cast<int>(labels_.size())) {
    return labels_[static_cast<std::size_t>(i)];
  }
  return "b" + std::to_string(i);
}

Vec Algebra::multiply(const Vec& u, const Vec& v) const {
  return table_.multiply(u, v);
}

Algebra Algebra::with_kind(AlgebraKind kind) const {
  return Algebra(kind, table_, labels_);
}

Report check_identities(const Algebra& a, LawKind law) {
  Report report;
  const int n = a.dim();
  if (law == LawKind::Associativity) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        Vec ij = a.basis_product(i, j);
        for (int k = 0; k < n; ++k) {
          Vec lhs = a.multiply(ij, unit_vec(n, k, a.field()));
          Vec rhs = a.multiply(unit_vec(n, i, a.field()),
                               a.basis_product(j, k));
          Vec res = sub(lhs, rhs);
          if (!is_zero_vec(res)) {
            report.add_violation("assoc", {i, j, k}, std::move(res));
          }
        }
      }
    }
  } else {
    for (int i = 0; i < n; ++i) {
      Vec sq = a.basis_product(i, i);
      if (!is_zero_vec(sq)) {
        report.add_violation("antisym", {i, i}, std::move(sq));
      }
      for (int j = i + 1; j < n; ++j) {
        Vec res = add(a.basis_product(i, j), a.basis_product(j, i));
        if (!is_zero_vec(res)) {
          report.add_violation("antisym", {i, j}, std::move(res));
        }
      }
    }
    // With antisymmetry in place the Jacobi identity is alternating, so
    // i < j < k triples suffice.
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        for (int k = j + 1; k < n; ++k) {
          Vec jac = a.multiply(unit_vec(n, i, a.field()),
                               a.basis_product(j, k));
          jac = add(jac, a.multiply(unit_vec(n, j, a.field()),
                                    a.basis_product(k, i)));
          jac = add(jac, a.multiply(unit_vec(n, k, a.field()),
                                    a.basis_product(i, j)));
          if (!is_zero_vec(jac)) {
            report.add_violation("jacobi", {i, j, k}, std::move(jac));
          }
        }
      }
    }
  }
  report.sort_violations();
  return report;
}

Algebra commutator_algebra(const Algebra& a) {
  if (a.kind() != AlgebraKind::Associative) {
    throw std::invalid_argument("commutator_algebra needs an associative input");
  }
  const int n = a.dim();
  ProductTable t = ProductTable::from_bilinear(
      n, a.field(), [&a](int i, int j) {
        return sub(a.basis_product(i, j), a.basis_product(j, i));
      });
  return Algebra(AlgebraKind::Lie, std::move(t), a.labels());
}

bool substructure_test(const Algebra& a, const Subspace& s,
                       SubstructureMode mode) {
  if (s.ambient_dim() != a.dim() || s.field() != a.field()) {
    throw std::invalid_argument("substructure_test: dimension mismatch");
  }
  if (mode == SubstructureMode::Subalgebra) {
    for (int r = 0; r < s.dim(); ++r) {
      for (int q = 0; q < s.dim(); ++q) {
        if (!s.contains(a.multiply(s.basis_vector(r), s.basis_vector(q)))) {
          return false;
        }
      }
    }
    return true;
  }
  const bool lie = a.kind() == AlgebraKind::Lie;
  for (int i = 0; i < a.dim(); ++i) {
    Vec e = unit_vec(a.dim(), i, a.field());
    for (int r = 0; r < s.dim(); ++r) {
      if (!s.contains(a.multiply(e, s.basis_vector(r)))) return false;
      // Antisymmetry makes the right-sided condition redundant for Lie.
      if (!lie && !s.contains(a.multiply(s.basis_vector(r), e))) return false;
    }
  }
  return true;
}

Subspace centralizer(const Algebra& a, const Subspace& s) {
  if (s.ambient_dim() != a.dim() || s.field() != a.field()) {
    throw std::invalid_argument("centralizer: dimension mismatch");
  }
  const int n = a.dim();
  if (s.dim() == 0) return Subspace::full(n, a.field());
  // Stack one n x n condition block per basis vector of s.
  const bool lie = a.kind() == AlgebraKind::Lie;
  Matrix sys(n * s.dim(), n, a.field());
  for (int r = 0; r < s.dim(); ++r) {
    Vec v = s.basis_vector(r);
    Matrix cond = lie ? a.table().right_action(v)
                      : a.table().right_action(v) - a.table().left_action(v);
    // right_action(v) maps x -> x.v; for Lie x.v = 0 is the whole condition.
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) sys.at(r * n + i, j) = cond.at(i, j);
    }
  }
  auto [ker, im] = kernel_image(sys);
  return ker;
}

Subspace center(const Algebra& a) {
  return centralizer(a, Subspace::full(a.dim(), a.field()));
}

Subspace derived_subspace(const Algebra& a) {
  std::vector<Vec> gens;
  for (int i = 0; i < a.dim(); ++i) {
    for (int j = 0; j < a.dim(); ++j) {
      Vec w = a.basis_product(i, j);
      if (!is_zero_vec(w)) gens.push_back(std::move(w));
    }
  }
  return Subspace::span(gens, a.dim(), a.field());
}

BilinearForm bilinear_form(const Algebra& a, FormKind kind) {
  if (kind == FormKind::Killing && a.kind() != AlgebraKind::Lie) {
    throw std::invalid_argument("Killing form needs a Lie algebra");
  }
  if (kind == FormKind::AssocTrace && a.kind() != AlgebraKind::Associative) {
    throw std::invalid_argument("AssocTrace form needs an associative algebra");
  }
  const int n = a.dim();
  std::vector<Matrix> left;
  left.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    left.push_back(a.table().left_action(unit_vec(n, i, a.field())));
  }
  Matrix gram(n, n, a.field());
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      Scalar t = trace_product(left[static_cast<std::size_t>(i)],
                               left[static_cast<std::size_t>(j)]);
      gram.at(i, j) = t;
      gram.at(j, i) = t;
    }
  }
  return BilinearForm{std::move(gram)};
}

bool is_semisimple(const Algebra& a) {
  if (!a.field().is_rationals()) {
    throw UnsupportedFieldError(
        "semisimplicity criterion requires the rationals");
  }
  if (a.kind() == AlgebraKind::Lie) {
    return rank(bilinear_form(a, FormKind::Killing).gram) == a.dim();
  }
  if (a.kind() == AlgebraKind::Associative) {
    return rank(bilinear_form(a, FormKind::AssocTrace).gram) == a.dim();
  }
  throw std::invalid_argument("semisimplicity needs kind Lie or Associative");
}

Subspace radical_assoc(const Algebra& a) {
  if (a.kind() != AlgebraKind::Associative) {
    throw std::invalid_argument("radical_assoc needs an associative algebra");
  }
  if (!a.field().is_rationals()) {
    throw UnsupportedFieldError("radical_assoc requires the rationals");
  }
  auto [ker, im] = kernel_image(bilinear_form(a, FormKind::AssocTrace).gram);
  return ker;
}

NilpotencyResult is_nilpotent_assoc(const Algebra& a) {
  if (a.kind() != AlgebraKind::Associative) {
    throw std::invalid_argument(
        "is_nilpotent_assoc needs an associative algebra");
  }
  Subspace power = Subspace::full(a.dim(), a.field());  // A^1
  for (int k = 2; k <= a.dim() + 2; ++k) {
    std::vector<Vec> gens;
    for (int i = 0; i < a.dim(); ++i) {
      Vec e = unit_vec(a.dim(), i, a.field());
      for (int r = 0; r < power.dim(); ++r) {
        Vec w = a.multiply(e, power.basis_vector(r));
        if (!is_zero_vec(w)) gens.push_back(std::move(w));
      }
    }
    Subspace next = Subspace::span(gens, a.dim(), a.field());  // A^k
    if (next.dim() == 0) return NilpotencyResult{true, k};
    if (next == power) return NilpotencyResult{false, 0};
    power = std::move(next);
  }
  return NilpotencyResult{false, 0};  // descending chain must have stabilized
}

bool is_perfect_lie(const Algebra& a) {
  if (a.kind() != AlgebraKind::Lie) {
    throw std::invalid_argument("is_perfect_lie needs a Lie algebra");
  }
  return derived_subspace(a).is_full();
}

Algebra direct_sum(const Algebra& a, const Algebra& b) {
  if (a.field() != b.field()) {
    throw std::invalid_argument("direct_sum: field mismatch");
  }
  if (a.kind() != b.kind()) {
    throw std::invalid_argument("direct_sum: kind mismatch");
  }
  const int n = a.dim() + b.dim();
  std::vector<ScEntry> entries;
  for (const ScEntry& e : a.table().entries()) entries.push_back(e);
  for (const ScEntry& e : b.table().entries()) {
    entries.push_back(ScEntry{e.i + a.dim(), e.j + a.dim(), e.k + a.dim(), e.c});
  }
  std::vector<std::string> labels;
  if (!a.labels().empty() || !b.labels().empty()) {
    for (int i = 0; i < a.dim(); ++i) labels.push_back(a.label(i) + "'");
    for (int i = 0; i < b.dim(); ++i) labels.push_back(b.label(i) + "\"");
  }
  return Algebra(a.kind(),
                 ProductTable::from_entries(n, a.field(), entries),
                 std::move(labels));
}

Algebra restrict_to(const Algebra& a, const Subspace& s) {
  if (s.ambient_dim() != a.dim() || s.field() != a.field()) {
    throw std::invalid_argument("restrict_to: dimension mismatch");
  }
  const int m = s.dim();
  ProductTable t(m, a.field());
  for (int r = 0; r < m; ++r) {
    for (int q = 0; q < m; ++q) {
      Vec w = a.multiply(s.basis_vector(r), s.basis_vector(q));
      auto coords = s.coordinates(w);
      if (!coords) {
        throw SubstructureError("subspace is not closed under the product", r,
                                q, std::move(w));
      }
      for (int k = 0; k < m; ++k) {
        const Scalar& c = (*coords)[static_cast<std::size_t>(k)];
        if (!c.is_zero()) t.set(r, q, k, c);
      }
    }
  }
  return Algebra(a.kind(), std::move(t));
}

Fingerprint invariant_fingerprint(const Algebra& a) {
  Fingerprint fp;
  fp.dim = a.dim();
  fp.center_dim = center(a).dim();
  fp.derived_dim = derived_subspace(a).dim();
  if (a.field().is_rationals() && (a.kind() == AlgebraKind::Lie ||
                                   a.kind() == AlgebraKind::Associative)) {
    fp.semisimple = is_semisimple(a);
  }
  if (a.kind() == AlgebraKind::Associative) {
    NilpotencyResult nil = is_nilpotent_assoc(a);
    fp.nilpotent = nil.nilpotent;
    if (nil.nilpotent) fp.nilpotency_index = nil.index;
  }
  if (a.kind() == AlgebraKind::Lie) {
    fp.perfect = is_perfect_lie(a);
  }
  if (a.kind() == AlgebraKind::Lie) {
    fp.gram_char_poly = char_poly(bilinear_form(a, FormKind::Killing).gram);
  } else if (a.kind() == AlgebraKind::Associative) {
    fp.gram_char_poly = char_poly(bilinear_form(a, FormKind::AssocTrace).gram);
  }
  return fp;
}

bool same_invariants(const Fingerprint& a, const Fingerprint& b) {
  return a.dim == b.dim && a.center_dim == b.center_dim &&
         a.derived_dim == b.derived_dim && a.semisimple == b.semisimple &&
         a.nilpotent == b.nilpotent && a.perfect == b.perfect;
}

}  // namespace postalg
