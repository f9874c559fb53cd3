#include "postalg/catalog.hpp"

#include <algorithm>
#include <stdexcept>

namespace postalg {

namespace {

Vec flatten(const Matrix& m) {
  Vec v;
  v.reserve(static_cast<std::size_t>(m.rows() * m.cols()));
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j));
  }
  return v;
}

/// Exact coordinates with respect to a fixed, linearly independent list of
/// flattened matrices. One RREF up front, O(n^2) per query afterwards.
class CoordinateSolver {
 public:
  CoordinateSolver(const std::vector<Matrix>& basis, const FieldSpec& field) {
    d_ = static_cast<int>(basis.size());
    amb_ = basis.empty() ? 0 : basis[0].rows() * basis[0].cols();
    Matrix aug(amb_, d_ + amb_, field);
    for (int j = 0; j < d_; ++j) {
      Vec col = flatten(basis[static_cast<std::size_t>(j)]);
      for (int i = 0; i < amb_; ++i) {
        aug.at(i, j) = col[static_cast<std::size_t>(i)];
      }
    }
    for (int i = 0; i < amb_; ++i) {
      aug.at(i, d_ + i) = Scalar(field, 1);
    }
    Matrix r = rref(aug);
    // Basis columns are independent, so the left block reduces to [I; 0]
    // and the right block is the change-of-coordinates transform.
    for (int i = 0; i < d_; ++i) {
      if (!r.at(i, i).is_one()) {
        throw std::invalid_argument("matrix basis is linearly dependent");
      }
    }
    transform_ = Matrix(amb_, amb_, field);
    for (int i = 0; i < amb_; ++i) {
      for (int j = 0; j < amb_; ++j) transform_.at(i, j) = r.at(i, d_ + j);
    }
  }

  Vec coordinates(const Matrix& m) const {
    Vec t = transform_.apply(flatten(m));
    for (int i = d_; i < amb_; ++i) {
      if (!t[static_cast<std::size_t>(i)].is_zero()) {
        throw std::invalid_argument("matrix outside the basis span");
      }
    }
    t.resize(static_cast<std::size_t>(d_));
    return t;
  }

 private:
  int d_ = 0;
  int amb_ = 0;
  Matrix transform_;
};

Algebra lie_from_matrix_basis(const std::vector<Matrix>& basis,
                              const FieldSpec& field,
                              std::vector<std::string> labels) {
  const int d = static_cast<int>(basis.size());
  CoordinateSolver solver(basis, field);
  ProductTable t(d, field);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      if (i == j) continue;
      Matrix bracket = basis[static_cast<std::size_t>(i)] *
                           basis[static_cast<std::size_t>(j)] -
                       basis[static_cast<std::size_t>(j)] *
                           basis[static_cast<std::size_t>(i)];
      Vec coords = solver.coordinates(bracket);
      for (int k = 0; k < d; ++k) {
        const Scalar& c = coords[static_cast<std::size_t>(k)];
        if (!c.is_zero()) t.set(i, j, k, c);
      }
    }
  }
  return Algebra(AlgebraKind::Lie, std::move(t), std::move(labels));
}

Matrix unit_matrix(int n, int i, int j, const FieldSpec& field) {
  Matrix m(n, n, field);
  m.at(i, j) = Scalar(field, 1);
  return m;
}

std::vector<Matrix> gl_basis(int n, const FieldSpec& field) {
  std::vector<Matrix> basis;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) basis.push_back(unit_matrix(n, i, j, field));
  }
  return basis;
}

// Strict uppers (row-major), then H_k = E_kk - E_{k+1,k+1}, then strict
// lowers; for n = 2 this is the (e, h, f) ordering.
std::vector<Matrix> sl_basis(int n, const FieldSpec& field) {
  std::vector<Matrix> basis;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) basis.push_back(unit_matrix(n, i, j, field));
  }
  for (int k = 0; k + 1 < n; ++k) {
    Matrix h(n, n, field);
    h.at(k, k) = Scalar(field, 1);
    h.at(k + 1, k + 1) = Scalar(field, -1);
    basis.push_back(h);
  }
  for (int j = 0; j < n; ++j) {
    for (int i = j + 1; i < n; ++i) basis.push_back(unit_matrix(n, i, j, field));
  }
  return basis;
}

std::vector<Matrix> so_basis(int n, const FieldSpec& field) {
  std::vector<Matrix> basis;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      Matrix m(n, n, field);
      m.at(i, j) = Scalar(field, 1);
      m.at(j, i) = Scalar(field, -1);
      basis.push_back(m);
    }
  }
  return basis;
}

std::vector<Matrix> sp_basis(int size, const FieldSpec& field) {
  const int n = size / 2;
  std::vector<Matrix> basis;
  // Block [[A, B], [C, -A^T]] with B, C symmetric.
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      Matrix m(size, size, field);
      m.at(a, b) = Scalar(field, 1);
      m.at(n + b, n + a) = Scalar(field, -1);
      basis.push_back(m);
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = a; b < n; ++b) {
      Matrix m(size, size, field);
      m.at(a, n + b) = Scalar(field, 1);
      m.at(b, n + a) = Scalar(field, 1);
      basis.push_back(m);
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = a; b < n; ++b) {
      Matrix m(size, size, field);
      m.at(n + a, b) = Scalar(field, 1);
      m.at(n + b, a) = Scalar(field, 1);
      basis.push_back(m);
    }
  }
  return basis;
}

int so_pair_index(int i, int j, int n) {
  // Index of the pair (i, j), i < j, in lexicographic order.
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

// Cayley-Dickson doubling with gamma = -1:
//   (a, b)(c, d) = (ac - d*b, da + bc*),   (a, b)* = (a*, -b).
Vec cd_conj(const Vec& x, const FieldSpec& field) {
  Vec out = x;
  for (std::size_t i = 1; i < out.size(); ++i) out[i] = -out[i];
  (void)field;
  return out;
}

Vec cd_mult(const Vec& x, const Vec& y, const FieldSpec& field) {
  const std::size_t n = x.size();
  if (n == 1) return Vec{x[0] * y[0]};
  const std::size_t h = n / 2;
  Vec a(x.begin(), x.begin() + h), b(x.begin() + h, x.end());
  Vec c(y.begin(), y.begin() + h), d(y.begin() + h, y.end());
  Vec first = sub(cd_mult(a, c, field),
                  cd_mult(cd_conj(d, field), b, field));
  Vec second = add(cd_mult(d, a, field),
                   cd_mult(b, cd_conj(c, field), field));
  first.insert(first.end(), second.begin(), second.end());
  return first;
}

}  // namespace

Algebra make_matrix_algebra(int n, const FieldSpec& field) {
  if (n < 1) throw std::invalid_argument("make_matrix_algebra needs n >= 1");
  const int dim = n * n;
  ProductTable t(dim, field);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int l = 0; l < n; ++l) {
        // e_ij e_jl = e_il
        t.set(i * n + j, j * n + l, i * n + l, Scalar(field, 1));
      }
    }
  }
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
    }
  }
  return Algebra(AlgebraKind::Associative, std::move(t), std::move(labels));
}

LieFamily lie_family_from_name(std::string_view name) {
  if (name == "gl") return LieFamily::gl;
  if (name == "sl") return LieFamily::sl;
  if (name == "so") return LieFamily::so;
  if (name == "sp") return LieFamily::sp;
  throw std::invalid_argument("unknown Lie family: " + std::string(name));
}

Algebra make_classical_lie(LieFamily family, int n, const FieldSpec& field) {
  switch (family) {
    case LieFamily::gl: {
      if (n < 1) throw std::invalid_argument("gl needs n >= 1");
      std::vector<std::string> labels;
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
        }
      }
      return lie_from_matrix_basis(gl_basis(n, field), field, std::move(labels));
    }
    case LieFamily::sl: {
      if (n < 2) throw std::invalid_argument("sl needs n >= 2");
      std::vector<std::string> labels;
      if (n == 2) labels = {"e", "h", "f"};
      return lie_from_matrix_basis(sl_basis(n, field), field, std::move(labels));
    }
    case LieFamily::so: {
      if (n < 2) throw std::invalid_argument("so needs n >= 2");
      std::vector<std::string> labels;
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
          labels.push_back("A" + std::to_string(i + 1) + std::to_string(j + 1));
        }
      }
      return lie_from_matrix_basis(so_basis(n, field), field, std::move(labels));
    }
    case LieFamily::sp: {
      if (n < 2 || n % 2 != 0) {
        throw std::invalid_argument("sp needs an even size 2n >= 2");
      }
      return lie_from_matrix_basis(sp_basis(n, field), field, {});
    }
  }
  throw std::invalid_argument("unknown Lie family");
}

Algebra make_octonions(const FieldSpec& field) {
  if (field.is_prime_field() && field.p == 2) {
    throw UnsupportedFieldError("octonions need characteristic != 2");
  }
  ProductTable t(8, field);
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      Vec w = cd_mult(unit_vec(8, i, field), unit_vec(8, j, field), field);
      for (int k = 0; k < 8; ++k) {
        if (!w[static_cast<std::size_t>(k)].is_zero()) {
          t.set(i, j, k, w[static_cast<std::size_t>(k)]);
        }
      }
    }
  }
  std::vector<std::string> labels;
  for (int i = 0; i < 8; ++i) labels.push_back("e" + std::to_string(i));
  return Algebra(AlgebraKind::General, std::move(t), std::move(labels));
}

Embedding make_g2(const FieldSpec& field) {
  if (!field.is_rationals()) {
    throw UnsupportedFieldError("make_g2 requires the rationals");
  }
  Algebra oct = make_octonions(field);
  // Unknown 8x8 matrix D, row-major: D(e_c) has e_r coefficient D[r*8+c].
  // One equation per pair (i, j) and output coordinate l:
  //   sum_k c_ijk D[l][k] = sum_a D[a][i] c_ajl + sum_b D[b][j] c_ibl.
  Matrix sys(8 * 8 * 8, 64, field);
  auto sc = [&oct](int i, int j, int k) {
    return oct.basis_product(i, j)[static_cast<std::size_t>(k)];
  };
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      for (int l = 0; l < 8; ++l) {
        const int row = (i * 8 + j) * 8 + l;
        for (int c = 0; c < 8; ++c) {
          sys.at(row, l * 8 + c) += sc(i, j, c);
        }
        for (int a = 0; a < 8; ++a) {
          sys.at(row, a * 8 + i) -= sc(a, j, l);
        }
        for (int b = 0; b < 8; ++b) {
          sys.at(row, b * 8 + j) -= sc(i, b, l);
        }
      }
    }
  }
  auto [ker, im] = kernel_image(sys);
  Algebra so7 = make_classical_lie(LieFamily::so, 7, field);
  std::vector<Vec> coords;
  for (int r = 0; r < ker.dim(); ++r) {
    Vec d = ker.basis_vector(r);
    auto entry = [&d](int a, int b) -> const Scalar& {
      return d[static_cast<std::size_t>(a * 8 + b)];
    };
    for (int a = 0; a < 8; ++a) {
      if (!entry(a, 0).is_zero() || !entry(0, a).is_zero()) {
        throw std::logic_error("octonion derivation does not fix the unit");
      }
    }
    Vec v = zero_vec(so7.dim(), field);
    for (int a = 1; a < 8; ++a) {
      for (int b = a + 1; b < 8; ++b) {
        if (entry(a, b) != -entry(b, a)) {
          throw std::logic_error("octonion derivation is not skew");
        }
        v[static_cast<std::size_t>(so_pair_index(a - 1, b - 1, 7))] =
            entry(a, b);
      }
    }
    coords.push_back(std::move(v));
  }
  Subspace image = Subspace::span(coords, so7.dim(), field);
  return Embedding{"g2", std::move(so7), std::move(image)};
}

Algebra make_semidirect_sln_vn(int n, const FieldSpec& field) {
  if (n < 2) throw std::invalid_argument("make_semidirect_sln_vn needs n >= 2");
  std::vector<Matrix> basis = sl_basis(n, field);
  const int m = static_cast<int>(basis.size());
  const int dim = m + n;
  Algebra sln = make_classical_lie(LieFamily::sl, n, field);
  ProductTable t(dim, field);
  for (const ScEntry& e : sln.table().entries()) t.set(e.i, e.j, e.k, e.c);
  for (int b = 0; b < m; ++b) {
    const Matrix& x = basis[static_cast<std::size_t>(b)];
    for (int j = 0; j < n; ++j) {
      for (int i = 0; i < n; ++i) {
        const Scalar& c = x.at(i, j);
        if (c.is_zero()) continue;
        t.set(b, m + j, m + i, c);
        t.set(m + j, b, m + i, -c);
      }
    }
  }
  std::vector<std::string> labels;
  for (int i = 0; i < m; ++i) labels.push_back(sln.label(i));
  for (int j = 0; j < n; ++j) labels.push_back("v" + std::to_string(j + 1));
  return Algebra(AlgebraKind::Lie, std::move(t), std::move(labels));
}

Embedding embed_so_stabilizer(int k, int n) {
  if (k < 1 || k > n) throw std::invalid_argument("need 1 <= k <= n");
  const FieldSpec field = FieldSpec::rationals();
  Algebra son = make_classical_lie(LieFamily::so, n, field);
  std::vector<Vec> gens;
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      gens.push_back(unit_vec(son.dim(), so_pair_index(i, j, n), field));
    }
  }
  Subspace image = Subspace::span(gens, son.dim(), field);
  return Embedding{"so" + std::to_string(k), std::move(son), std::move(image)};
}

Embedding embed_so_stabilizer_plus_so2(int k, int n) {
  if (k < 1 || k + 2 > n) throw std::invalid_argument("need k + 2 <= n");
  Embedding base = embed_so_stabilizer(k, n);
  const FieldSpec field = FieldSpec::rationals();
  std::vector<Vec> gens;
  for (int r = 0; r < base.image.dim(); ++r) {
    gens.push_back(base.image.basis_vector(r));
  }
  gens.push_back(
      unit_vec(base.target.dim(), so_pair_index(k, k + 1, n), field));
  Subspace image = Subspace::span(gens, base.target.dim(), field);
  return Embedding{"so" + std::to_string(k) + "+so2", std::move(base.target),
                   std::move(image)};
}

Algebra make_diagonal_algebra(int n, const FieldSpec& field) {
  if (n < 1) throw std::invalid_argument("make_diagonal_algebra needs n >= 1");
  ProductTable t(n, field);
  for (int i = 0; i < n; ++i) t.set(i, i, i, Scalar(field, 1));
  return Algebra(AlgebraKind::Associative, std::move(t));
}

namespace {

struct ParsedName {
  std::string head;
  std::vector<int> args;
  bool plus_two = false;  // "so-stab:<k>+2:<n>"
};

ParsedName parse_catalog_name(const std::string& name) {
  ParsedName out;
  std::size_t pos = name.find(':');
  out.head = name.substr(0, pos);
  while (pos != std::string::npos) {
    std::size_t next = name.find(':', pos + 1);
    std::string tok = name.substr(pos + 1, next == std::string::npos
                                               ? std::string::npos
                                               : next - pos - 1);
    if (tok.size() > 2 && tok.substr(tok.size() - 2) == "+2") {
      out.plus_two = true;
      tok = tok.substr(0, tok.size() - 2);
    }
    try {
      out.args.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw std::invalid_argument("bad catalog name: " + name);
    }
    pos = next;
  }
  return out;
}

}  // namespace

std::vector<CatalogEntry> catalog_list() {
  std::vector<CatalogEntry> entries = {
      {"Mn:1", 1},           {"Mn:2", 4},
      {"Mn:3", 9},           {"diag:2", 2},
      {"diag:3", 3},         {"g2", 14},
      {"gl:2", 4},           {"gl:3", 9},
      {"oct", 8},            {"sl-semidirect:2", 5},
      {"sl-semidirect:3", 11}, {"sl:2", 3},
      {"sl:3", 8},           {"so-stab:5+2:7", 11},
      {"so-stab:5:7", 10},   {"so-stab:6:7", 15},
      {"so:3", 3},           {"so:4", 6},
      {"so:5", 10},          {"so:6", 15},
      {"so:7", 21},          {"so:8", 28},
      {"sp:2", 3},           {"sp:4", 10},
  };
  std::sort(entries.begin(), entries.end(),
            [](const CatalogEntry& a, const CatalogEntry& b) {
              return a.name < b.name;
            });
  return entries;
}

Algebra catalog_make(const std::string& name, const FieldSpec& field) {
  if (name == "oct") return make_octonions(field);
  if (name == "g2") {
    Embedding g2 = make_g2(field);
    return restrict_to(g2.target, g2.image);
  }
  ParsedName p = parse_catalog_name(name);
  if (p.head == "Mn" && p.args.size() == 1) {
    return make_matrix_algebra(p.args[0], field);
  }
  if (p.head == "diag" && p.args.size() == 1) {
    return make_diagonal_algebra(p.args[0], field);
  }
  if ((p.head == "gl" || p.head == "sl" || p.head == "so" || p.head == "sp") &&
      p.args.size() == 1) {
    return make_classical_lie(lie_family_from_name(p.head), p.args[0], field);
  }
  if (p.head == "sl-semidirect" && p.args.size() == 1) {
    return make_semidirect_sln_vn(p.args[0], field);
  }
  if (p.head == "so-stab" && p.args.size() == 2) {
    if (!field.is_rationals()) {
      throw UnsupportedFieldError("so-stab embeddings are built over Q");
    }
    Embedding e = p.plus_two
                      ? embed_so_stabilizer_plus_so2(p.args[0], p.args[1])
                      : embed_so_stabilizer(p.args[0], p.args[1]);
    return restrict_to(e.target, e.image);
  }
  throw std::invalid_argument("unknown catalog name: " + name);
}

}  // namespace postalg
