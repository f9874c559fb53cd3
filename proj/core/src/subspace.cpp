#include "postalg/subspace.hpp"

#include <stdexcept>

namespace postalg {

void Subspace::recompute_pivots() {
  pivots_.clear();
  for (int i = 0; i < basis_.rows(); ++i) {
    for (int j = 0; j < basis_.cols(); ++j) {
      if (!basis_.at(i, j).is_zero()) {
        pivots_.push_back(j);
        break;
      }
    }
  }
}

Subspace Subspace::zero(int ambient_dim, const FieldSpec& field) {
  return Subspace(Matrix(0, ambient_dim, field));
}

Subspace Subspace::full(int ambient_dim, const FieldSpec& field) {
  Subspace s(Matrix::identity(ambient_dim, field));
  s.recompute_pivots();
  return s;
}

Subspace Subspace::row_space(const Matrix& m) {
  Matrix r = rref(m);
  int nonzero = 0;
  for (int i = 0; i < r.rows(); ++i) {
    bool any = false;
    for (int j = 0; j < r.cols(); ++j) {
      if (!r.at(i, j).is_zero()) {
        any = true;
        break;
      }
    }
    if (any) ++nonzero;
    // RREF puts zero rows last, so the first all-zero row ends the basis.
    if (!any) break;
  }
  Matrix basis(nonzero, r.cols(), r.field());
  for (int i = 0; i < nonzero; ++i) {
    for (int j = 0; j < r.cols(); ++j) basis.at(i, j) = r.at(i, j);
  }
  Subspace s(std::move(basis));
  s.recompute_pivots();
  return s;
}

Subspace Subspace::span(const std::vector<Vec>& vectors, int ambient_dim,
                        const FieldSpec& field) {
  return row_space(Matrix::from_rows(vectors, ambient_dim, field));
}

bool Subspace::contains(const Vec& v) const {
  return coordinates(v).has_value();
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_dim() != ambient_dim()) return false;
  for (int i = 0; i < other.dim(); ++i) {
    if (!contains(other.basis_vector(i))) return false;
  }
  return true;
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
  if (static_cast<int>(v.size()) != ambient_dim()) {
    throw std::invalid_argument("ambient dimension mismatch");
  }
  // RREF basis: the coefficient of row r is v[pivot_r]; v belongs to the
  // subspace iff the residual after subtracting those multiples is zero.
  Vec coords;
  coords.reserve(pivots_.size());
  Vec residual = v;
  for (std::size_t r = 0; r < pivots_.size(); ++r) {
    Scalar c = residual[static_cast<std::size_t>(pivots_[r])];
    coords.push_back(c);
    if (c.is_zero()) continue;
    for (int j = pivots_[r]; j < ambient_dim(); ++j) {
      residual[static_cast<std::size_t>(j)] -=
          c * basis_.at(static_cast<int>(r), j);
    }
  }
  if (!is_zero_vec(residual)) return std::nullopt;
  return coords;
}

Subspace subspace_sum(const Subspace& s, const Subspace& t) {
  if (s.ambient_dim() != t.ambient_dim() || s.field() != t.field()) {
    throw std::invalid_argument("subspace_sum: ambient mismatch");
  }
  Matrix stacked(s.dim() + t.dim(), s.ambient_dim(), s.field());
  for (int i = 0; i < s.dim(); ++i) {
    for (int j = 0; j < s.ambient_dim(); ++j) {
      stacked.at(i, j) = s.basis().at(i, j);
    }
  }
  for (int i = 0; i < t.dim(); ++i) {
    for (int j = 0; j < s.ambient_dim(); ++j) {
      stacked.at(s.dim() + i, j) = t.basis().at(i, j);
    }
  }
  return Subspace::row_space(stacked);
}

Subspace subspace_intersect(const Subspace& s, const Subspace& t) {
  if (s.ambient_dim() != t.ambient_dim() || s.field() != t.field()) {
    throw std::invalid_argument("subspace_intersect: ambient mismatch");
  }
  const int n = s.ambient_dim();
  const int k = s.dim(), m = t.dim();
  // v in both spaces: v = S^T a = T^T b, so (a, b) lies in the kernel of
  // [S^T | -T^T]; the intersection is the image of those a through S^T.
  Matrix block(n, k + m, s.field());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < k; ++j) block.at(i, j) = s.basis().at(j, i);
    for (int j = 0; j < m; ++j) block.at(i, k + j) = -t.basis().at(j, i);
  }
  auto [ker, im] = kernel_image(block);
  std::vector<Vec> gens;
  for (int r = 0; r < ker.dim(); ++r) {
    Vec ab = ker.basis_vector(r);
    Vec v = zero_vec(n, s.field());
    for (int j = 0; j < k; ++j) {
      const Scalar& aj = ab[static_cast<std::size_t>(j)];
      if (aj.is_zero()) continue;
      for (int c = 0; c < n; ++c) {
        v[static_cast<std::size_t>(c)] += aj * s.basis().at(j, c);
      }
    }
    gens.push_back(std::move(v));
  }
  return Subspace::span(gens, n, s.field());
}

std::pair<Subspace, Subspace> kernel_image(const Matrix& m) {
  Matrix r = rref(m);
  std::vector<int> pivot_cols;
  std::vector<int> pivot_row_of_col(static_cast<std::size_t>(m.cols()), -1);
  for (int i = 0; i < r.rows(); ++i) {
    for (int j = 0; j < r.cols(); ++j) {
      if (!r.at(i, j).is_zero()) {
        pivot_cols.push_back(j);
        pivot_row_of_col[static_cast<std::size_t>(j)] = i;
        break;
      }
    }
  }
  // Kernel: one generator per free column.
  std::vector<Vec> ker_gens;
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (int c : pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    Vec v = zero_vec(m.cols(), m.field());
    v[static_cast<std::size_t>(free)] = Scalar(m.field(), 1);
    for (int c : pivot_cols) {
      int i = pivot_row_of_col[static_cast<std::size_t>(c)];
      v[static_cast<std::size_t>(c)] = -r.at(i, free);
    }
    ker_gens.push_back(std::move(v));
  }
  Subspace kernel = Subspace::span(ker_gens, m.cols(), m.field());
  Subspace image = Subspace::row_space(m.transpose());
  return {kernel, image};
}

}  // namespace postalg
