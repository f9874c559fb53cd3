#include "postalg/linalg.hpp"

#include <stdexcept>

namespace postalg {

Matrix rref(const Matrix& m) {
  Matrix a = m;
  const int rows = a.rows(), cols = a.cols();
  int pivot_row = 0;
  for (int col = 0; col < cols && pivot_row < rows; ++col) {
    int sel = -1;
    for (int i = pivot_row; i < rows; ++i) {
      if (!a.at(i, col).is_zero()) {
        sel = i;
        break;
      }
    }
    if (sel < 0) continue;
    a.swap_rows(pivot_row, sel);
    Scalar inv = a.at(pivot_row, col).inverse();
    for (int j = col; j < cols; ++j) a.at(pivot_row, j) *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == pivot_row || a.at(i, col).is_zero()) continue;
      Scalar f = a.at(i, col);
      for (int j = col; j < cols; ++j) {
        a.at(i, j) -= f * a.at(pivot_row, j);
      }
    }
    ++pivot_row;
  }
  return a;
}

int rank(const Matrix& m) {
  Matrix r = rref(m);
  int rk = 0;
  for (int i = 0; i < r.rows(); ++i) {
    bool nonzero = false;
    for (int j = 0; j < r.cols(); ++j) {
      if (!r.at(i, j).is_zero()) {
        nonzero = true;
        break;
      }
    }
    if (nonzero) ++rk;
  }
  return rk;
}

std::optional<Vec> solve(const Matrix& a, const Vec& b) {
  if (static_cast<int>(b.size()) != a.rows()) {
    throw std::invalid_argument("solve: rhs size mismatch");
  }
  Matrix aug(a.rows(), a.cols() + 1, a.field());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.set(i, a.cols(), b[static_cast<std::size_t>(i)]);
  }
  Matrix r = rref(aug);
  Vec x = zero_vec(a.cols(), a.field());
  for (int i = 0; i < r.rows(); ++i) {
    int pivot = -1;
    for (int j = 0; j <= a.cols(); ++j) {
      if (!r.at(i, j).is_zero()) {
        pivot = j;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot == a.cols()) return std::nullopt;  // 0 = 1 row
    x[static_cast<std::size_t>(pivot)] = r.at(i, a.cols());
  }
  return x;
}

std::vector<Scalar> char_poly(const Matrix& m) {
  if (!m.is_square()) {
    throw std::invalid_argument("char_poly of non-square matrix");
  }
  const FieldSpec& f = m.field();
  const int n = m.rows();
  const Scalar one(f, 1);
  // Samuelson-Berkowitz. Coefficient vectors are kept highest degree first;
  // c holds the characteristic polynomial of the leading k x k submatrix.
  std::vector<Scalar> c{one};
  if (n == 0) return c;
  c = {one, -m.at(0, 0)};
  for (int k = 2; k <= n; ++k) {
    // Principal (k-1)x(k-1) block, last row R and last column S of the k-block.
    Vec toeplitz_col;
    toeplitz_col.push_back(one);
    toeplitz_col.push_back(-m.at(k - 1, k - 1));
    Vec w;  // iterated A_{k-1}^m S
    w.reserve(static_cast<std::size_t>(k - 1));
    for (int i = 0; i < k - 1; ++i) w.push_back(m.at(i, k - 1));
    for (int mstep = 0; mstep <= k - 2; ++mstep) {
      Scalar dot(f);
      for (int j = 0; j < k - 1; ++j) {
        dot += m.at(k - 1, j) * w[static_cast<std::size_t>(j)];
      }
      toeplitz_col.push_back(-dot);
      if (mstep == k - 2) break;
      Vec next = zero_vec(k - 1, f);
      for (int i = 0; i < k - 1; ++i) {
        for (int j = 0; j < k - 1; ++j) {
          next[static_cast<std::size_t>(i)] +=
              m.at(i, j) * w[static_cast<std::size_t>(j)];
        }
      }
      w = std::move(next);
    }
    // c_k = T_k * c_{k-1}, T_k lower-triangular Toeplitz from toeplitz_col.
    std::vector<Scalar> next(static_cast<std::size_t>(k + 1), Scalar(f));
    for (int i = 0; i <= k; ++i) {
      for (int j = 0; j < k && j <= i; ++j) {
        next[static_cast<std::size_t>(i)] +=
            toeplitz_col[static_cast<std::size_t>(i - j)] *
            c[static_cast<std::size_t>(j)];
      }
    }
    c = std::move(next);
  }
  // Reverse to low-degree-first.
  std::vector<Scalar> out(c.rbegin(), c.rend());
  return out;
}

Scalar determinant(const Matrix& m) {
  std::vector<Scalar> cp = char_poly(m);
  Scalar det = cp.front();  // det(tI - A) at t = 0 is (-1)^n det(A)
  if (m.rows() % 2 == 1) det = -det;
  return det;
}

}  // namespace postalg
