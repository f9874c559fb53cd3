#include "postalg/matrix.hpp"

#include <stdexcept>

namespace postalg {

Matrix::Matrix(int rows, int cols, const FieldSpec& field)
    : rows_(rows), cols_(cols), field_(field) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative dimension");
  entries_.assign(static_cast<std::size_t>(rows) * cols, Scalar(field));
}

Matrix Matrix::identity(int n, const FieldSpec& field) {
  Matrix m(n, n, field);
  for (int i = 0; i < n; ++i) m.at(i, i) = Scalar(field, 1);
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, int cols,
                         const FieldSpec& field) {
  Matrix m(static_cast<int>(rows.size()), cols, field);
  for (int i = 0; i < m.rows_; ++i) {
    const Vec& r = rows[static_cast<std::size_t>(i)];
    if (static_cast<int>(r.size()) != cols) {
      throw std::invalid_argument("row length mismatch");
    }
    for (int j = 0; j < cols; ++j) m.set(i, j, r[static_cast<std::size_t>(j)]);
  }
  return m;
}

void Matrix::set(int i, int j, const Scalar& value) {
  if (value.field() != field_) {
    throw std::invalid_argument("entry field mismatch: " +
                                value.field().name() + " vs " + field_.name());
  }
  at(i, j) = value;
}

Vec Matrix::row(int i) const {
  Vec v;
  v.reserve(static_cast<std::size_t>(cols_));
  for (int j = 0; j < cols_; ++j) v.push_back(at(i, j));
  return v;
}

Vec Matrix::col(int j) const {
  Vec v;
  v.reserve(static_cast<std::size_t>(rows_));
  for (int i = 0; i < rows_; ++i) v.push_back(at(i, j));
  return v;
}

bool Matrix::is_zero() const {
  for (const auto& e : entries_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_ || field_ != rhs.field_) {
    throw std::invalid_argument("matrix shape/field mismatch in +");
  }
  Matrix out = *this;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    out.entries_[i] += rhs.entries_[i];
  }
  return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_ || field_ != rhs.field_) {
    throw std::invalid_argument("matrix shape/field mismatch in -");
  }
  Matrix out = *this;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    out.entries_[i] -= rhs.entries_[i];
  }
  return out;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_ || field_ != rhs.field_) {
    throw std::invalid_argument("matrix shape/field mismatch in *");
  }
  Matrix out(rows_, rhs.cols_, field_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      const Scalar& aik = at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < rhs.cols_; ++j) {
        out.at(i, j) += aik * rhs.at(k, j);
      }
    }
  }
  return out;
}

Matrix Matrix::operator-() const {
  Matrix out = *this;
  for (auto& e : out.entries_) e = -e;
  return out;
}

Matrix Matrix::scaled(const Scalar& c) const {
  Matrix out = *this;
  for (auto& e : out.entries_) e = c * e;
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(cols_, rows_, field_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  }
  return out;
}

Matrix Matrix::pow(int k) const {
  if (!is_square()) throw std::invalid_argument("pow of non-square matrix");
  if (k < 0) throw std::invalid_argument("negative matrix power");
  Matrix out = identity(rows_, field_);
  for (int i = 0; i < k; ++i) out = out * *this;
  return out;
}

Vec Matrix::apply(const Vec& v) const {
  if (static_cast<int>(v.size()) != cols_) {
    throw std::invalid_argument("matrix-vector size mismatch");
  }
  Vec out = zero_vec(rows_, field_);
  for (int j = 0; j < cols_; ++j) {
    const Scalar& vj = v[static_cast<std::size_t>(j)];
    if (vj.is_zero()) continue;
    for (int i = 0; i < rows_; ++i) {
      out[static_cast<std::size_t>(i)] += at(i, j) * vj;
    }
  }
  return out;
}

Scalar Matrix::trace() const {
  if (!is_square()) throw std::invalid_argument("trace of non-square matrix");
  Scalar t(field_);
  for (int i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

bool Matrix::operator==(const Matrix& rhs) const {
  return rows_ == rhs.rows_ && cols_ == rhs.cols_ && field_ == rhs.field_ &&
         entries_ == rhs.entries_;
}

void Matrix::swap_rows(int a, int b) {
  if (a == b) return;
  for (int j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
}

Matrix Matrix::lift_to_rationals() const {
  if (field_.is_rationals()) return *this;
  Matrix out(rows_, cols_, FieldSpec::rationals());
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) {
      std::int64_t r = at(i, j).residue();
      if (2 * r > field_.p) r -= field_.p;
      out.at(i, j) = Scalar(FieldSpec::rationals(), static_cast<long>(r));
    }
  }
  return out;
}

Scalar trace_product(const Matrix& a, const Matrix& b) {
  if (!a.is_square() || a.rows() != b.rows() || !b.is_square() ||
      a.field() != b.field()) {
    throw std::invalid_argument("trace_product shape mismatch");
  }
  Scalar t(a.field());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      t += a.at(i, j) * b.at(j, i);
    }
  }
  return t;
}

}  // namespace postalg
