#pragma once

#include "postalg/field.hpp"

namespace postalg {

/// Dense row-major matrix over a single field.
class Matrix {
 public:
  Matrix() = default;  // 0x0 over Q
  Matrix(int rows, int cols, const FieldSpec& field);

  static Matrix identity(int n, const FieldSpec& field);
  static Matrix from_rows(const std::vector<Vec>& rows, int cols,
                          const FieldSpec& field);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const FieldSpec& field() const { return field_; }

  const Scalar& at(int i, int j) const {
    return entries_[static_cast<std::size_t>(i) * cols_ + j];
  }
  Scalar& at(int i, int j) {
    return entries_[static_cast<std::size_t>(i) * cols_ + j];
  }
  /// Field-checked assignment.
  void set(int i, int j, const Scalar& value);

  Vec row(int i) const;
  Vec col(int j) const;

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  Matrix operator*(const Matrix& rhs) const;
  Matrix operator-() const;
  Matrix scaled(const Scalar& c) const;
  Matrix transpose() const;
  Matrix pow(int k) const;  // square matrices, k >= 0

  /// Matrix-vector product M v.
  Vec apply(const Vec& v) const;

  Scalar trace() const;

  bool operator==(const Matrix& rhs) const;
  bool operator!=(const Matrix& rhs) const { return !(*this == rhs); }

  void swap_rows(int a, int b);

  /// Interprets prime-field entries as integers in (-p/2, p/2] and returns
  /// the rational matrix with those values; identity on rational matrices.
  Matrix lift_to_rationals() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  FieldSpec field_;
  std::vector<Scalar> entries_;
};

/// tr(A B) without forming the product.
Scalar trace_product(const Matrix& a, const Matrix& b);

}  // namespace postalg
