#pragma once

#include <optional>

#include "postalg/matrix.hpp"

namespace postalg {

/// Unique reduced row echelon form; row space preserved.
Matrix rref(const Matrix& m);

int rank(const Matrix& m);

/// Particular solution of A x = b with free variables set to zero,
/// or nullopt when the system is inconsistent.
std::optional<Vec> solve(const Matrix& a, const Vec& b);

/// Monic characteristic polynomial det(tI - A) as coefficients c[0..n]
/// (low degree first, c[n] = 1). Division-free Samuelson-Berkowitz, so it
/// works over F_p even when p <= n.
std::vector<Scalar> char_poly(const Matrix& m);

Scalar determinant(const Matrix& m);

}  // namespace postalg
