#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "pentagram/matrix.hpp"

namespace pentagram {

// All routines clear row denominators and then eliminate over the integers
// with exact divisions, so intermediate entries stay bounded by minors.

Scalar determinant(const QMatrix& a);

std::size_t rank(const QMatrix& a);

// Basis of {x : a x = 0}. Each vector is primitive and integral.
std::vector<Vec> nullspace(const QMatrix& a);

// Throws Error(kDivisionByZero) when a is singular.
QMatrix inverse(const QMatrix& a);

// Unique solution of a x = b for square nonsingular a, else nullopt.
std::optional<Vec> solve(const QMatrix& a, const Vec& b);

Scalar dot(const Vec& u, const Vec& v);

bool is_zero(const Vec& v);

// u and v span the same line (both nonzero), checked by 2x2 cross products.
bool proportional(const Vec& u, const Vec& v);

// a = c b for some nonzero c, entrywise cross products.
bool proportional(const QMatrix& a, const QMatrix& b);

Vec scale(const Vec& v, const Scalar& factor);
Vec add(const Vec& u, const Vec& v);

}  // namespace pentagram
