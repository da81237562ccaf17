#pragma once

#include <gtest/gtest.h>

#include <cstdint>
#include <functional>

#include "pentagram/error.hpp"

// First seed whose polygon survives `body` without a degenerate
// intersection; the maps are only defined on such polygons.
template <class Body>
std::uint64_t first_generic_seed(Body body, std::uint64_t from = 1) {
  for (std::uint64_t seed = from; seed < from + 50; ++seed) {
    try {
      body(seed);
      return seed;
    } catch (const pentagram::Error& e) {
      if (e.code() != pentagram::ErrorCode::kDegenerateIntersection && e.code() != pentagram::ErrorCode::kDegenerateSpan)
        throw;
    }
  }
  ADD_FAILURE() << "no generic seed found";
  return 0;
}

// Code of the pentagram::Error raised by f; a test failure if none is.
inline pentagram::ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const pentagram::Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no pentagram::Error raised";
  return pentagram::ErrorCode::kInvalidArgument;
}

#include <ostream>

#include "pentagram/polygon.hpp"

namespace pentagram {

inline void PrintTo(const CoefficientArray& p, std::ostream* os) {
  *os << "d=" << p.d << " n=" << p.n << " [";
  for (const auto& row : p.a) {
    *os << " (";
    for (std::size_t k = 0; k < row.size(); ++k) *os << (k ? " " : "") << format_rational(row[k]);
    *os << ")";
  }
  *os << " ]";
  if (p.quasi) {
    *os << " t=(";
    for (const auto& t : p.quasi->t) *os << " " << format_rational(t);
    *os << " )";
  }
}

}  // namespace pentagram
