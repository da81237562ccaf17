#pragma once

// Independent reference computations. Nothing here calls into the library's
// linear algebra, so a test comparing against these checks two routes.

#include <cstdint>
#include <vector>

#include "pentagram/matrix.hpp"
#include "pentagram/polygon.hpp"

namespace oracle {

using pentagram::QMatrix;
using pentagram::Scalar;
using pentagram::Vec;

// Laplace expansion along the first row.
inline Scalar cofactor_det(const QMatrix& a) {
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  if (n == 1) return a(0, 0);
  Scalar total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (a(0, c) == 0) continue;
    QMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t cc = 0, k = 0; cc < n; ++cc)
        if (cc != c) minor(r - 1, k++) = a(r, cc);
    Scalar term = a(0, c) * cofactor_det(minor);
    total += (c % 2 == 0) ? term : Scalar(-term);
  }
  return total;
}

inline Scalar det_of_columns(const std::vector<Vec>& cols) { return cofactor_det(QMatrix::from_columns(cols)); }

// Lifts straight from the defining recurrence, V_0..V_d the standard basis.
inline std::vector<Vec> recurrence_lifts(const pentagram::CoefficientArray& p, int count) {
  const int d = p.d;
  std::vector<Vec> v;
  for (int i = 0; i <= d && i < count; ++i) {
    Vec e(static_cast<std::size_t>(d + 1), Scalar(0));
    e[static_cast<std::size_t>(i)] = 1;
    v.push_back(e);
  }
  for (int j = 0; static_cast<int>(v.size()) < count; ++j) {
    Vec next(static_cast<std::size_t>(d + 1), Scalar(0));
    const Scalar sign = (d % 2 == 0) ? 1 : -1;
    for (int r = 0; r <= d; ++r) {
      Scalar acc = sign * v[static_cast<std::size_t>(j)][static_cast<std::size_t>(r)];
      for (int k = 1; k <= d; ++k)
        acc += p.coeff(j, k) * v[static_cast<std::size_t>(j + k)][static_cast<std::size_t>(r)];
      next[static_cast<std::size_t>(r)] = acc;
    }
    v.push_back(next);
  }
  return v;
}

// splitmix64: the test-side generator, unrelated to the library's Rng.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : s_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (s_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
  long integer(long lo, long hi) { return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1)); }
  Scalar rational(long bound) {
    long num = 0;
    while (num == 0) num = integer(-bound, bound);
    Scalar q(num, integer(1, bound));
    q.canonicalize();
    return q;
  }
  Vec vec(std::size_t len, long bound) {
    Vec v;
    for (std::size_t i = 0; i < len; ++i) v.push_back(rational(bound));
    return v;
  }

 private:
  std::uint64_t s_;
};

// Integer points in general position are not guaranteed; callers retry.
inline std::vector<Vec> random_points(Gen& g, int d, int count, long bound) {
  std::vector<Vec> pts;
  for (int i = 0; i < count; ++i) {
    Vec v;
    for (int k = 0; k <= d; ++k) v.push_back(Scalar(g.integer(-bound, bound)));
    pts.push_back(v);
  }
  return pts;
}

}  // namespace oracle
