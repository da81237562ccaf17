#include "pentagram/linalg.hpp"

#include <stdexcept>
#include <utility>

#include "pentagram/error.hpp"

namespace pentagram {
namespace {

using ZRow = std::vector<mpz_class>;
using ZMatrix = std::vector<ZRow>;

// Scales each row by the lcm of its denominators. Returns the integer matrix
// and the per-row scale factors.
ZMatrix clear_denominators(const QMatrix& a, std::vector<mpz_class>* factors = nullptr) {
  ZMatrix out(a.rows(), ZRow(a.cols()));
  if (factors) factors->assign(a.rows(), mpz_class(1));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < a.cols(); ++j) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(i, j).get_den_mpz_t());
    }
    for (std::size_t j = 0; j < a.cols(); ++j) {
      out[i][j] = a(i, j).get_num() * (l / a(i, j).get_den());
    }
    if (factors) (*factors)[i] = l;
  }
  return out;
}

void exact_divide(mpz_class& value, const mpz_class& divisor) {
  if (!mpz_divisible_p(value.get_mpz_t(), divisor.get_mpz_t())) {
    throw std::logic_error("fraction-free elimination lost exactness");
  }
  mpz_divexact(value.get_mpz_t(), value.get_mpz_t(), divisor.get_mpz_t());
}

struct Reduced {
  ZMatrix m;
  std::vector<std::size_t> pivot_cols;
  mpz_class pivot;  // common value of every pivot entry after reduction
  int sign = 1;     // parity of row swaps
};

// Fraction-free Gauss-Jordan over the first `limit` columns. After the call
// every pivot entry equals `pivot` and pivot columns are zero off the pivot.
Reduced reduce(ZMatrix m, std::size_t limit) {
  Reduced out;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < limit && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      std::swap(m[p], m[r]);
      out.sign = -out.sign;
    }
    const mpz_class piv = m[r][c];
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      const mpz_class lead = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) {
        m[i][j] = piv * m[i][j] - lead * m[r][j];
        exact_divide(m[i][j], prev);
      }
    }
    prev = piv;
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.pivot = prev;
  out.m = std::move(m);
  return out;
}

}  // namespace

Scalar determinant(const QMatrix& a) {
  if (a.rows() != a.cols()) throw Error(ErrorCode::kInvalidArgument, "determinant of non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return Scalar(1);
  std::vector<mpz_class> factors;
  ZMatrix m = clear_denominators(a, &factors);
  // Bareiss forward elimination.
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return Scalar(0);
      std::swap(m[p], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        exact_divide(m[i][j], prev);
      }
    }
    prev = m[k][k];
  }
  mpz_class denom = 1;
  for (const auto& f : factors) denom *= f;
  Scalar out(mpz_class(sign * m[n - 1][n - 1]), denom);
  out.canonicalize();
  return out;
}

std::size_t rank(const QMatrix& a) {
  if (a.rows() == 0 || a.cols() == 0) return 0;
  return reduce(clear_denominators(a), a.cols()).pivot_cols.size();
}

std::vector<Vec> nullspace(const QMatrix& a) {
  const std::size_t cols = a.cols();
  std::vector<Vec> out;
  if (a.rows() == 0) {
    for (std::size_t f = 0; f < cols; ++f) {
      Vec v(cols, Scalar(0));
      v[f] = 1;
      out.push_back(std::move(v));
    }
    return out;
  }
  Reduced red = reduce(clear_denominators(a), cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : red.pivot_cols) is_pivot[c] = true;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<mpz_class> z(cols, mpz_class(0));
    z[f] = red.pivot;
    for (std::size_t i = 0; i < red.pivot_cols.size(); ++i) {
      z[red.pivot_cols[i]] = -red.m[i][f];
    }
    mpz_class g = 0;
    for (const auto& x : z) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    Vec v(cols);
    for (std::size_t j = 0; j < cols; ++j) v[j] = Scalar(z[j] / g);
    out.push_back(std::move(v));
  }
  return out;
}

QMatrix inverse(const QMatrix& a) {
  if (a.rows() != a.cols()) throw Error(ErrorCode::kInvalidArgument, "inverse of non-square matrix");
  const std::size_t n = a.rows();
  std::vector<mpz_class> factors;
  ZMatrix m = clear_denominators(a, &factors);
  for (std::size_t i = 0; i < n; ++i) {
    m[i].resize(2 * n, mpz_class(0));
    m[i][n + i] = 1;
  }
  Reduced red = reduce(std::move(m), n);
  if (red.pivot_cols.size() != n) throw Error(ErrorCode::kDivisionByZero, "singular matrix has no inverse");
  // red.m = [D*I | D*(SA)^{-1}], and A^{-1} = (SA)^{-1} S.
  QMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Scalar x(red.m[i][n + j] * factors[j], red.pivot);
      x.canonicalize();
      out(i, j) = x;
    }
  }
  return out;
}

std::optional<Vec> solve(const QMatrix& a, const Vec& b) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.size() != n) return std::nullopt;
  QMatrix aug(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = b[i];
  }
  Reduced red = reduce(clear_denominators(aug), n);
  if (red.pivot_cols.size() != n) return std::nullopt;
  Vec x(n);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = Scalar(red.m[i][n], red.pivot);
    x[i].canonicalize();
  }
  return x;
}

Scalar dot(const Vec& u, const Vec& v) {
  if (u.size() != v.size()) throw Error(ErrorCode::kInvalidArgument, "dot product of mismatched lengths");
  Scalar out = 0;
  for (std::size_t i = 0; i < u.size(); ++i) out += u[i] * v[i];
  return out;
}

bool is_zero(const Vec& v) {
  for (const auto& x : v) {
    if (x != 0) return false;
  }
  return true;
}

bool proportional(const Vec& u, const Vec& v) {
  if (u.size() != v.size() || is_zero(u) || is_zero(v)) return false;
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (std::size_t j = i + 1; j < u.size(); ++j) {
      if (u[i] * v[j] != u[j] * v[i]) return false;
    }
  }
  return true;
}

bool proportional(const QMatrix& a, const QMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  Vec u, v;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      u.push_back(a(i, j));
      v.push_back(b(i, j));
    }
  }
  return proportional(u, v);
}

Vec scale(const Vec& v, const Scalar& factor) {
  Vec out = v;
  for (auto& x : out) x *= factor;
  return out;
}

Vec add(const Vec& u, const Vec& v) {
  Vec out = u;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += v[i];
  return out;
}

}  // namespace pentagram
