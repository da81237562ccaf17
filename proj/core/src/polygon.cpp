#include "pentagram/polygon.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "pentagram/error.hpp"
#include "pentagram/rng.hpp"

namespace pentagram {
namespace {

Scalar sign_power(int d) { return (d % 2 == 0) ? Scalar(1) : Scalar(-1); }

Vec basis_vector(int size, int i) {
  Vec e(size, Scalar(0));
  e[i] = 1;
  return e;
}

void check_shape(int d, int n) {
  if (d < 1) throw Error(ErrorCode::kInvalidArgument, "dimension d must be >= 1");
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "period n must be >= 1");
}

// Ratio r with u = r v, both nonzero and proportional.
std::optional<Scalar> ratio(const Vec& u, const Vec& v) {
  if (!proportional(u, v)) return std::nullopt;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != 0) return u[i] / v[i];
  }
  return std::nullopt;
}

// Rows j = 0..rows-1 of W_{j+d+1} = sum_{k in support} b_{j,k} W_{j+k} + b_{j,0} W_j.
std::vector<Vec> dependencies(const std::vector<Vec>& w, int d, const std::vector<int>& support, int rows,
                              ErrorCode failure) {
  if (w.size() < static_cast<std::size_t>(rows + d + 1)) {
    throw Error(ErrorCode::kInvalidArgument, "not enough points for the requested dependencies");
  }
  std::vector<Vec> b(rows, Vec(d + 1, Scalar(0)));
  for (int j = 0; j < rows; ++j) {
    std::vector<Vec> cols{w[j]};
    for (int k : support) cols.push_back(w[j + k]);
    cols.push_back(w[j + d + 1]);
    auto ns = nullspace(column_matrix(cols));
    if (ns.size() != 1) throw Error(failure, "dependency solve is rank-deficient", j);
    const Vec& x = ns.front();
    const Scalar& last = x.back();
    if (last == 0 || x.front() == 0) throw Error(failure, "dependency misses an end vertex", j);
    b[j][0] = -x.front() / last;
    for (std::size_t s = 0; s < support.size(); ++s) b[j][support[s]] = -x[s + 1] / last;
  }
  return b;
}

struct LiftRequest {
  const std::vector<Vec>* points;
  int d;                         // target dimension: recurrence of length d+1
  int n;
  std::vector<int> support;      // k values with a_{j,k} allowed nonzero
  std::optional<QMatrix> hint;
  bool canonicalize;
  ErrorCode failure;
};

// Shared by coefficients_from_vertices and psi_embed. The points may live in
// a smaller space than P^d (psi); only the dependency pattern uses d.
CoefficientReport lift(const LiftRequest& req) {
  const auto& w = *req.points;
  const int d = req.d;
  const int n = req.n;
  const std::size_t need = static_cast<std::size_t>(n + d + 2);
  if (w.size() < need) {
    throw Error(ErrorCode::kInvalidArgument, "need at least n+d+2 points to recover coefficients");
  }
  const std::size_t dim = w.front().size();
  for (const auto& p : w) {
    if (p.size() != dim || is_zero(p)) throw Error(ErrorCode::kInvalidArgument, "points must be nonzero and of equal length");
  }

  std::vector<Vec> b = dependencies(w, d, req.support, n + 1, req.failure);

  // Lift scales: c_0..c_d = 1, c_{j+d+1} = (-1)^d c_j / b_{j,0}.
  std::vector<Scalar> c(need, Scalar(1));
  for (int j = 0; j <= n; ++j) c[j + d + 1] = sign_power(d) * c[j] / b[j][0];
  std::vector<Vec> a(n + 1, Vec(d, Scalar(0)));
  for (int j = 0; j <= n; ++j) {
    for (int k : req.support) a[j][k - 1] = b[j][k] * c[j + d + 1] / c[j + k];
  }
  std::vector<Vec> v(need);
  for (std::size_t j = 0; j < need; ++j) v[j] = scale(w[j], c[j]);

  QMatrix m;
  if (req.hint) {
    m = *req.hint;
  } else {
    std::vector<Vec> from(w.begin(), w.end() - n);
    std::vector<Vec> to(w.begin() + n, w.end());
    auto g = projective_equivalence(from, to, static_cast<int>(dim) - 1);
    if (!g) throw Error(ErrorCode::kDegenerateInput, "points are not related by a single monodromy");
    m = *g;
    if (auto r = rational_root(determinant(m), static_cast<unsigned>(dim))) {
      if (*r != 0) m = m.scaled(Scalar(1) / *r);
    }
  }

  // rho_j with V_{n+j} = rho_j M V_j; (d+1)-periodic by the recurrence.
  std::vector<Scalar> rho(d + 1);
  for (int j = 0; j <= d; ++j) {
    auto r = ratio(v[n + j], m * v[j]);
    if (!r) throw Error(ErrorCode::kDegenerateInput, "vertex is not the monodromy image of its n-predecessor", j);
    rho[j] = *r;
  }

  const int period = d + 1;
  const int g = std::gcd(n, period);
  const int cycle = period / g;
  std::vector<Scalar> products(g, Scalar(1));
  for (int s = 0; s < g; ++s) {
    int j = s;
    for (int i = 0; i < cycle; ++i) {
      products[s] *= rho[j];
      j = (j + n) % period;
    }
  }
  std::optional<Scalar> sigma;
  if (std::all_of(products.begin(), products.end(), [&](const Scalar& x) { return x == products.front(); })) {
    if (products.front() == 1) {
      sigma = Scalar(1);
    } else {
      sigma = rational_root(products.front(), static_cast<unsigned>(cycle));
    }
  }

  CoefficientReport out;
  out.coeffs.d = d;
  out.coeffs.n = n;
  if (sigma) {
    std::vector<Scalar> tau(period, Scalar(1));
    for (int s = 0; s < g; ++s) {
      int j = s;
      for (int i = 0; i + 1 < cycle; ++i) {
        int next = (j + n) % period;
        tau[next] = *sigma * tau[j] / rho[j];
        j = next;
      }
    }
    for (int j = 0; j <= n; ++j) {
      for (int k : req.support) a[j][k - 1] *= tau[j % period] / tau[(j + k) % period];
    }
    if (a[n] != a[0]) throw std::logic_error("periodic gauge failed to close");
    out.periodic = true;
    out.monodromy = m.scaled(*sigma);
  } else {
    for (int k : req.support) {
      if (a[n][k - 1] != a[0][k - 1] * rho[0] / rho[k % period]) {
        throw std::logic_error("quasi-periodic certificate failed");
      }
    }
    out.coeffs.quasi = QuasiPeriodicData{rho};
    out.periodic = false;
    out.monodromy = m;
  }
  a.pop_back();
  out.coeffs.a = std::move(a);

  if (req.canonicalize && out.periodic) {
    CoefficientArray canon = canonical_sign(out.coeffs);
    if (!(canon == out.coeffs)) {
      out.coeffs = std::move(canon);
      out.monodromy = out.monodromy.scaled(Scalar(-1));
    }
  }
  try {
    out.tilde = tilde_coordinates(out.coeffs);
  } catch (const Error&) {
    out.tilde.reset();
  }
  return out;
}

std::vector<int> full_support(int d) {
  std::vector<int> s(d);
  std::iota(s.begin(), s.end(), 1);
  return s;
}

CoefficientArray random_array(int d, int n, Rng& rng, long bound) {
  CoefficientArray out;
  out.d = d;
  out.n = n;
  out.a.assign(n, Vec(d));
  for (auto& row : out.a) {
    for (auto& x : row) x = rng.rational(bound, true);
  }
  return out;
}

template <class Draw, class Accept>
CoefficientArray sample(int d, int n, std::uint64_t seed, int retry_budget, Draw draw, Accept accept) {
  check_shape(d, n);
  if (n < d + 2) throw Error(ErrorCode::kInvalidArgument, "random polygons need n >= d+2");
  Rng rng(seed);
  for (int attempt = 0; attempt < retry_budget; ++attempt) {
    try {
      CoefficientArray candidate = draw(rng);
      if (accept(candidate)) return candidate;
    } catch (const Error& e) {
      if (e.code() == ErrorCode::kInvalidArgument) throw;
    }
  }
  throw Error(ErrorCode::kExhaustedRetries, "no generic sample within the retry budget");
}

}  // namespace

Scalar CoefficientArray::t(long j) const {
  if (!quasi) return Scalar(1);
  return quasi->t[positive_mod(j, d + 1)];
}

Scalar CoefficientArray::coeff(long j, int k) const {
  if (k == 0) return Scalar(1);
  if (k < 0 || k > d) throw Error(ErrorCode::kInvalidArgument, "coefficient index k out of range");
  const long r = positive_mod(j, n);
  const long q = floor_div(j, n);
  Scalar v = a[r][k - 1];
  if (!quasi || v == 0) return v;
  for (long i = 0; i < q; ++i) {
    const long base = r + i * n;
    v *= t(base) / t(base + k);
  }
  for (long i = 1; i <= -q; ++i) {
    const long base = r - i * n;
    v *= t(base + k) / t(base);
  }
  return v;
}

bool operator==(const CoefficientArray& x, const CoefficientArray& y) {
  if (x.d != y.d || x.n != y.n || x.a != y.a) return false;
  if (x.quasi.has_value() != y.quasi.has_value()) return false;
  return !x.quasi || x.quasi->t == y.quasi->t;
}

CoefficientArray make_coefficients(int d, int n, std::vector<Vec> rows) {
  check_shape(d, n);
  if (rows.size() != static_cast<std::size_t>(n)) throw Error(ErrorCode::kInvalidArgument, "expected n coefficient rows");
  for (const auto& row : rows) {
    if (row.size() != static_cast<std::size_t>(d)) throw Error(ErrorCode::kInvalidArgument, "expected d entries per row");
  }
  CoefficientArray out;
  out.d = d;
  out.n = n;
  out.a = std::move(rows);
  return out;
}

const Vec& VertexWindow::operator[](long j) const {
  if (j < first_ || j > last()) throw std::out_of_range("vertex index outside the window");
  return v_[static_cast<std::size_t>(j - first_)];
}

std::vector<Vec> VertexWindow::slice(long from, long to) const {
  std::vector<Vec> out;
  for (long j = from; j <= to; ++j) out.push_back((*this)[j]);
  return out;
}

VertexWindow vertex_window(const CoefficientArray& coeffs, long first, long last) {
  const int d = coeffs.d;
  const long lo = std::min(first, 0L);
  const long hi = std::max(last, static_cast<long>(d));
  std::vector<Vec> v(static_cast<std::size_t>(hi - lo + 1));
  auto at = [&](long j) -> Vec& { return v[static_cast<std::size_t>(j - lo)]; };
  for (int i = 0; i <= d; ++i) at(i) = basis_vector(d + 1, i);
  for (long j = 0; j + d + 1 <= hi; ++j) {
    Vec next = scale(at(j), sign_power(d));
    for (int k = 1; k <= d; ++k) {
      const Scalar c = coeffs.coeff(j, k);
      if (c != 0) next = add(next, scale(at(j + k), c));
    }
    at(j + d + 1) = std::move(next);
  }
  for (long j = -1; j >= lo; --j) {
    Vec prev = at(j + d + 1);
    for (int k = 1; k <= d; ++k) {
      const Scalar c = coeffs.coeff(j, k);
      if (c != 0) prev = add(prev, scale(at(j + k), -c));
    }
    at(j) = scale(prev, sign_power(d));
  }
  std::vector<Vec> out(v.begin() + (first - lo), v.begin() + (last - lo) + 1);
  return VertexWindow(first, std::move(out));
}

std::vector<Vec> vertices_from_coefficients(const CoefficientArray& coeffs, std::size_t count) {
  const int d = coeffs.d;
  if (count < static_cast<std::size_t>(d + 1)) throw Error(ErrorCode::kInvalidArgument, "count must be >= d+1");
  VertexWindow win = vertex_window(coeffs, 0, static_cast<long>(count) - 1);
  std::vector<Vec> out = win.slice(0, static_cast<long>(count) - 1);
  for (std::size_t j = 0; j + d < count; ++j) {
    std::vector<Vec> cols(out.begin() + j, out.begin() + j + d + 1);
    const Scalar det = determinant(column_matrix(cols));
    if (det == 0) throw Error(ErrorCode::kGenericityFailure, "consecutive vertices are dependent", static_cast<long>(j));
    if (det != 1) throw std::logic_error("recurrence failed to preserve the unit determinant");
  }
  return out;
}

TwistedPolygon twisted_polygon(const CoefficientArray& coeffs) {
  TwistedPolygon p;
  p.coeffs = coeffs;
  p.window = vertices_from_coefficients(coeffs, static_cast<std::size_t>(coeffs.n + coeffs.d + 1));
  p.monodromy = monodromy(coeffs);
  return p;
}

QMatrix transfer_matrix(const CoefficientArray& coeffs, long j) {
  const int d = coeffs.d;
  QMatrix out(d + 1, d + 1);
  out(0, d) = sign_power(d);
  for (int i = 1; i <= d; ++i) {
    out(i, i - 1) = 1;
    out(i, d) = coeffs.coeff(j, i);
  }
  return out;
}

QMatrix current_monodromy(const CoefficientArray& coeffs, long j) {
  QMatrix out = QMatrix::identity(coeffs.d + 1);
  for (long i = j; i < j + coeffs.n; ++i) out = out * transfer_matrix(coeffs, i);
  return out;
}

QMatrix monodromy(const CoefficientArray& coeffs) { return current_monodromy(coeffs, 0); }

QMatrix vertex_monodromy(const CoefficientArray& coeffs) {
  const int d = coeffs.d;
  const int n = coeffs.n;
  VertexWindow win = vertex_window(coeffs, 0, n + d);
  std::vector<Vec> cols;
  for (int i = 0; i <= d; ++i) cols.push_back(scale(win[n + i], Scalar(1) / coeffs.t(i)));
  return column_matrix(cols);
}

bool is_closed(const CoefficientArray& coeffs) {
  QMatrix m = vertex_monodromy(coeffs);
  return proportional(m, QMatrix::identity(coeffs.d + 1));
}

CoefficientReport coefficients_from_vertices(const std::vector<Vec>& points, int d, int n,
                                             const std::optional<QMatrix>& monodromy_hint) {
  check_shape(d, n);
  for (const auto& p : points) {
    if (p.size() != static_cast<std::size_t>(d + 1)) throw Error(ErrorCode::kInvalidArgument, "points must have d+1 coordinates");
  }
  LiftRequest req{&points, d, n, full_support(d), monodromy_hint,
                  !monodromy_hint.has_value(), ErrorCode::kDegenerateInput};
  return lift(req);
}

std::vector<Vec> raw_dependencies(const std::vector<Vec>& points, int d, int rows) {
  return dependencies(points, d, full_support(d), rows, ErrorCode::kDegenerateInput);
}

CoefficientArray canonical_sign(const CoefficientArray& coeffs) {
  if (coeffs.d % 2 == 0 || coeffs.n % 2 == 0 || coeffs.quasi) return coeffs;
  for (const auto& row : coeffs.a) {
    for (int k = 1; k <= coeffs.d; k += 2) {
      const Scalar& x = row[k - 1];
      if (x == 0) continue;
      if (x > 0) return coeffs;
      CoefficientArray out = coeffs;
      for (auto& r : out.a) {
        for (int kk = 1; kk <= coeffs.d; kk += 2) r[kk - 1] = -r[kk - 1];
      }
      return out;
    }
  }
  return coeffs;
}

std::vector<Vec> tilde_coordinates(const CoefficientArray& coeffs) {
  const int d = coeffs.d;
  std::vector<Vec> out(coeffs.n, Vec(d));
  for (int j = 0; j < coeffs.n; ++j) {
    const Scalar next_d = coeffs.coeff(j + 1, d);
    for (int k = 1; k <= d; ++k) {
      const Scalar den = coeffs.coeff(j, k) * next_d;
      if (den == 0) throw Error(ErrorCode::kDivisionByZero, "zero coefficient in a tilde denominator", j);
      out[j][k - 1] = coeffs.coeff(j + 1, k - 1) / den;
    }
  }
  return out;
}

bool dented_generic(const CoefficientArray& coeffs) {
  const int d = coeffs.d;
  const int n = coeffs.n;
  VertexWindow win = vertex_window(coeffs, 0, n + 3 * d);
  for (int m = 1; m <= d - 1; ++m) {
    std::vector<Vec> planes;
    for (int i = 0; i <= n + 2 * d - 1; ++i) {
      std::vector<Vec> pts;
      for (int s = 0; s <= d; ++s) {
        if (s != m) pts.push_back(win[i + s]);
      }
      auto ns = nullspace(QMatrix::from_rows(pts));
      if (ns.size() != 1) return false;
      planes.push_back(ns.front());
    }
    std::vector<Vec> image;
    for (int j = 0; j < n + d; ++j) {
      auto ns = nullspace(QMatrix::from_rows(std::vector<Vec>(planes.begin() + j, planes.begin() + j + d)));
      if (ns.size() != 1) return false;
      image.push_back(ns.front());
    }
    // The image must again have d+1 consecutive vertices in general position.
    for (int j = 0; j < n; ++j) {
      if (determinant(QMatrix::from_columns(std::vector<Vec>(image.begin() + j, image.begin() + j + d + 1))) == 0)
        return false;
    }
  }
  return true;
}

CoefficientArray random_generic_polygon(int d, int n, std::uint64_t seed, long bound, int retry_budget) {
  return sample(
      d, n, seed, retry_budget, [&](Rng& rng) { return canonical_sign(random_array(d, n, rng, bound)); },
      [](const CoefficientArray& c) { return dented_generic(c); });
}

CoefficientArray random_closed_polygon(int d, int n, std::uint64_t seed, long bound, int retry_budget) {
  return sample(
      d, n, seed, retry_budget,
      [&](Rng& rng) {
        std::vector<Vec> base(n, Vec(d + 1));
        for (auto& p : base) {
          for (auto& x : p) x = Scalar(rng.uniform(-bound, bound));
        }
        std::vector<Vec> pts;
        for (int i = 0; i < n + d + 2; ++i) pts.push_back(base[i % n]);
        return coefficients_from_vertices(pts, d, n).coeffs;
      },
      [](const CoefficientArray& c) {
        for (int j = 0; j < c.n; ++j) {
          for (int k = 1; k <= c.d; ++k) {
            if (c.coeff(j, k) == 0) return false;
          }
        }
        return dented_generic(c);
      });
}

CoefficientArray make_corrugated(const CoefficientArray& coeffs) {
  return make_partially_corrugated(coeffs, 1, 2);
}

CoefficientArray make_partially_corrugated(const CoefficientArray& coeffs, int m, int l) {
  const int d = coeffs.d;
  if (m < 1 || l < m + 1 || l > d) throw Error(ErrorCode::kInvalidArgument, "need 1 <= m < l <= d");
  CoefficientArray out = coeffs;
  for (auto& row : out.a) {
    for (int k = m + 1; k <= d + m - l; ++k) row[k - 1] = 0;
  }
  vertices_from_coefficients(out, static_cast<std::size_t>(out.n + d + 1));
  return out;
}

CoefficientArray random_corrugated_polygon(int d, int n, std::uint64_t seed, long bound, int retry_budget) {
  return sample(
      d, n, seed, retry_budget,
      [&](Rng& rng) { return canonical_sign(make_corrugated(random_array(d, n, rng, bound))); },
      [](const CoefficientArray& c) { return dented_generic(c); });
}

CoefficientArray random_partially_corrugated_polygon(int d, int n, int m, int l, std::uint64_t seed, long bound,
                                                     int retry_budget) {
  CorrugationSpec spec{m + 1, l - m + 1, l};
  validate(spec);
  return sample(
      d, n, seed, retry_budget,
      [&](Rng& rng) { return canonical_sign(make_partially_corrugated(random_array(d, n, rng, bound), m, l)); },
      [&](const CoefficientArray& c) { return is_partially_corrugated(c, spec); });
}

void validate(const CorrugationSpec& spec) {
  if (spec.q < 2 || spec.r < 2 || spec.l < std::max(spec.q, spec.r) || spec.l > spec.q + spec.r - 2) {
    throw Error(ErrorCode::kInvalidArgument, "corrugation spec needs q,r >= 2 and max(q,r) <= l <= q+r-2");
  }
}

std::vector<long> corrugation_cluster(const CorrugationSpec& spec, int d, long j) {
  std::vector<long> out;
  for (int i = 0; i < spec.q; ++i) out.push_back(j + i);
  const long start = j + spec.q + d - spec.l;
  for (int i = 0; i < spec.r; ++i) out.push_back(start + i);
  return out;
}

bool is_partially_corrugated(const CoefficientArray& coeffs, const CorrugationSpec& spec) {
  validate(spec);
  const int d = coeffs.d;
  if (spec.l > d) return false;
  const long reach = corrugation_cluster(spec, d, 0).back();
  VertexWindow win = vertex_window(coeffs, 0, coeffs.n - 1 + reach);
  for (long j = 0; j < coeffs.n; ++j) {
    std::vector<Vec> pts;
    for (long i : corrugation_cluster(spec, d, j)) pts.push_back(win[i]);
    if (span_rank(pts) != static_cast<std::size_t>(spec.l + 1)) return false;
  }
  return true;
}

bool is_corrugated(const CoefficientArray& coeffs) {
  return is_partially_corrugated(coeffs, CorrugationSpec{2, 2, 2});
}

CoefficientReport psi_embed(const CoefficientArray& source, int p, int m) {
  const int c = source.d;
  if (p < 2) throw Error(ErrorCode::kInvalidArgument, "psi needs p >= 2");
  if (m < 1 || m > c - 1) throw Error(ErrorCode::kInvalidArgument, "psi needs 1 <= m <= c-1");
  const int d = c + p - 2;
  const int n = source.n;
  std::vector<int> support;
  for (int k = 1; k <= m; ++k) support.push_back(k);
  for (int k = d + m - c + 1; k <= d; ++k) {
    if (k > m) support.push_back(k);
  }
  VertexWindow win = vertex_window(source, 0, n + d + 1);
  std::vector<Vec> pts = win.slice(0, n + d + 1);
  LiftRequest req{&pts, d, n, support, vertex_monodromy(source), false, ErrorCode::kNormalizationFailure};
  CoefficientReport out = lift(req);
  vertices_from_coefficients(out.coeffs, static_cast<std::size_t>(n + d + 1));
  return out;
}

}  // namespace pentagram
