#include "pentagram/spectral.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "pentagram/error.hpp"

namespace pentagram {

namespace {

LaurentPoly sign_power(int d) { return LaurentPoly(d % 2 == 0 ? 1 : -1); }

void require_d3(const CoefficientArray& coeffs, const LaxVariant& v) {
  if (coeffs.d != 3) throw Error(ErrorCode::kVariantMismatch, v.describe() + " is defined for d = 3 only");
}

void require_periodic(const CoefficientArray& coeffs, const LaxVariant& v) {
  if (!coeffs.is_periodic())
    throw Error(ErrorCode::kVariantMismatch, v.describe() + " needs n-periodic coefficients");
}

void require_zero(const CoefficientArray& coeffs, int k_from, int k_to, const LaxVariant& v) {
  for (int j = 0; j < coeffs.n; ++j)
    for (int k = k_from; k <= k_to; ++k)
      if (coeffs.coeff(j, k) != 0)
        throw Error(ErrorCode::kVariantMismatch, v.describe() + " needs a_{j," + std::to_string(k) + "} = 0", j);
}

// lambda at diagonal slot `slot` (1-based), ones elsewhere.
std::vector<LaurentPoly> lambda_at(int d, int slot) {
  std::vector<LaurentPoly> out(static_cast<std::size_t>(d), LaurentPoly(1));
  out[static_cast<std::size_t>(slot - 1)] = LaurentPoly::lambda();
  return out;
}

std::vector<LaurentPoly> coefficient_column(const CoefficientArray& coeffs, long j) {
  std::vector<LaurentPoly> out;
  for (int k = 1; k <= coeffs.d; ++k) out.emplace_back(coeffs.coeff(j, k));
  return out;
}

std::string family_name(int d, int k_power) {
  if (d == 3) return k_power == 3 ? "G" : k_power == 2 ? "J" : "I";
  return "C" + std::to_string(k_power);
}

Scalar product_of(const CoefficientArray& coeffs, int k) {
  Scalar p = 1;
  for (int j = 0; j < coeffs.n; ++j) p *= coeffs.coeff(j, k);
  return p;
}

// Clears lambda powers: returns polynomials in lambda indexed by k power.
std::vector<Poly> cleared(const LaurentBivariate& r) {
  int lo = 0;
  bool first = true;
  for (const auto& [key, c] : r.terms()) {
    lo = first ? key.second : std::min(lo, key.second);
    first = false;
  }
  std::vector<Poly> out(static_cast<std::size_t>(r.k_degree() + 1));
  for (int i = 0; i <= r.k_degree(); ++i) {
    std::vector<Scalar> c;
    const LaurentPoly coefficient = r.k_coefficient(i);
    for (const auto& [e, x] : coefficient.terms()) {
      std::size_t at = static_cast<std::size_t>(e - lo);
      if (c.size() <= at) c.resize(at + 1, Scalar(0));
      c[at] = x;
    }
    out[static_cast<std::size_t>(i)] = Poly(std::move(c));
  }
  return out;
}

// Fraction-free determinant over Q[lambda], row pivoting on zero pivots.
Poly bareiss_determinant(std::vector<std::vector<Poly>> a) {
  const std::size_t n = a.size();
  Poly prev(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t p = k + 1;
      while (p < n && a[p][k].is_zero()) ++p;
      if (p == n) return Poly();
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = divexact(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev);
      a[i][k] = Poly();
    }
    prev = a[k][k];
  }
  Poly det = n == 0 ? Poly(1) : a[n - 1][n - 1];
  return sign > 0 ? det : -det;
}

// Sylvester matrix of f (degree p) and g (degree q), size p + q.
std::vector<std::vector<Poly>> sylvester(const std::vector<Poly>& f, const std::vector<Poly>& g) {
  const std::size_t p = f.size() - 1, q = g.size() - 1, size = p + q;
  std::vector<std::vector<Poly>> s(size, std::vector<Poly>(size));
  for (std::size_t r = 0; r < q; ++r)
    for (std::size_t i = 0; i <= p; ++i) s[r][r + i] = f[p - i];
  for (std::size_t r = 0; r < p; ++r)
    for (std::size_t i = 0; i <= q; ++i) s[q + r][r + i] = g[q - i];
  return s;
}

bool squarefree(const Poly& p) { return p.degree() <= 0 || gcd(p, p.derivative()).degree() == 0; }

}  // namespace

std::string LaxVariant::describe() const {
  switch (kind) {
    case Kind::kDented: return "dented:" + std::to_string(m);
    case Kind::kTilde: return "tilde:" + std::to_string(m);
    case Kind::kPartial: return "partial:" + std::to_string(m) + ":" + std::to_string(l);
    case Kind::kShortDiagonal3D: return "short_diagonal";
    case Kind::kCorrugated3D: return "corrugated";
  }
  return "unknown";
}

LaurentMatrix companion_matrix(const CompanionDisplay& display) {
  const std::size_t d = display.diagonal.size();
  LaurentMatrix k(d + 1, d + 1);
  k(0, d) = sign_power(static_cast<int>(d));
  for (std::size_t i = 1; i <= d; ++i) {
    k(i, i - 1) = display.diagonal[i - 1];
    k(i, d) = display.column[i - 1];
  }
  return k;
}

LaurentMatrix companion_inverse(const CompanionDisplay& display) {
  const std::size_t d = display.diagonal.size();
  const LaurentPoly s = sign_power(static_cast<int>(d));
  LaurentMatrix l(d + 1, d + 1);
  for (std::size_t i = 1; i <= d; ++i) {
    const LaurentPoly inv = display.diagonal[i - 1].monomial_inverse();
    l(i - 1, 0) = -(s * display.column[i - 1] * inv);
    l(i - 1, i) = inv;
  }
  l(d, 0) = s;
  return l;
}

CompanionDisplay lax_display(const CoefficientArray& coeffs, long j, const LaxVariant& v) {
  const int d = coeffs.d;
  using K = LaxVariant::Kind;
  CompanionDisplay out;
  switch (v.kind) {
    case K::kDented:
    case K::kPartial:
      if (v.m < 1 || v.m > d - 1) throw Error(ErrorCode::kVariantMismatch, v.describe() + " needs 1 <= m <= d-1");
      require_periodic(coeffs, v);
      if (v.kind == K::kPartial) {
        if (v.l <= v.m || v.l > d) throw Error(ErrorCode::kVariantMismatch, v.describe() + " needs m < l <= d");
        require_zero(coeffs, v.m + 1, d + v.m - v.l, v);
      }
      out.diagonal = lambda_at(d, v.m + 1);
      out.column = coefficient_column(coeffs, j);
      return out;
    case K::kTilde: {
      if (v.m < 1 || v.m > d - 1) throw Error(ErrorCode::kVariantMismatch, v.describe() + " needs 1 <= m <= d-1");
      const auto tilde = tilde_coordinates(coeffs);
      const Vec& row = tilde[static_cast<std::size_t>(positive_mod(j, coeffs.n))];
      for (int k = 1; k <= d; ++k) {
        LaurentPoly entry(row[static_cast<std::size_t>(k - 1)]);
        out.diagonal.push_back(k == v.m + 1 ? entry.shifted(1) : entry);
        out.column.emplace_back(1);
      }
      return out;
    }
    case K::kShortDiagonal3D:
      require_d3(coeffs, v);
      require_periodic(coeffs, v);
      out.diagonal = {LaurentPoly::lambda(), LaurentPoly(1), LaurentPoly::lambda()};
      out.column = coefficient_column(coeffs, j);
      return out;
    case K::kCorrugated3D:
      require_d3(coeffs, v);
      require_periodic(coeffs, v);
      require_zero(coeffs, 2, 2, v);
      out.diagonal = lambda_at(3, 3);
      out.column = coefficient_column(coeffs, j);
      return out;
  }
  throw std::logic_error("unhandled Lax variant");
}

LaurentMatrix lax_matrix(const CoefficientArray& coeffs, long j, const LaxVariant& variant) {
  const CompanionDisplay display = lax_display(coeffs, j, variant);
  LaurentMatrix l = companion_inverse(display);
  if (!(companion_matrix(display) * l == LaurentMatrix::identity(l.rows())))
    throw std::logic_error("closed-form Lax inverse failed to multiply back to the identity");
  return l;
}

LaurentMatrix monodromy_product(const CoefficientArray& coeffs, const LaxVariant& variant, long start) {
  LaurentMatrix t = lax_matrix(coeffs, start, variant);
  for (long j = start + 1; j < start + coeffs.n; ++j) t = lax_matrix(coeffs, j, variant) * t;
  return t;
}

LaurentBivariate characteristic_function(const LaurentMatrix& t) {
  const std::size_t n = t.rows();
  // det(k I - T) = sum_i c_i k^{n-i}; det(T - k I) = (-1)^n of that.
  std::vector<LaurentPoly> by_k(n + 1);
  const Scalar outer = n % 2 == 0 ? 1 : -1;
  by_k[n] = LaurentPoly(outer);
  LaurentMatrix m = LaurentMatrix::identity(n);
  for (std::size_t i = 1; i <= n; ++i) {
    LaurentMatrix am = t * m;
    LaurentPoly c = am.trace() * Scalar(-1, static_cast<long>(i));
    by_k[n - i] = c * outer;
    if (i < n) m = am + LaurentMatrix::identity(n).scaled(c);
  }
  return LaurentBivariate(by_k);
}

LaurentBivariate spectral_function(const CoefficientArray& coeffs, const LaxVariant& variant) {
  return characteristic_function(monodromy_product(coeffs, variant));
}

std::optional<SpectralWindows> table_windows(const LaxVariant& v, int d, int n) {
  if (d != 3 || n % 2 == 0) return std::nullopt;
  const int q = n / 2, third = n / 3, two_thirds = 2 * n / 3;
  using K = LaxVariant::Kind;
  SpectralWindows w;
  w.constant_exponent = -n;
  if (v.kind == K::kShortDiagonal3D) {
    w.windows = {{3, n, q}, {2, q + n, q}, {1, 2 * n, q}};
    w.constant_exponent = -2 * n;
  } else if (v.kind == K::kDented && v.m == 1) {
    w.windows = {{3, q, q}, {2, n, two_thirds}, {1, n, third}};
  } else if (v.kind == K::kDented && v.m == 2) {
    w.windows = {{3, third, third}, {2, two_thirds, two_thirds}, {1, n, q}};
  } else if (v.kind == K::kCorrugated3D) {
    const int n0 = third - std::gcd(n - 1, 3) / 3;
    w.windows = {{3, third, third}, {2, two_thirds, n0}, {1, n, third}};
  } else {
    return std::nullopt;
  }
  return w;
}

const CoefficientFamily& InvariantSet::family(const std::string& name) const {
  for (const auto& f : families)
    if (f.name == name) return f;
  throw Error(ErrorCode::kInvalidArgument, "no invariant family " + name);
}

Scalar InvariantSet::value(const std::string& name, int j) const {
  const auto& f = family(name);
  if (j < 0 || j > f.upper) throw Error(ErrorCode::kInvalidArgument, name + " index outside its window", j);
  return f.values[static_cast<std::size_t>(j)];
}

std::size_t InvariantSet::count() const {
  std::size_t total = 0;
  for (const auto& f : families) total += f.values.size();
  return total;
}

InvariantSet extract_invariants(const LaurentBivariate& r, const LaxVariant& variant, int n) {
  const int d = r.k_degree() - 1;
  if (d < 1) throw Error(ErrorCode::kStructureMismatch, "spectral function of k-degree below 2");
  InvariantSet out;
  out.variant = variant;
  out.d = d;
  out.n = n;
  const auto table = table_windows(variant, d, n);
  out.tabulated = table.has_value();

  auto mismatch = [](int k, int e) {
    std::ostringstream os;
    os << "monomial k^" << k << " lambda^" << e << " outside the tabulated window";
    return Error(ErrorCode::kStructureMismatch, os.str(), k);
  };

  const LaurentPoly top = r.k_coefficient(d + 1);
  if (!(top == LaurentPoly((d + 1) % 2 == 0 ? 1 : -1)))
    throw Error(ErrorCode::kStructureMismatch, "leading k coefficient is not (-1)^{d+1}", d + 1);

  const LaurentPoly constant = r.k_coefficient(0);
  if (table) {
    if (!(constant == LaurentPoly::lambda(table->constant_exponent))) {
      if (constant.is_zero()) throw mismatch(0, 0);
      throw mismatch(0, constant.min_exponent() != table->constant_exponent ? constant.min_exponent()
                                                                             : constant.max_exponent());
    }
    out.constant_exponent = table->constant_exponent;
    out.constant = 1;
  } else if (constant.is_monomial()) {
    out.constant_exponent = constant.min_exponent();
    out.constant = constant.coeff(out.constant_exponent);
  } else {
    throw Error(ErrorCode::kStructureMismatch, "k^0 coefficient is not a monomial", 0);
  }

  for (int i = d; i >= 1; --i) {
    const LaurentPoly c = r.k_coefficient(i);
    CoefficientFamily f;
    f.name = family_name(d, i);
    f.k_power = i;
    const Scalar sign = (d + 1 - i) % 2 == 0 ? 1 : -1;
    if (table) {
      const auto& w = table->windows[static_cast<std::size_t>(d - i)];
      f.offset = w.offset;
      f.upper = w.upper;
      for (const auto& [e, x] : c.terms())
        if (e < -w.offset || e > -w.offset + w.upper) throw mismatch(i, e);
    } else if (!c.is_zero()) {
      f.offset = -c.min_exponent();
      f.upper = c.max_exponent() - c.min_exponent();
    }
    for (int j = 0; j <= f.upper; ++j) f.values.push_back(sign * c.coeff(j - f.offset));
    out.families.push_back(std::move(f));
  }
  return out;
}

std::vector<Casimir> casimirs(const InvariantSet& inv, const CoefficientArray& coeffs) {
  std::vector<Casimir> out;
  if (!inv.tabulated) return out;
  const int n = inv.n;
  const int q = n / 2, third = n / 3, two_thirds = 2 * n / 3;
  const Scalar sign_n = n % 2 == 0 ? 1 : -1;
  auto add = [&](const std::string& fam, int j, std::optional<Scalar> formula) {
    out.push_back({fam + "_" + std::to_string(j), inv.value(fam, j), std::move(formula)});
  };
  using K = LaxVariant::Kind;
  switch (inv.variant.kind) {
    case K::kShortDiagonal3D:
      add("I", 0, product_of(coeffs, 3));
      add("J", q, std::nullopt);
      add("G", 0, product_of(coeffs, 1));
      break;
    case K::kDented:
      if (inv.variant.m == 1) {
        add("I", 0, std::nullopt);
        add("J", 0, sign_n * product_of(coeffs, 2));
        add("G", q, product_of(coeffs, 1));
        if (n % 3 == 0) {
          add("J", two_thirds, std::nullopt);
          add("I", third, std::nullopt);
        }
      } else {
        add("I", 0, product_of(coeffs, 3));
        add("J", two_thirds, sign_n * product_of(coeffs, 2));
        add("G", third, std::nullopt);
      }
      break;
    case K::kCorrugated3D:
      add("I", 0, product_of(coeffs, 3));
      add("G", third, product_of(coeffs, 1));
      if (n % 3 == 0) {
        add("G", 0, std::nullopt);
        add("J", 0, std::nullopt);
        add("I", third, std::nullopt);
        add("J", third, std::nullopt);
      }
      break;
    default:
      break;
  }
  return out;
}

int BranchData::sheets() const {
  int s = 0;
  for (const auto& c : cycles) s += c.e * c.multiplicity;
  return s;
}

int BranchData::ramification() const {
  int s = 0;
  for (const auto& c : cycles) s += (c.e - 1) * c.multiplicity;
  return s;
}

bool BranchData::simple() const {
  return std::all_of(cycles.begin(), cycles.end(), [](const BranchCycle& c) { return c.simple; });
}

BranchData newton_branches(const LaurentBivariate& r, BranchLocation at) {
  BranchData out;
  out.at = at;
  struct Point {
    int i;
    long h;
    Scalar lc;
  };
  // Height is the order in the local parameter: lambda at 0, 1/lambda at infinity.
  std::vector<Point> pts;
  for (int i = 0; i <= r.k_degree(); ++i) {
    const LaurentPoly c = r.k_coefficient(i);
    if (c.is_zero()) continue;
    if (at == BranchLocation::kZero) pts.push_back({i, c.min_exponent(), c.coeff(c.min_exponent())});
    else pts.push_back({i, -static_cast<long>(c.max_exponent()), c.coeff(c.max_exponent())});
  }
  // Lower hull, keeping only segment endpoints.
  std::vector<std::size_t> hull;
  for (std::size_t p = 0; p < pts.size(); ++p) {
    while (hull.size() >= 2) {
      const Point& a = pts[hull[hull.size() - 2]];
      const Point& b = pts[hull.back()];
      const Point& c = pts[p];
      const long cross = static_cast<long>(b.i - a.i) * (c.h - a.h) - (b.h - a.h) * static_cast<long>(c.i - a.i);
      if (cross <= 0) hull.pop_back();
      else break;
    }
    hull.push_back(p);
  }
  for (std::size_t s = 0; s + 1 < hull.size(); ++s) {
    const Point& a = pts[hull[s]];
    const Point& b = pts[hull[s + 1]];
    const long di = b.i - a.i, dh = b.h - a.h;
    const long g = std::gcd(std::abs(dh), di);
    BranchCycle cyc;
    cyc.e = static_cast<int>(di / g);
    cyc.multiplicity = static_cast<int>(g);
    // k ~ C t^{-dh/di} in the local parameter t.
    Scalar slope(dh, di);
    slope.canonicalize();
    cyc.exponent = at == BranchLocation::kZero ? Scalar(-slope) : slope;
    std::vector<Scalar> lead(static_cast<std::size_t>(di) + 1, Scalar(0));
    for (const Point& p : pts) {
      if (p.i < a.i || p.i > b.i) continue;
      if ((p.h - a.h) * di == dh * (p.i - a.i)) lead[static_cast<std::size_t>(p.i - a.i)] = p.lc;
    }
    std::vector<Scalar> reduced;
    for (std::size_t k = 0; k < lead.size(); k += static_cast<std::size_t>(cyc.e)) reduced.push_back(lead[k]);
    cyc.leading = Poly(std::move(lead));
    cyc.simple = squarefree(Poly(std::move(reduced)));
    out.cycles.push_back(std::move(cyc));
  }
  return out;
}

FiniteBranches finite_branches(const LaurentBivariate& r) {
  if (r.k_degree() < 1) throw Error(ErrorCode::kZeroDiscriminant, "spectral function has no k dependence");
  const auto f = cleared(r);
  const auto g = cleared(r.k_derivative());
  FiniteBranches out;
  out.discriminant = bareiss_determinant(sylvester(f, g));
  if (out.discriminant.is_zero()) throw Error(ErrorCode::kZeroDiscriminant, "discriminant in k vanishes identically");
  const int ord = out.discriminant.order_at_zero();
  out.count = out.discriminant.degree() - ord;
  std::vector<Scalar> away(out.discriminant.coefficients().begin() + ord, out.discriminant.coefficients().end());
  out.squarefree = squarefree(Poly(std::move(away)));
  return out;
}

int finite_branch_count(const LaurentBivariate& r) { return finite_branches(r).count; }

GenusReport genus_report(const LaurentBivariate& r) {
  GenusReport out;
  const FiniteBranches fb = finite_branches(r);
  if (!fb.squarefree)
    throw Error(ErrorCode::kNonSimpleBranching, "discriminant has a repeated root away from lambda = 0");
  out.finite = fb.count;
  out.at_zero = newton_branches(r, BranchLocation::kZero);
  out.at_infinity = newton_branches(r, BranchLocation::kInfinity);
  const int sheets = r.k_degree();
  for (const BranchData* b : {&out.at_zero, &out.at_infinity}) {
    if (b->sheets() != sheets)
      throw Error(ErrorCode::kNonSimpleBranching, "Newton polygon does not account for every sheet");
    if (!b->simple())
      throw Error(ErrorCode::kNonSimpleBranching, "degenerate Newton segment; Puiseux data undetermined");
  }
  const int nu = fb.count + out.at_zero.ramification() + out.at_infinity.ramification();
  // 2 - 2g = 2 sheets - nu
  const int twice = nu - 2 * sheets + 2;
  if (twice < 0 || twice % 2 != 0)
    throw Error(ErrorCode::kNonSimpleBranching, "ramification total incompatible with a smooth cover");
  out.genus = twice / 2;
  return out;
}

int genus(const LaurentBivariate& r) { return genus_report(r).genus; }

LaurentBivariate rescale_k(const LaurentBivariate& r, const Scalar& factor) {
  const int top = r.k_degree();
  auto by_k = r.by_k();
  for (int i = 0; i <= top; ++i) by_k[static_cast<std::size_t>(i)] *= power(factor, top - i);
  return LaurentBivariate(by_k);
}

LaurentBivariate reciprocal_spectral(const LaurentBivariate& r, const Scalar& factor) {
  const int top = r.k_degree();
  const LaurentPoly inv_det = r.k_coefficient(0).monomial_inverse();
  const auto by_k = r.by_k();
  std::vector<LaurentPoly> out(static_cast<std::size_t>(top + 1));
  const Scalar outer = top % 2 == 0 ? 1 : -1;
  for (int i = 0; i <= top; ++i)
    out[static_cast<std::size_t>(top - i)] = by_k[static_cast<std::size_t>(i)] * inv_det * (outer * power(factor, -i));
  return LaurentBivariate(out);
}

LaurentMatrix gstv_display(int d, const Scalar& x, const Scalar& y) {
  const std::size_t n = static_cast<std::size_t>(d);
  LaurentMatrix e(n + 1, n + 1);
  e(0, n - 1) = LaurentPoly(x);
  e(0, n) = LaurentPoly(d % 2 == 0 ? Scalar(x + y) : Scalar(x - y));
  e(1, 0) = LaurentPoly::lambda();
  for (std::size_t i = 2; i <= n; ++i) e(i, i - 1) = LaurentPoly(1);
  e(n, n) += LaurentPoly(1);
  return e;
}

GstvGauge gauge_gstv(const CoefficientArray& coeffs) {
  const int d = coeffs.d;
  const int n = coeffs.n;
  if (!coeffs.is_periodic()) throw Error(ErrorCode::kVariantMismatch, "gauge needs n-periodic coefficients");
  if (d < 3) throw Error(ErrorCode::kVariantMismatch, "corrugated gauge needs d >= 3");
  for (int j = 0; j < n; ++j) {
    for (int k = 2; k <= d - 1; ++k)
      if (coeffs.coeff(j, k) != 0) throw Error(ErrorCode::kVariantMismatch, "coefficients are not corrugated", j);
    if (coeffs.coeff(j, d) == 0) throw Error(ErrorCode::kDivisionByZero, "a_{j,d} vanishes", j);
  }
  auto gauge = [&](long j) {
    CompanionDisplay g;
    for (int l = 1; l <= d; ++l) {
      Scalar c = 1;
      for (int k = 0; k <= d - l; ++k) c *= coeffs.coeff(j - k, d);
      g.diagonal.emplace_back(c);
      g.column.emplace_back(l == d ? coeffs.coeff(j, d) : Scalar(0));
    }
    return g;
  };
  GstvGauge out;
  for (long j = 0; j < n; ++j) {
    Scalar px = 1, py = 1;
    for (int l = 0; l <= d - 1; ++l) px *= coeffs.coeff(j - l, d);
    for (int l = -1; l <= d - 1; ++l) py *= coeffs.coeff(j - l, d);
    out.x.push_back(coeffs.coeff(j, 1) / px);
    out.y.push_back(1 / py);

    CompanionDisplay k;
    k.diagonal = lambda_at(d, 2);
    k.column = coefficient_column(coeffs, j);
    LaurentMatrix m = companion_inverse(gauge(j)) * companion_matrix(k) * companion_matrix(gauge(j + 1));
    m = m.scaled(LaurentPoly(Scalar(1 / coeffs.coeff(j + 1, d))));
    if (!(m == gstv_display(d, out.x.back(), out.y.back())))
      throw Error(ErrorCode::kStructureMismatch, "gauged corrugated Lax matrix leaves the display shape", j);
    out.matrices.push_back(std::move(m));
  }
  return out;
}

LaurentBivariate gstv_spectral_function(const GstvGauge& gauge) {
  if (gauge.matrices.empty()) throw Error(ErrorCode::kInvalidArgument, "empty gauge");
  LaurentMatrix t = gauge.matrices.front();
  for (std::size_t j = 1; j < gauge.matrices.size(); ++j) t = t * gauge.matrices[j];
  return characteristic_function(t);
}

}  // namespace pentagram
