#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pentagram/projective.hpp"

namespace pentagram {

// Multipliers t_0..t_d (indices taken mod d+1) certifying a quasi-periodic
// array: a_{j+n,k} = a_{j,k} * t_j / t_{j+k}.
struct QuasiPeriodicData {
  std::vector<Scalar> t;
};

// Coordinates of a twisted n-gon in P^d through
//   V_{j+d+1} = sum_{k=1..d} a_{j,k} V_{j+k} + (-1)^d V_j.
struct CoefficientArray {
  int d = 0;
  int n = 0;
  std::vector<Vec> a;  // n rows; a[j][k-1] = a_{j,k}
  std::optional<QuasiPeriodicData> quasi;

  bool is_periodic() const { return !quasi.has_value(); }

  // a_{j,k} for any integer j and 0 <= k <= d, with a_{j,0} = 1.
  Scalar coeff(long j, int k) const;
  Scalar t(long j) const;

  friend bool operator==(const CoefficientArray& x, const CoefficientArray& y);
};

CoefficientArray make_coefficients(int d, int n, std::vector<Vec> rows);

// Lifted vertices V_first..V_last (inclusive), V_0..V_d the standard basis.
// Negative indices run the recurrence backwards.
class VertexWindow {
 public:
  VertexWindow(long first, std::vector<Vec> vertices) : first_(first), v_(std::move(vertices)) {}
  long first() const { return first_; }
  long last() const { return first_ + static_cast<long>(v_.size()) - 1; }
  const Vec& operator[](long j) const;
  std::vector<Vec> slice(long from, long to) const;  // inclusive

 private:
  long first_;
  std::vector<Vec> v_;
};

VertexWindow vertex_window(const CoefficientArray& coeffs, long first, long last);

// V_0..V_{count-1}. Every (d+1)-window determinant is checked to equal 1;
// a vanishing one raises Error(kGenericityFailure).
std::vector<Vec> vertices_from_coefficients(const CoefficientArray& coeffs, std::size_t count);

struct TwistedPolygon {
  CoefficientArray coeffs;
  std::vector<Vec> window;  // V_0..V_{n+d}
  QMatrix monodromy;        // N_0 ... N_{n-1}
};

TwistedPolygon twisted_polygon(const CoefficientArray& coeffs);

// N_j with (V_{j+1},...,V_{j+d+1}) = (V_j,...,V_{j+d}) N_j.
QMatrix transfer_matrix(const CoefficientArray& coeffs, long j);

// N_j N_{j+1} ... N_{j+n-1}; monodromy() is the j = 0 case.
QMatrix current_monodromy(const CoefficientArray& coeffs, long j);
QMatrix monodromy(const CoefficientArray& coeffs);

// Left-acting M with V_{j+n} = t_j M V_j. Equals monodromy() for periodic
// arrays, since V_0..V_d is the standard basis.
QMatrix vertex_monodromy(const CoefficientArray& coeffs);

bool is_closed(const CoefficientArray& coeffs);

struct CoefficientReport {
  CoefficientArray coeffs;           // periodic whenever a rational gauge exists
  bool periodic = false;             // false: the NonPeriodic flag
  std::optional<std::vector<Vec>> tilde;
  QMatrix monodromy;                 // left-acting, for the returned lifts
};

// Re-encodes a twisted polygon given by at least n+d+2 points W_0, W_1, ...
// (W_{j+n} projectively equal to M W_j). With a monodromy hint the gauge is
// fixed so that V_{j+n} = M V_j exactly; without one, M is recovered by
// projective equivalence and, for odd d, the sign ambiguity a_{j,k} ->
// (-1)^k a_{j,k} is resolved by canonical_sign().
CoefficientReport coefficients_from_vertices(const std::vector<Vec>& points, int d, int n,
                                             const std::optional<QMatrix>& monodromy_hint = std::nullopt);

// Rows (b_{j,0}, ..., b_{j,d}), j < rows, of the unnormalized dependencies
// W_{j+d+1} = sum_k b_{j,k} W_{j+k}, solved by nullspace.
std::vector<Vec> raw_dependencies(const std::vector<Vec>& points, int d, int rows);

// a_{j,k} -> (-1)^k a_{j,k} when the first nonzero odd-k entry is negative.
// Only meaningful for odd d and odd n, where both arrays describe the same
// projective polygon; otherwise returns the input.
CoefficientArray canonical_sign(const CoefficientArray& coeffs);

// ta_{j,k} = a_{j+1,k-1} / (a_{j,k} a_{j+1,d}), n rows of d entries.
std::vector<Vec> tilde_coordinates(const CoefficientArray& coeffs);

// True when, for every m = 1..d-1 and every j in one period, the dented
// diagonal through v_j..v_{j+d} minus v_{j+m} is a hyperplane and d
// consecutive ones meet in a single point, and the image polygon T_m(P)
// again has every d+1 consecutive vertices independent.
bool dented_generic(const CoefficientArray& coeffs);

inline constexpr int kDefaultRetryBudget = 200;

// Rational entries with |numerator|, denominator <= bound, resampled until
// dented_generic holds. Output is in canonical sign.
CoefficientArray random_generic_polygon(int d, int n, std::uint64_t seed, long bound = 5,
                                        int retry_budget = kDefaultRetryBudget);

// A closed n-gon from n random integer points repeated periodically.
CoefficientArray random_closed_polygon(int d, int n, std::uint64_t seed, long bound = 5,
                                       int retry_budget = kDefaultRetryBudget);

// Zeroes a_{j,k} for 2 <= k <= d-1.
CoefficientArray make_corrugated(const CoefficientArray& coeffs);

// Zeroes a_{j,k} for m+1 <= k <= d+m-l: an (m+1, l-m+1; l)-corrugated array.
CoefficientArray make_partially_corrugated(const CoefficientArray& coeffs, int m, int l);

CoefficientArray random_corrugated_polygon(int d, int n, std::uint64_t seed, long bound = 5,
                                           int retry_budget = kDefaultRetryBudget);
CoefficientArray random_partially_corrugated_polygon(int d, int n, int m, int l, std::uint64_t seed,
                                                     long bound = 5,
                                                     int retry_budget = kDefaultRetryBudget);

struct CorrugationSpec {
  int q = 2;
  int r = 2;
  int l = 2;
};

// Throws Error(kInvalidArgument) unless q,r >= 2 and max(q,r) <= l <= q+r-2.
void validate(const CorrugationSpec& spec);

// Vertex indices of the diagonal subspace P_j of a (q,r;l) spec in P^d.
std::vector<long> corrugation_cluster(const CorrugationSpec& spec, int d, long j);

// Every P_j over one period has rank l+1.
bool is_partially_corrugated(const CoefficientArray& coeffs, const CorrugationSpec& spec);
bool is_corrugated(const CoefficientArray& coeffs);

// psi: a twisted polygon in P^c to a partially corrugated one in P^d,
// d = c+p-2, whose lifts satisfy the sparse relation with support
// {1..m} U {d+m-c+1..d}. Throws Error(kNormalizationFailure) when the lift
// recurrence breaks down.
CoefficientReport psi_embed(const CoefficientArray& source, int p, int m);

}  // namespace pentagram
