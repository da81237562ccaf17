#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pentagram/laurent.hpp"
#include "pentagram/matrix.hpp"
#include "pentagram/polygon.hpp"

namespace pentagram {

using LaurentMatrix = Matrix<LaurentPoly>;

struct LaxVariant {
  enum class Kind { kDented, kTilde, kPartial, kShortDiagonal3D, kCorrugated3D };

  Kind kind = Kind::kDented;
  int m = 1;
  int l = 0;  // kPartial only

  static LaxVariant dented(int m) { return {Kind::kDented, m, 0}; }
  static LaxVariant tilde(int m) { return {Kind::kTilde, m, 0}; }
  static LaxVariant partial(int m, int l) { return {Kind::kPartial, m, l}; }
  static LaxVariant short_diagonal() { return {Kind::kShortDiagonal3D, 0, 0}; }
  static LaxVariant corrugated() { return {Kind::kCorrugated3D, 2, 0}; }

  std::string describe() const;
};

// The companion-type matrix
//   [ 0 ... 0 | (-1)^d ]
//   [ diag(D) | column ]
// whose determinant is the product of D.
struct CompanionDisplay {
  std::vector<LaurentPoly> diagonal;  // d entries
  std::vector<LaurentPoly> column;    // d entries
};

LaurentMatrix companion_matrix(const CompanionDisplay& display);
// Closed-form inverse. Every diagonal entry must be a nonzero monomial,
// otherwise Error(kDivisionByZero).
LaurentMatrix companion_inverse(const CompanionDisplay& display);

// The displayed matrix whose inverse is L_j. Throws Error(kVariantMismatch)
// when the variant does not fit d, the sparsity pattern, or periodicity.
CompanionDisplay lax_display(const CoefficientArray& coeffs, long j, const LaxVariant& variant);
LaurentMatrix lax_matrix(const CoefficientArray& coeffs, long j, const LaxVariant& variant);

// L_{start+n-1} ... L_{start}.
LaurentMatrix monodromy_product(const CoefficientArray& coeffs, const LaxVariant& variant, long start = 0);

// det(T - k Id), by Faddeev-LeVerrier over Laurent polynomials.
LaurentBivariate characteristic_function(const LaurentMatrix& t);

// R(k, lambda) = det(T_0(lambda) - k Id), stored un-normalized.
LaurentBivariate spectral_function(const CoefficientArray& coeffs, const LaxVariant& variant);

// The k^i coefficient of R reads lambda^{-offset} (c_0 + ... + c_upper lambda^upper).
struct CoefficientWindow {
  int k_power = 0;
  int offset = 0;
  int upper = 0;
};

struct SpectralWindows {
  std::vector<CoefficientWindow> windows;  // k^d down to k^1
  int constant_exponent = 0;               // k^0 term is exactly lambda^constant_exponent
};

// Tabulated windows: d = 3, odd n, variants dented(1), dented(2),
// short_diagonal and corrugated. nullopt elsewhere.
std::optional<SpectralWindows> table_windows(const LaxVariant& variant, int d, int n);

struct CoefficientFamily {
  std::string name;  // G, J, I for d = 3; C<i> otherwise
  int k_power = 0;
  int offset = 0;
  int upper = -1;
  std::vector<Scalar> values;  // values[j], j = 0..upper, sign-adjusted
};

struct InvariantSet {
  LaxVariant variant;
  int d = 0;
  int n = 0;
  bool tabulated = false;  // windows checked against the tables
  std::vector<CoefficientFamily> families;
  int constant_exponent = 0;
  Scalar constant;

  const CoefficientFamily& family(const std::string& name) const;
  Scalar value(const std::string& name, int j) const;
  // Number of window slots across all families.
  std::size_t count() const;
};

// Families with sign convention R = sum_i (-1)^{d+1-i} k^i lambda^{-offset} sum_j c_j lambda^j.
// With tabulated windows, any monomial outside them raises
// Error(kStructureMismatch) naming (k, lambda) in the message; elsewhere the
// windows are read off R.
InvariantSet extract_invariants(const LaurentBivariate& r, const LaxVariant& variant, int n);

struct Casimir {
  std::string name;                      // e.g. "I_0", "G_2"
  Scalar value;                          // read off R
  std::optional<Scalar> product_formula; // closed form in the coefficients, when tabulated
};

// The tabulated Casimirs of a variant with their closed forms.
std::vector<Casimir> casimirs(const InvariantSet& invariants, const CoefficientArray& coeffs);

enum class BranchLocation { kZero, kInfinity };

// One Newton-polygon segment: `multiplicity` cycles of length e on which
// k ~ C lambda^exponent, C a root of `leading` (a polynomial in C).
struct BranchCycle {
  int e = 1;
  int multiplicity = 0;
  Scalar exponent;
  Poly leading;
  bool simple = true;  // leading = Q(C^e) with Q squarefree
};

struct BranchData {
  BranchLocation at = BranchLocation::kZero;
  std::vector<BranchCycle> cycles;

  int sheets() const;        // sum of e * multiplicity
  int ramification() const;  // sum of (e - 1) * multiplicity
  bool simple() const;
};

BranchData newton_branches(const LaurentBivariate& r, BranchLocation at);

struct FiniteBranches {
  Poly discriminant;  // Res_k(R, dR/dk) after clearing lambda powers
  int count = 0;      // nonzero finite roots with multiplicity
  bool squarefree = false;
};

// Throws Error(kZeroDiscriminant) when R has a repeated factor in k.
FiniteBranches finite_branches(const LaurentBivariate& r);
int finite_branch_count(const LaurentBivariate& r);

struct GenusReport {
  int genus = 0;
  int finite = 0;
  BranchData at_zero;
  BranchData at_infinity;
};

// Riemann-Hurwitz for the (d+1)-sheeted cover. Refuses with
// Error(kNonSimpleBranching) unless all finite branch points are simple and
// every Newton segment is nondegenerate.
GenusReport genus_report(const LaurentBivariate& r);
int genus(const LaurentBivariate& r);

// Coefficient of every monomial scaled: A^{d+1} R(k / A, lambda).
LaurentBivariate rescale_k(const LaurentBivariate& r, const Scalar& factor);

// (-k)^{d+1} R(1 / (A k), lambda) / R(0, lambda): the spectral function of
// A^{-1} T^{-1} in terms of that of T. R(0, lambda) must be a monomial.
LaurentBivariate reciprocal_spectral(const LaurentBivariate& r, const Scalar& factor);

struct GstvGauge {
  std::vector<Scalar> x;
  std::vector<Scalar> y;
  std::vector<LaurentMatrix> matrices;  // g_j^{-1} K_j g_{j+1} / a_{j+1,d}, j = 0..n-1
};

// Lambda in the (1,0) slot; row 0 carries x_j and x_j + (-1)^d y_j.
LaurentMatrix gstv_display(int d, const Scalar& x, const Scalar& y);

// Gauges the corrugated Lax display (lambda at the second diagonal slot) of
// a periodic corrugated array and checks each result against gstv_display.
// Throws Error(kDivisionByZero) for a vanishing a_{j,d},
// Error(kVariantMismatch) for non-corrugated input, and
// Error(kStructureMismatch) if a gauged matrix leaves the display shape.
GstvGauge gauge_gstv(const CoefficientArray& coeffs);

// det(M_0 M_1 ... M_{n-1} - k Id) of the gauged matrices.
LaurentBivariate gstv_spectral_function(const GstvGauge& gauge);

}  // namespace pentagram
