#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pentagram/polygon.hpp"

namespace pentagram {

// (d-1) positive jumps between consecutive chosen vertices.
using JumpTuple = std::vector<int>;

JumpTuple reversed(const JumpTuple& t);
JumpTuple ones(int d);
// (1,..,1,2,1,..,1) with the 2 at position m; m = 0 or m = d gives all ones.
JumpTuple dented_tuple(int d, int m);
// (1,..,1,p,1,..,1) with p at position m.
JumpTuple deep_dented_tuple(int d, int m, int p);

struct MapSpec {
  enum class Kind { kGeneralized, kDented, kDeepDented, kShortDiagonal, kCorrugated, kPartiallyCorrugated };

  Kind kind = Kind::kDented;
  JumpTuple I, J;  // kGeneralized only
  int m = 1;       // kDented, kDeepDented
  int p = 2;       // kDeepDented
  CorrugationSpec corrugation;

  static MapSpec generalized(JumpTuple I, JumpTuple J);
  static MapSpec dented(int m);
  static MapSpec deep_dented(int m, int p);
  static MapSpec short_diagonal();
  static MapSpec corrugated();
  static MapSpec partially_corrugated(int q, int r, int l);

  std::string describe() const;
};

// (I, J) realizing a jump-tuple map in dimension d. Throws
// Error(kInvalidArgument) for the corrugated variants or wrong lengths.
std::pair<JumpTuple, JumpTuple> jump_tuples(const MapSpec& spec, int d);

// Offsets 0, t_1, t_1+t_2, ..., one per chosen vertex.
std::vector<long> prefix_offsets(const JumpTuple& t);

Hyperplane diagonal_plane(const VertexWindow& window, long k, const JumpTuple& I, int d);
Hyperplane diagonal_plane(const CoefficientArray& coeffs, long k, const JumpTuple& I);

// Image vertices T v_k, k = first..last, in the coordinates of the source
// lifts. Degenerate spans and intersections name k.
std::vector<Vec> image_points(const CoefficientArray& coeffs, const MapSpec& spec, long first, long last);

// Image re-encoded with the source monodromy as gauge hint.
CoefficientReport apply_map(const CoefficientArray& coeffs, const MapSpec& spec);

// T_cor v_k = (v_k, v_{k+d}) meet (v_{k+1}, v_{k+d+1}).
CoefficientReport corrugated_map(const CoefficientArray& coeffs);
// v_k -> (v_{k-1}, v_k) meet (v_{k+d-1}, v_{k+d}); undoes corrugated_map up to
// an index shift by d.
CoefficientReport inverse_corrugated_map(const CoefficientArray& coeffs);
// T_par v_k = P_k meet ... meet P_{k+l} for the (q,r;l) subspaces.
CoefficientReport partially_corrugated_map(const CoefficientArray& coeffs, const CorrugationSpec& spec);

// The diagonal hyperplanes P_k read as a polygon in the dual space.
CoefficientReport alpha_map(const CoefficientArray& coeffs, const JumpTuple& I);

// a'_{j,k} = a_{j+c,k}: the same polygon with vertices renumbered.
CoefficientArray shift_indices(const CoefficientArray& coeffs, long c);

// Smallest c in [0, n) with v^B_j ~ g v^A_{j+c} for one projective g over a
// window of n+d+2 vertices, or nullopt.
std::optional<int> detect_shift(const CoefficientArray& a, const CoefficientArray& b);

// R_k = sum_{i=1..m} a_{k,i} V_{k+i} + (-1)^d V_k, checked to lie in both
// spans (V_k..V_{k+m}) and (V_{k+m+1}..V_{k+d+1}).
LiftedVertex dual_dented_image(const CoefficientArray& coeffs, int m, long k);

// Rows (b_{j,0}, ..., b_{j,d}) with P_{j+d+1} = sum_i b_{j,i} P_{j+i}, each
// entry a ratio of determinants.
std::vector<Vec> cramer_dependencies(const std::vector<Vec>& points, int d, int rows);

// Exponent -k for k <= m and d+1-k for k > m.
CoefficientArray scaling_transform(const CoefficientArray& coeffs, int m, const Scalar& s);

}  // namespace pentagram
