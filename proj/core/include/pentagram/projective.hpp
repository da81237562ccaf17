#pragma once

#include <optional>
#include <vector>

#include "pentagram/linalg.hpp"

namespace pentagram {

// A lifted vertex is a nonzero (d+1)-vector; a hyperplane is a nonzero
// covector of the same length. Both are plain Vec values; the role is
// carried by the call site.
using LiftedVertex = Vec;
using Hyperplane = Vec;

// Covector vanishing on d independent points in (d+1)-space.
// Throws Error(kDegenerateSpan) when the points are dependent.
Hyperplane hyperplane_through(const std::vector<LiftedVertex>& points, int d);

// Common point of d independent covectors.
// Throws Error(kDegenerateIntersection) when they are dependent.
LiftedVertex intersect_hyperplanes(const std::vector<Hyperplane>& planes, int d);

// Basis of the covectors vanishing on span(vectors).
std::vector<Vec> annihilator(const std::vector<Vec>& vectors);

// Basis of the intersection of the given linear spans.
std::vector<Vec> intersect_subspaces(const std::vector<std::vector<Vec>>& spans);

std::size_t span_rank(const std::vector<Vec>& vectors);

// Matrix with the given vectors as columns.
QMatrix column_matrix(const std::vector<Vec>& vectors);

// g with g*A[k] proportional to B[k] for every k, or nullopt. g is fixed by a
// projective frame of d+2 points in A (the earliest one found greedily) and
// checked on every point. Throws Error(kDegenerateInput) when A contains no
// frame at all.
std::optional<QMatrix> projective_equivalence(const std::vector<LiftedVertex>& a,
                                              const std::vector<LiftedVertex>& b, int d);

}  // namespace pentagram
