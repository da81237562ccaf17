#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "pentagram/maps.hpp"
#include "pentagram/spectral.hpp"

namespace pentagram::cli {

using nlohmann::json;

// Polygon document: {"d", "n", "coeffs": [["p/q", ...], ...]} plus "t" for
// quasi-periodic arrays. Malformed documents raise Error(kParseError).
json polygon_to_json(const CoefficientArray& coeffs);
CoefficientArray polygon_from_json(const json& doc);

// {"d", "n", "points": [[...], ...]}: raw homogeneous vertices.
struct PointSet {
  int d = 0;
  int n = 0;
  std::vector<Vec> points;
};
PointSet points_from_json(const json& doc);

json report_to_json(const CoefficientReport& report);

json map_to_json(const MapSpec& spec);
MapSpec map_from_json(const json& doc);

// "dented:M", "tilde:M", "partial:M:L", "short_diagonal", "corrugated".
LaxVariant parse_lax_variant(const std::string& text);

json vector_to_json(const Vec& v);
json matrix_to_json(const QMatrix& m);

json spectral_to_json(const LaurentBivariate& r);
json invariants_to_json(const InvariantSet& inv);
json casimirs_to_json(const std::vector<Casimir>& cs);
json branches_to_json(const BranchData& b);

}  // namespace pentagram::cli
