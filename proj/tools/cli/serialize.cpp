#include "serialize.hpp"

#include <sstream>

#include "pentagram/error.hpp"

namespace pentagram::cli {
namespace {

Error parse_error(const std::string& what) { return Error(ErrorCode::kParseError, what); }

int int_field(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_number_integer()) throw parse_error(std::string("missing integer field ") + key);
  return doc[key].get<int>();
}

Scalar scalar_from(const json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Scalar(v.get<long>());
  throw parse_error("rational must be a \"p/q\" string or an integer");
}

Vec vector_from(const json& v, std::size_t length, const char* what) {
  if (!v.is_array() || v.size() != length)
    throw parse_error(std::string(what) + " must be an array of " + std::to_string(length) + " entries");
  Vec out;
  for (const auto& x : v) out.push_back(scalar_from(x));
  return out;
}

JumpTuple tuple_from(const json& v, const char* what) {
  if (!v.is_array()) throw parse_error(std::string(what) + " must be an integer array");
  JumpTuple out;
  for (const auto& x : v) {
    if (!x.is_number_integer()) throw parse_error(std::string(what) + " must be an integer array");
    out.push_back(x.get<int>());
  }
  return out;
}

std::string exponent_string(const Scalar& e) { return format_rational(e); }

}  // namespace

json vector_to_json(const Vec& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(format_rational(x));
  return out;
}

json matrix_to_json(const QMatrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vector_to_json(m.row(r)));
  return out;
}

json polygon_to_json(const CoefficientArray& coeffs) {
  json doc;
  doc["d"] = coeffs.d;
  doc["n"] = coeffs.n;
  json rows = json::array();
  for (const auto& row : coeffs.a) rows.push_back(vector_to_json(row));
  doc["coeffs"] = std::move(rows);
  if (coeffs.quasi) doc["t"] = vector_to_json(coeffs.quasi->t);
  return doc;
}

CoefficientArray polygon_from_json(const json& doc) {
  if (!doc.is_object()) throw parse_error("polygon document must be an object");
  const int d = int_field(doc, "d");
  const int n = int_field(doc, "n");
  if (d < 1 || n < 1) throw parse_error("d and n must be positive");
  if (!doc.contains("coeffs") || !doc["coeffs"].is_array() || doc["coeffs"].size() != static_cast<std::size_t>(n))
    throw parse_error("coeffs must hold n rows");
  std::vector<Vec> rows;
  for (const auto& row : doc["coeffs"]) rows.push_back(vector_from(row, static_cast<std::size_t>(d), "coefficient row"));
  CoefficientArray out = make_coefficients(d, n, std::move(rows));
  if (doc.contains("t")) out.quasi = QuasiPeriodicData{vector_from(doc["t"], static_cast<std::size_t>(d + 1), "t")};
  return out;
}

PointSet points_from_json(const json& doc) {
  if (!doc.is_object()) throw parse_error("point document must be an object");
  PointSet out;
  out.d = int_field(doc, "d");
  out.n = int_field(doc, "n");
  if (out.d < 1 || out.n < 1) throw parse_error("d and n must be positive");
  if (!doc.contains("points") || !doc["points"].is_array()) throw parse_error("points must be an array");
  for (const auto& p : doc["points"]) out.points.push_back(vector_from(p, static_cast<std::size_t>(out.d + 1), "point"));
  return out;
}

json report_to_json(const CoefficientReport& report) {
  json doc = polygon_to_json(report.coeffs);
  doc["periodic"] = report.periodic;
  doc["monodromy"] = matrix_to_json(report.monodromy);
  if (report.tilde) {
    json rows = json::array();
    for (const auto& row : *report.tilde) rows.push_back(vector_to_json(row));
    doc["tilde"] = std::move(rows);
  }
  return doc;
}

json map_to_json(const MapSpec& spec) {
  using K = MapSpec::Kind;
  json doc;
  switch (spec.kind) {
    case K::kGeneralized:
      doc = {{"variant", "generalized"}, {"I", spec.I}, {"J", spec.J}};
      break;
    case K::kDented:
      doc = {{"variant", "dented"}, {"m", spec.m}};
      break;
    case K::kDeepDented:
      doc = {{"variant", "deep_dented"}, {"m", spec.m}, {"p", spec.p}};
      break;
    case K::kShortDiagonal:
      doc = {{"variant", "short_diagonal"}};
      break;
    case K::kCorrugated:
      doc = {{"variant", "corrugated"}};
      break;
    case K::kPartiallyCorrugated:
      doc = {{"variant", "partially_corrugated"},
             {"q", spec.corrugation.q},
             {"r", spec.corrugation.r},
             {"l", spec.corrugation.l}};
      break;
  }
  return doc;
}

MapSpec map_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("variant") || !doc["variant"].is_string())
    throw parse_error("map spec needs a \"variant\" string");
  const std::string v = doc["variant"].get<std::string>();
  if (v == "dented") return MapSpec::dented(int_field(doc, "m"));
  if (v == "generalized") {
    if (!doc.contains("I") || !doc.contains("J")) throw parse_error("generalized map needs I and J");
    return MapSpec::generalized(tuple_from(doc["I"], "I"), tuple_from(doc["J"], "J"));
  }
  if (v == "deep_dented") return MapSpec::deep_dented(int_field(doc, "m"), int_field(doc, "p"));
  if (v == "short_diagonal") return MapSpec::short_diagonal();
  if (v == "corrugated") return MapSpec::corrugated();
  if (v == "partially_corrugated")
    return MapSpec::partially_corrugated(int_field(doc, "q"), int_field(doc, "r"), int_field(doc, "l"));
  throw parse_error("unknown map variant " + v);
}

LaxVariant parse_lax_variant(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);
  auto number = [&](std::size_t i) {
    try {
      std::size_t used = 0;
      int v = std::stoi(parts.at(i), &used);
      if (used != parts[i].size()) throw parse_error("bad integer in Lax variant " + text);
      return v;
    } catch (const std::logic_error&) {
      throw parse_error("bad Lax variant " + text);
    }
  };
  if (parts.empty()) throw parse_error("empty Lax variant");
  const std::string& head = parts[0];
  if (head == "dented" && parts.size() == 2) return LaxVariant::dented(number(1));
  if (head == "tilde" && parts.size() == 2) return LaxVariant::tilde(number(1));
  if (head == "partial" && parts.size() == 3) return LaxVariant::partial(number(1), number(2));
  if (head == "short_diagonal" && parts.size() == 1) return LaxVariant::short_diagonal();
  if (head == "corrugated" && parts.size() == 1) return LaxVariant::corrugated();
  throw parse_error("unknown Lax variant " + text);
}

json spectral_to_json(const LaurentBivariate& r) {
  json out = json::array();
  for (const auto& [key, c] : r.terms())
    out.push_back({{"k", key.first}, {"lambda", key.second}, {"coeff", format_rational(c)}});
  return out;
}

json invariants_to_json(const InvariantSet& inv) {
  json doc;
  doc["tabulated"] = inv.tabulated;
  json fams = json::object();
  for (const auto& f : inv.families) {
    fams[f.name] = {{"k", f.k_power}, {"offset", f.offset}, {"upper", f.upper}, {"values", vector_to_json(f.values)}};
  }
  doc["families"] = std::move(fams);
  doc["constant"] = {{"exponent", inv.constant_exponent}, {"coeff", format_rational(inv.constant)}};
  doc["count"] = inv.count();
  return doc;
}

json casimirs_to_json(const std::vector<Casimir>& cs) {
  json doc = json::object();
  for (const auto& c : cs) {
    json entry = {{"value", format_rational(c.value)}};
    entry["product"] = c.product_formula ? json(format_rational(*c.product_formula)) : json(nullptr);
    doc[c.name] = std::move(entry);
  }
  return doc;
}

json branches_to_json(const BranchData& b) {
  json out = json::array();
  for (const auto& c : b.cycles) {
    out.push_back({{"e", c.e},
                   {"multiplicity", c.multiplicity},
                   {"exponent", exponent_string(c.exponent)},
                   {"leading", vector_to_json(c.leading.coefficients())},
                   {"simple", c.simple}});
  }
  return out;
}

}  // namespace pentagram::cli
