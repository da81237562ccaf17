#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "pentagram/linalg.hpp"
#include "pentagram/maps.hpp"
#include "pentagram/spectral.hpp"
#include "serialize.hpp"

namespace pentagram::cli {

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
    case ErrorCode::kParseError:
      return kExitBadArguments;
    case ErrorCode::kExhaustedRetries:
      return kExitGenerationFailed;
    case ErrorCode::kStructureMismatch:
    case ErrorCode::kVariantMismatch:
    case ErrorCode::kZeroDiscriminant:
    case ErrorCode::kNonSimpleBranching:
      return kExitStructureMismatch;
    default:
      return kExitDegenerateGeometry;
  }
}

namespace {

// Raised for argument problems found after CLI11 parsing.
struct UsageError {
  std::string message;
};

struct Common {
  std::string input;
  std::string output;
  std::optional<std::uint64_t> seed;
  std::string format = "json";
};

struct PolygonArgs {
  int d = 0;
  int n = 0;
  long bound = 5;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--input", c.input, "input JSON file")->check(CLI::ExistingFile);
  cmd->add_option("--output", c.output, "output file (default stdout)");
  cmd->add_option("--seed", c.seed, "seed for the mt19937_64 generator");
  cmd->add_option("--format", c.format, "output format")->check(CLI::IsMember({"json"}));
}

void add_polygon_args(CLI::App* cmd, PolygonArgs& p) {
  cmd->add_option("--d", p.d, "dimension")->check(CLI::PositiveNumber);
  cmd->add_option("--n", p.n, "number of vertices per period")->check(CLI::PositiveNumber);
  cmd->add_option("--bound", p.bound, "numerator and denominator bound")->check(CLI::PositiveNumber);
}

void validate_output(const Common& c) {
  if (c.output.empty()) return;
  std::filesystem::path parent = std::filesystem::path(c.output).parent_path();
  if (!parent.empty() && !std::filesystem::is_directory(parent))
    throw UsageError{"output directory does not exist: " + parent.string()};
}

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError{"cannot read " + path};
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParseError, path + ": " + e.what());
  }
}

void emit(const Common& c, const std::string& text, std::ostream& out) {
  if (c.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(c.output, std::ios::binary);
  if (!file) throw UsageError{"cannot write " + c.output};
  file << text;
}

void emit_json(const Common& c, const json& doc, std::ostream& out) { emit(c, doc.dump(2) + "\n", out); }

std::uint64_t require_seed(const Common& c) {
  if (!c.seed) throw UsageError{"--seed is required"};
  return *c.seed;
}

void require_dims(const PolygonArgs& p) {
  if (p.d < 1 || p.n < 1) throw UsageError{"--d and --n are required"};
}

// Polygon from --input, or a fresh sample when no input is given.
CoefficientArray load_or_sample(const Common& c, const PolygonArgs& p,
                                const std::function<CoefficientArray(int, int, std::uint64_t, long)>& sample) {
  if (!c.input.empty()) {
    CoefficientArray coeffs = polygon_from_json(read_json(c.input));
    vertices_from_coefficients(coeffs, static_cast<std::size_t>(coeffs.n + coeffs.d + 1));
    return coeffs;
  }
  require_dims(p);
  return sample(p.d, p.n, require_seed(c), p.bound);
}

CoefficientArray sample_generic(int d, int n, std::uint64_t s, long b) { return random_generic_polygon(d, n, s, b); }
CoefficientArray sample_corrugated(int d, int n, std::uint64_t s, long b) {
  return random_corrugated_polygon(d, n, s, b);
}

MapSpec parse_map_argument(const std::string& text) {
  json doc;
  if (!text.empty() && text.front() == '@') {
    doc = read_json(text.substr(1));
  } else {
    try {
      doc = json::parse(text);
    } catch (const json::parse_error& e) {
      throw Error(ErrorCode::kParseError, std::string("map spec: ") + e.what());
    }
  }
  return map_from_json(doc);
}

// The Lax variant whose spectral function the map conserves, if any.
std::optional<LaxVariant> lax_for_map(const MapSpec& spec, int d) {
  using K = MapSpec::Kind;
  switch (spec.kind) {
    case K::kDented:
      if (spec.m >= 1 && spec.m <= d - 1) return LaxVariant::dented(spec.m);
      return std::nullopt;
    case K::kGeneralized:
      for (int m = 1; m <= d - 1; ++m)
        if (spec.I == dented_tuple(d, m) && spec.J == ones(d)) return LaxVariant::dented(m);
      return std::nullopt;
    case K::kShortDiagonal:
      if (d == 3) return LaxVariant::short_diagonal();
      return std::nullopt;
    case K::kCorrugated:
      if (d == 3) return LaxVariant::corrugated();
      return std::nullopt;
    case K::kPartiallyCorrugated: {
      const auto& c = spec.corrugation;
      const int m = c.q - 1;
      if (c.r == c.l - m + 1 && c.l <= d) return LaxVariant::partial(m, c.l);
      return std::nullopt;
    }
    case K::kDeepDented:
      return std::nullopt;
  }
  return std::nullopt;
}

// Checks with witnesses; skipped checks carry reasons.
class Report {
 public:
  explicit Report(std::string suite) { doc_["suite"] = std::move(suite); }
  json& params() { return doc_["params"]; }
  void check(const std::string& name, bool pass, json witness = json::object()) {
    witness["name"] = name;
    witness["pass"] = pass;
    checks_.push_back(std::move(witness));
    all_ = all_ && pass;
  }
  void skip(const std::string& name, const std::string& reason) {
    skipped_.push_back({{"name", name}, {"reason", reason}});
  }
  bool pass() const { return all_; }
  json finish() {
    doc_["checks"] = checks_;
    doc_["skipped"] = skipped_;
    doc_["pass"] = all_;
    return doc_;
  }

 private:
  json doc_ = json::object();
  json checks_ = json::array();
  json skipped_ = json::array();
  bool all_ = true;
};

json differing_entries(const CoefficientArray& a, const CoefficientArray& b) {
  json out = json::array();
  if (a.d != b.d || a.n != b.n) return out;
  for (int j = 0; j < a.n; ++j)
    for (int k = 1; k <= a.d; ++k)
      if (a.coeff(j, k) != b.coeff(j, k)) out.push_back({{"j", j}, {"k", k}});
  return out;
}

json differing_monomials(const LaurentBivariate& a, const LaurentBivariate& b) {
  json out = json::array();
  std::set<std::pair<int, int>> keys;
  for (const auto& [key, c] : a.terms()) keys.insert(key);
  for (const auto& [key, c] : b.terms()) keys.insert(key);
  for (const auto& key : keys)
    if (a.coeff(key.first, key.second) != b.coeff(key.first, key.second))
      out.push_back({{"k", key.first}, {"lambda", key.second}});
  return out;
}

json shift_witness(const std::optional<int>& c) { return {{"shift", c ? json(*c) : json(nullptr)}}; }

// ------------------------------------------------------------------ commands

struct GenerateArgs {
  bool corrugated = false;
  std::vector<int> partial;
  bool closed = false;
};

int cmd_generate(const Common& c, const PolygonArgs& p, const GenerateArgs& g, std::ostream& out) {
  require_dims(p);
  const std::uint64_t seed = require_seed(c);
  if (p.n < p.d + 2) throw UsageError{"need n >= d + 2"};
  CoefficientArray coeffs;
  if (g.corrugated + !g.partial.empty() + g.closed > 1)
    throw UsageError{"--corrugated, --partial and --closed are exclusive"};
  if (g.corrugated) {
    coeffs = random_corrugated_polygon(p.d, p.n, seed, p.bound);
  } else if (!g.partial.empty()) {
    if (g.partial.size() != 2) throw UsageError{"--partial takes m,l"};
    coeffs = random_partially_corrugated_polygon(p.d, p.n, g.partial[0], g.partial[1], seed, p.bound);
  } else if (g.closed) {
    coeffs = random_closed_polygon(p.d, p.n, seed, p.bound);
  } else {
    coeffs = random_generic_polygon(p.d, p.n, seed, p.bound);
  }
  emit_json(c, polygon_to_json(coeffs), out);
  return kExitOk;
}

int cmd_apply(const Common& c, const std::string& map_text, int iterations, bool trace, std::ostream& out) {
  if (c.input.empty()) throw UsageError{"--input is required"};
  if (iterations < 1) throw UsageError{"--iterations must be positive"};
  const MapSpec spec = parse_map_argument(map_text);
  CoefficientArray coeffs = load_or_sample(c, {}, sample_generic);
  json steps = json::array();
  for (int step = 1; step <= iterations; ++step) {
    try {
      CoefficientReport r = apply_map(coeffs, spec);
      if (trace) steps.push_back(report_to_json(r));
      coeffs = std::move(r.coeffs);
    } catch (const Error& e) {
      std::ostringstream os;
      os << "step " << step << ": " << e.what();
      throw Error(e.code(), os.str(), e.index());
    }
  }
  json doc = polygon_to_json(coeffs);
  if (trace) doc = {{"polygon", doc}, {"trace", steps}};
  emit_json(c, doc, out);
  return kExitOk;
}

int cmd_coeffs(const Common& c, std::ostream& out) {
  if (c.input.empty()) throw UsageError{"--input is required"};
  const PointSet pts = points_from_json(read_json(c.input));
  emit_json(c, report_to_json(coefficients_from_vertices(pts.points, pts.d, pts.n)), out);
  return kExitOk;
}

struct VerifyArgs {
  std::string suite;
  std::vector<int> I, J;
  int m = 1;
  int p = 2;
  int src_c = 2;
  int q = 2, r = 2, l = 2;
  std::string s = "2";
  std::string variant;
  std::string lax = "dented:1";
};

MapSpec spec_from_verify(const VerifyArgs& v) {
  if (v.variant == "dented") return MapSpec::dented(v.m);
  if (v.variant == "generalized") return MapSpec::generalized(v.I, v.J);
  if (v.variant == "deep_dented") return MapSpec::deep_dented(v.m, v.p);
  if (v.variant == "short_diagonal") return MapSpec::short_diagonal();
  if (v.variant == "corrugated") return MapSpec::corrugated();
  if (v.variant == "partially_corrugated") return MapSpec::partially_corrugated(v.q, v.r, v.l);
  throw UsageError{"unknown --variant " + v.variant};
}

void verify_duality(Report& rep, const Common& c, const PolygonArgs& p, const VerifyArgs& v) {
  if (v.I.empty() || v.J.empty()) throw UsageError{"duality needs --I and --J"};
  const CoefficientArray poly = load_or_sample(c, p, sample_generic);
  rep.params() = {{"d", poly.d}, {"n", poly.n}, {"I", v.I}, {"J", v.J}};
  const MapSpec forward = MapSpec::generalized(v.I, v.J);
  const MapSpec backward = MapSpec::generalized(reversed(v.J), reversed(v.I));
  const CoefficientReport image = apply_map(poly, forward);
  const CoefficientReport back = apply_map(image.coeffs, backward);
  const auto shift = detect_shift(poly, back.coeffs);
  rep.check("composition is an index shift", shift.has_value(), shift_witness(shift));
  if (shift) {
    const CoefficientArray expected = shift_indices(poly, *shift);
    rep.check("coefficients equal after shift", expected == back.coeffs,
              {{"differing", differing_entries(expected, back.coeffs)}});
  } else {
    rep.skip("coefficients equal after shift", "no shift found");
  }
}

void verify_scaling(Report& rep, const Common& c, const PolygonArgs& p, const VerifyArgs& v) {
  const Scalar s = parse_rational(v.s);
  const CoefficientArray poly = load_or_sample(c, p, sample_generic);
  rep.params() = {{"d", poly.d}, {"n", poly.n}, {"m", v.m}, {"s", format_rational(s)}};
  const CoefficientArray lhs = apply_map(scaling_transform(poly, v.m, s), MapSpec::dented(v.m)).coeffs;
  const CoefficientArray rhs = scaling_transform(apply_map(poly, MapSpec::dented(v.m)).coeffs, v.m, s);
  rep.check("T_m commutes with the scaling", lhs == rhs, {{"differing", differing_entries(lhs, rhs)}});
}

void verify_conservation(Report& rep, const Common& c, const PolygonArgs& p, const VerifyArgs& v) {
  if (v.variant.empty()) throw UsageError{"conservation needs --variant"};
  const MapSpec spec = spec_from_verify(v);
  const int d = !c.input.empty() ? polygon_from_json(read_json(c.input)).d : p.d;
  rep.params() = {{"map", map_to_json(spec)}, {"d", d}};
  const auto lax = lax_for_map(spec, d);
  if (!lax) {
    rep.check("Lax variant available", false, {{"reason", "no Lax variant registered for " + spec.describe()}});
    return;
  }
  rep.params()["lax"] = lax->describe();
  std::function<CoefficientArray(int, int, std::uint64_t, long)> sample = sample_generic;
  if (spec.kind == MapSpec::Kind::kCorrugated) sample = sample_corrugated;
  if (spec.kind == MapSpec::Kind::kPartiallyCorrugated) {
    const int m = lax->m, l = lax->l;
    sample = [m, l](int dd, int n, std::uint64_t s, long b) {
      return random_partially_corrugated_polygon(dd, n, m, l, s, b);
    };
  }
  const CoefficientArray poly = load_or_sample(c, p, sample);
  rep.params()["n"] = poly.n;
  const LaurentBivariate before = spectral_function(poly, *lax);
  const CoefficientReport image = apply_map(poly, spec);
  if (!image.periodic) {
    rep.check("image has periodic coordinates", false, {{"reason", "image closes only quasi-periodically"}});
    return;
  }
  const LaurentBivariate after = spectral_function(image.coeffs, *lax);
  rep.check("R(k, lambda) conserved", before == after, {{"differing", differing_monomials(before, after)}});
}

void verify_corrugated(Report& rep, const Common& c, const PolygonArgs& p) {
  const CoefficientArray poly = load_or_sample(c, p, sample_corrugated);
  rep.params() = {{"d", poly.d}, {"n", poly.n}};
  rep.check("input is corrugated", is_corrugated(poly));
  if (!rep.pass()) {
    rep.skip("corrugated restriction", "input polygon is not corrugated");
    return;
  }
  const CoefficientReport cor = corrugated_map(poly);
  rep.check("T_cor image is corrugated", is_corrugated(cor.coeffs));
  std::vector<CoefficientArray> images;
  for (int m = 1; m <= poly.d - 1; ++m) {
    const CoefficientReport img = apply_map(poly, MapSpec::dented(m));
    const std::string tag = "m=" + std::to_string(m);
    rep.check("T_m image is corrugated, " + tag, is_corrugated(img.coeffs));
    rep.check("T_m agrees with T_cor up to shift, " + tag, detect_shift(cor.coeffs, img.coeffs).has_value(),
              shift_witness(detect_shift(cor.coeffs, img.coeffs)));
    images.push_back(img.coeffs);
  }
  for (std::size_t i = 1; i < images.size(); ++i) {
    const auto s = detect_shift(images.front(), images[i]);
    rep.check("T_1 and T_" + std::to_string(i + 1) + " agree up to shift", s.has_value(), shift_witness(s));
  }
  const auto back = detect_shift(poly, inverse_corrugated_map(cor.coeffs).coeffs);
  rep.check("inverse T_cor recovers the input up to shift", back.has_value(), shift_witness(back));
}

void verify_psi(Report& rep, const Common& c, const PolygonArgs& p, const VerifyArgs& v) {
  const CoefficientArray src = load_or_sample(c, p, sample_generic);
  const int cd = src.d;
  const CorrugationSpec spec{v.m + 1, cd - v.m + 1, cd};
  rep.params() = {{"c", cd}, {"p", v.p}, {"m", v.m}, {"n", src.n}, {"target_d", cd + v.p - 2}};
  const CoefficientReport embedded = psi_embed(src, v.p, v.m);
  rep.check("psi image is partially corrugated", is_partially_corrugated(embedded.coeffs, spec),
            {{"q", spec.q}, {"r", spec.r}, {"l", spec.l}});
  const CoefficientReport lhs = psi_embed(apply_map(src, MapSpec::deep_dented(v.m, v.p)).coeffs, v.p, v.m);
  const CoefficientReport rhs = partially_corrugated_map(embedded.coeffs, spec);
  const auto s = detect_shift(lhs.coeffs, rhs.coeffs);
  rep.check("psi intertwines the deep-dented map with T_par", s.has_value(), shift_witness(s));
}

void verify_casimirs(Report& rep, const Common& c, const PolygonArgs& p, const VerifyArgs& v) {
  const LaxVariant lax = parse_lax_variant(v.lax);
  const bool corr = lax.kind == LaxVariant::Kind::kCorrugated3D;
  const CoefficientArray poly = load_or_sample(c, p, corr ? sample_corrugated : sample_generic);
  rep.params() = {{"lax", lax.describe()}, {"d", poly.d}, {"n", poly.n}};
  const InvariantSet inv = extract_invariants(spectral_function(poly, lax), lax, poly.n);
  if (!inv.tabulated) {
    rep.skip("casimir identities", "no tabulated Casimirs for this variant and n");
    return;
  }
  for (const auto& cas : casimirs(inv, poly)) {
    if (!cas.product_formula) {
      rep.skip(cas.name, "no closed product form");
      continue;
    }
    rep.check(cas.name + " equals its product formula", cas.value == *cas.product_formula,
              {{"value", format_rational(cas.value)}, {"product", format_rational(*cas.product_formula)}});
  }
}

int cmd_verify(const Common& c, const PolygonArgs& p, const VerifyArgs& v, std::ostream& out) {
  validate_output(c);
  Report rep(v.suite);
  if (v.suite == "duality") verify_duality(rep, c, p, v);
  else if (v.suite == "scaling") verify_scaling(rep, c, p, v);
  else if (v.suite == "conservation") verify_conservation(rep, c, p, v);
  else if (v.suite == "corrugated") verify_corrugated(rep, c, p);
  else if (v.suite == "psi") verify_psi(rep, c, p, v);
  else if (v.suite == "casimirs") verify_casimirs(rep, c, p, v);
  else throw UsageError{"unknown suite " + v.suite};
  const bool pass = rep.pass();
  emit_json(c, rep.finish(), out);
  return pass ? kExitOk : kExitVerificationFailed;
}

int cmd_spectrum(const Common& c, const PolygonArgs& p, const std::string& variant, bool with_genus,
                 std::ostream& out) {
  const LaxVariant lax = parse_lax_variant(variant);
  std::function<CoefficientArray(int, int, std::uint64_t, long)> sample = sample_generic;
  if (lax.kind == LaxVariant::Kind::kCorrugated3D) sample = sample_corrugated;
  if (lax.kind == LaxVariant::Kind::kPartial) {
    sample = [lax](int d, int n, std::uint64_t s, long b) {
      return random_partially_corrugated_polygon(d, n, lax.m, lax.l, s, b);
    };
  }
  const CoefficientArray poly = load_or_sample(c, p, sample);
  const LaurentBivariate r = spectral_function(poly, lax);
  const InvariantSet inv = extract_invariants(r, lax, poly.n);
  json doc;
  doc["variant"] = lax.describe();
  doc["n"] = poly.n;
  doc["d"] = poly.d;
  doc["R"] = spectral_to_json(r);
  doc["invariants"] = invariants_to_json(inv);
  doc["casimirs"] = casimirs_to_json(casimirs(inv, poly));
  doc["branches"] = {{"zero", branches_to_json(newton_branches(r, BranchLocation::kZero))},
                     {"infinity", branches_to_json(newton_branches(r, BranchLocation::kInfinity))}};
  doc["genus"] = nullptr;
  try {
    const FiniteBranches fb = finite_branches(r);
    doc["finite_branch_count"] = fb.count;
    doc["squarefree"] = fb.squarefree;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kZeroDiscriminant) throw;
    doc["finite_branch_count"] = nullptr;
    doc["squarefree"] = false;
    doc["note"] = e.what();
  }
  if (with_genus) {
    try {
      doc["genus"] = genus(r);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kNonSimpleBranching && e.code() != ErrorCode::kZeroDiscriminant) throw;
      doc["genus_note"] = e.what();
    }
  }
  emit_json(c, doc, out);
  return kExitOk;
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", x);
  return buf;
}

int cmd_plot(const Common& c, const std::vector<int>& chart, int iterations, const std::string& map_text,
             std::ostream& out) {
  if (c.input.empty()) throw UsageError{"--input is required"};
  if (iterations < 0) throw UsageError{"--iterations must be non-negative"};
  CoefficientArray coeffs = polygon_from_json(read_json(c.input));
  const int d = coeffs.d;
  if (d != 2 && d != 3) throw UsageError{"plot supports d = 2 and d = 3"};
  if (chart.size() != 3) throw UsageError{"--chart takes three coordinate indices x,y,w"};
  for (int i : chart)
    if (i < 0 || i > d) throw UsageError{"chart index out of range"};
  if (chart[0] == chart[1] || chart[0] == chart[2] || chart[1] == chart[2])
    throw UsageError{"chart indices must be distinct"};
  const MapSpec spec = map_text.empty() ? MapSpec::dented(1) : parse_map_argument(map_text);

  // Every iterate is drawn in the frame of the input polygon, composed with
  // Id + ones so that V_0..V_d have no vanishing coordinate. `frame` carries
  // the current polygon's lifts into that picture.
  QMatrix frame = QMatrix::identity(static_cast<std::size_t>(d + 1));
  for (std::size_t r = 0; r < frame.rows(); ++r)
    for (std::size_t col = 0; col < frame.cols(); ++col) frame(r, col) += 1;
  std::vector<std::vector<std::pair<double, double>>> layers;
  for (int it = 0; it <= iterations; ++it) {
    const auto verts = vertices_from_coefficients(coeffs, static_cast<std::size_t>(coeffs.n));
    std::vector<std::pair<double, double>> layer;
    for (int j = 0; j < coeffs.n; ++j) {
      const Vec v = frame * verts[static_cast<std::size_t>(j)];
      const Scalar& w = v[static_cast<std::size_t>(chart[2])];
      if (w == 0) throw Error(ErrorCode::kDegenerateInput, "vertex on the chart's hyperplane at infinity", j);
      layer.emplace_back(Scalar(v[static_cast<std::size_t>(chart[0])] / w).get_d(),
                         Scalar(v[static_cast<std::size_t>(chart[1])] / w).get_d());
    }
    layers.push_back(std::move(layer));
    if (it == iterations) break;
    const std::size_t span = static_cast<std::size_t>(coeffs.n + d + 2);
    const auto image = image_points(coeffs, spec, 0, static_cast<long>(span) - 1);
    CoefficientReport next = apply_map(coeffs, spec);
    const auto lifted = vertices_from_coefficients(next.coeffs, span);
    const auto g = projective_equivalence(lifted, image, d);
    if (!g) throw Error(ErrorCode::kDegenerateInput, "cannot align the image frame", it);
    frame = frame * *g;
    coeffs = std::move(next.coeffs);
  }

  double lo_x = layers[0][0].first, hi_x = lo_x, lo_y = layers[0][0].second, hi_y = lo_y;
  for (const auto& layer : layers)
    for (const auto& [x, y] : layer) {
      lo_x = std::min(lo_x, x), hi_x = std::max(hi_x, x);
      lo_y = std::min(lo_y, y), hi_y = std::max(hi_y, y);
    }
  const double size = 480, margin = 20;
  const double span = std::max({hi_x - lo_x, hi_y - lo_y, 1e-9});
  auto px = [&](double x) { return margin + (x - lo_x) / span * (size - 2 * margin); };
  auto py = [&](double y) { return size - margin - (y - lo_y) / span * (size - 2 * margin); };
  static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size << "\" viewBox=\"0 0 "
      << size << " " << size << "\">\n";
  for (std::size_t i = 0; i < layers.size(); ++i) {
    const char* colour = palette[i % (sizeof palette / sizeof *palette)];
    svg << "  <g id=\"iterate-" << i << "\" stroke=\"" << colour << "\" fill=\"" << colour << "\">\n";
    svg << "    <polygon fill=\"none\" stroke-width=\"1\" points=\"";
    for (std::size_t j = 0; j < layers[i].size(); ++j)
      svg << (j ? " " : "") << fmt(px(layers[i][j].first)) << "," << fmt(py(layers[i][j].second));
    svg << "\"/>\n";
    for (const auto& [x, y] : layers[i])
      svg << "    <circle cx=\"" << fmt(px(x)) << "\" cy=\"" << fmt(py(y)) << "\" r=\"2.5\"/>\n";
    svg << "  </g>\n";
  }
  svg << "</svg>\n";
  emit(c, svg.str(), out);
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact pentagram maps on twisted polygons", "pentagram"};
  app.require_subcommand(1);

  Common common;
  PolygonArgs poly;

  auto* generate = app.add_subcommand("generate", "sample a generic polygon");
  GenerateArgs gen;
  add_common(generate, common);
  add_polygon_args(generate, poly);
  generate->add_flag("--corrugated", gen.corrugated, "corrugated polygon");
  generate->add_option("--partial", gen.partial, "partially corrugated: m,l")->delimiter(',');
  generate->add_flag("--closed", gen.closed, "closed polygon from periodic points");

  auto* apply = app.add_subcommand("apply", "apply a pentagram map");
  std::string map_text;
  int iterations = 1;
  bool trace = false;
  add_common(apply, common);
  apply->add_option("--map", map_text, "map spec JSON, or @file")->required();
  apply->add_option("--iterations", iterations, "number of applications");
  apply->add_flag("--trace", trace, "include every intermediate coefficient report");

  auto* coeffs = app.add_subcommand("coeffs", "coefficients of a polygon given by vertices");
  add_common(coeffs, common);

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  VerifyArgs ver;
  add_common(verify, common);
  add_polygon_args(verify, poly);
  verify->add_option("suite", ver.suite, "duality|scaling|conservation|corrugated|psi|casimirs")
      ->required()
      ->check(CLI::IsMember({"duality", "scaling", "conservation", "corrugated", "psi", "casimirs"}));
  verify->add_option("--I", ver.I, "jump tuple I")->delimiter(',');
  verify->add_option("--J", ver.J, "jump tuple J")->delimiter(',');
  verify->add_option("--m", ver.m, "dent position");
  verify->add_option("--p", ver.p, "dent depth");
  verify->add_option("--q", ver.q, "first cluster size");
  verify->add_option("--r", ver.r, "second cluster size");
  verify->add_option("--l", ver.l, "diagonal dimension");
  verify->add_option("--s", ver.s, "scaling factor p/q");
  verify->add_option("--variant", ver.variant, "map variant for conservation");
  verify->add_option("--lax", ver.lax, "Lax variant for casimirs");

  auto* spectrum = app.add_subcommand("spectrum", "spectral report");
  std::string variant = "dented:1";
  bool with_genus = false;
  add_common(spectrum, common);
  add_polygon_args(spectrum, poly);
  spectrum->add_option("--variant", variant, "dented:M | tilde:M | partial:M:L | short_diagonal | corrugated");
  spectrum->add_flag("--genus", with_genus, "compute the genus of the spectral curve");

  auto* plot = app.add_subcommand("plot", "SVG of the polygon and its iterates");
  std::vector<int> chart{0, 1, 2};
  int plot_iterations = 1;
  std::string plot_map;
  add_common(plot, common);
  plot->add_option("--chart", chart, "affine chart x,y,w")->delimiter(',');
  plot->add_option("--iterations", plot_iterations, "number of iterates drawn");
  plot->add_option("--map", plot_map, "map spec JSON, or @file (default dented m=1)");

  try {
    std::vector<std::string> reversed_args(args.rbegin(), args.rend());
    app.parse(reversed_args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitBadArguments;
  }

  try {
    validate_output(common);
    if (*generate) return cmd_generate(common, poly, gen, out);
    if (*apply) return cmd_apply(common, map_text, iterations, trace, out);
    if (*coeffs) return cmd_coeffs(common, out);
    if (*verify) return cmd_verify(common, poly, ver, out);
    if (*spectrum) return cmd_spectrum(common, poly, variant, with_genus, out);
    if (*plot) {
      try {
        return cmd_plot(common, chart, plot_iterations, plot_map, out);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kDegenerateInput) throw;
        err << json{{"error", std::string(to_string(e.code()))}, {"message", e.what()}}.dump() << "\n";
        return kExitChartFailure;
      }
    }
  } catch (const UsageError& e) {
    err << "error: " << e.message << "\n";
    return kExitBadArguments;
  } catch (const Error& e) {
    json doc = {{"error", std::string(to_string(e.code()))}, {"message", e.what()}};
    if (e.index()) doc["index"] = *e.index();
    err << doc.dump() << "\n";
    return exit_code_for(e.code());
  }
  return kExitBadArguments;
}

}  // namespace pentagram::cli
