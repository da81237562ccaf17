#include "pentagram/maps.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "pentagram/error.hpp"

namespace pentagram {
namespace {

std::string join(const JumpTuple& t) {
  std::ostringstream out;
  for (std::size_t i = 0; i < t.size(); ++i) out << (i ? "," : "") << t[i];
  return out.str();
}

void check_tuple(const JumpTuple& t, int d, const char* name) {
  if (t.size() != static_cast<std::size_t>(d - 1)) {
    throw Error(ErrorCode::kInvalidArgument, std::string("jump tuple ") + name + " must have d-1 entries");
  }
  for (int x : t) {
    if (x < 1) throw Error(ErrorCode::kInvalidArgument, std::string("jump tuple ") + name + " must be positive");
  }
}

long total(const JumpTuple& t) { return std::accumulate(t.begin(), t.end(), 0L); }

// Intersection point of two lines (a1 a2) and (b1 b2) in a common plane.
Vec meet_lines(const Vec& a1, const Vec& a2, const Vec& b1, const Vec& b2, long k) {
  QMatrix m = column_matrix({a1, a2, scale(b1, Scalar(-1)), scale(b2, Scalar(-1))});
  auto ns = nullspace(m);
  if (ns.empty()) throw Error(ErrorCode::kNotCorrugated, "diagonals do not meet", k);
  if (ns.size() != 1) throw Error(ErrorCode::kDegenerateIntersection, "diagonals coincide", k);
  Vec p = add(scale(a1, ns[0][0]), scale(a2, ns[0][1]));
  if (is_zero(p)) throw Error(ErrorCode::kDegenerateIntersection, "diagonal lines are degenerate", k);
  return p;
}

std::vector<Vec> corrugated_points(const CoefficientArray& coeffs, long first, long last, bool inverse) {
  const int d = coeffs.d;
  VertexWindow win = vertex_window(coeffs, first - 1, last + d + 1);
  std::vector<Vec> out;
  for (long k = first; k <= last; ++k) {
    if (inverse) {
      out.push_back(meet_lines(win[k - 1], win[k], win[k + d - 1], win[k + d], k));
    } else {
      out.push_back(meet_lines(win[k], win[k + d], win[k + 1], win[k + d + 1], k));
    }
  }
  return out;
}

std::vector<Vec> partial_points(const CoefficientArray& coeffs, const CorrugationSpec& spec, long first,
                                long last) {
  const int d = coeffs.d;
  const long reach = corrugation_cluster(spec, d, 0).back();
  VertexWindow win = vertex_window(coeffs, first, last + spec.l + reach);
  std::vector<std::vector<Vec>> subspaces;
  for (long j = first; j <= last + spec.l; ++j) {
    std::vector<Vec> span;
    for (long i : corrugation_cluster(spec, d, j)) span.push_back(win[i]);
    subspaces.push_back(std::move(span));
  }
  std::vector<Vec> out;
  for (long k = first; k <= last; ++k) {
    std::vector<std::vector<Vec>> group(subspaces.begin() + (k - first), subspaces.begin() + (k - first) + spec.l + 1);
    auto meet = intersect_subspaces(group);
    if (meet.size() != 1) throw Error(ErrorCode::kDegenerateIntersection, "diagonal subspaces do not meet in a point", k);
    out.push_back(meet.front());
  }
  return out;
}

CoefficientReport reencode(const CoefficientArray& source, const std::vector<Vec>& points,
                           const QMatrix& hint) {
  return coefficients_from_vertices(points, source.d, source.n, hint);
}

}  // namespace

JumpTuple reversed(const JumpTuple& t) { return JumpTuple(t.rbegin(), t.rend()); }

JumpTuple ones(int d) { return JumpTuple(std::max(d - 1, 0), 1); }

JumpTuple dented_tuple(int d, int m) {
  if (m < 0 || m > d) throw Error(ErrorCode::kInvalidArgument, "dent position must lie in [0, d]");
  JumpTuple t = ones(d);
  if (m >= 1 && m <= d - 1) t[m - 1] = 2;
  return t;
}

JumpTuple deep_dented_tuple(int d, int m, int p) {
  if (m < 1 || m > d - 1) throw Error(ErrorCode::kInvalidArgument, "dent position must lie in [1, d-1]");
  if (p < 2) throw Error(ErrorCode::kInvalidArgument, "dent depth p must be >= 2");
  JumpTuple t = ones(d);
  t[m - 1] = p;
  return t;
}

MapSpec MapSpec::generalized(JumpTuple I, JumpTuple J) {
  MapSpec s;
  s.kind = Kind::kGeneralized;
  s.I = std::move(I);
  s.J = std::move(J);
  return s;
}

MapSpec MapSpec::dented(int m) {
  MapSpec s;
  s.kind = Kind::kDented;
  s.m = m;
  return s;
}

MapSpec MapSpec::deep_dented(int m, int p) {
  MapSpec s;
  s.kind = Kind::kDeepDented;
  s.m = m;
  s.p = p;
  return s;
}

MapSpec MapSpec::short_diagonal() {
  MapSpec s;
  s.kind = Kind::kShortDiagonal;
  return s;
}

MapSpec MapSpec::corrugated() {
  MapSpec s;
  s.kind = Kind::kCorrugated;
  return s;
}

MapSpec MapSpec::partially_corrugated(int q, int r, int l) {
  MapSpec s;
  s.kind = Kind::kPartiallyCorrugated;
  s.corrugation = CorrugationSpec{q, r, l};
  validate(s.corrugation);
  return s;
}

std::string MapSpec::describe() const {
  switch (kind) {
    case Kind::kGeneralized: return "generalized I=(" + join(I) + ") J=(" + join(J) + ")";
    case Kind::kDented: return "dented m=" + std::to_string(m);
    case Kind::kDeepDented: return "deep_dented m=" + std::to_string(m) + " p=" + std::to_string(p);
    case Kind::kShortDiagonal: return "short_diagonal";
    case Kind::kCorrugated: return "corrugated";
    case Kind::kPartiallyCorrugated:
      return "partially_corrugated (" + std::to_string(corrugation.q) + "," + std::to_string(corrugation.r) +
             ";" + std::to_string(corrugation.l) + ")";
  }
  return "unknown";
}

std::pair<JumpTuple, JumpTuple> jump_tuples(const MapSpec& spec, int d) {
  std::pair<JumpTuple, JumpTuple> out;
  switch (spec.kind) {
    case MapSpec::Kind::kGeneralized: out = {spec.I, spec.J}; break;
    case MapSpec::Kind::kDented: out = {dented_tuple(d, spec.m), ones(d)}; break;
    case MapSpec::Kind::kDeepDented: out = {deep_dented_tuple(d, spec.m, spec.p), ones(d)}; break;
    case MapSpec::Kind::kShortDiagonal: out = {JumpTuple(d - 1, 2), ones(d)}; break;
    default: throw Error(ErrorCode::kInvalidArgument, "map has no jump-tuple form: " + spec.describe());
  }
  check_tuple(out.first, d, "I");
  check_tuple(out.second, d, "J");
  return out;
}

std::vector<long> prefix_offsets(const JumpTuple& t) {
  std::vector<long> out{0};
  for (int x : t) out.push_back(out.back() + x);
  return out;
}

Hyperplane diagonal_plane(const VertexWindow& window, long k, const JumpTuple& I, int d) {
  check_tuple(I, d, "I");
  std::vector<Vec> pts;
  for (long off : prefix_offsets(I)) pts.push_back(window[k + off]);
  auto ns = nullspace(QMatrix::from_rows(pts));
  if (ns.size() != 1) throw Error(ErrorCode::kDegenerateSpan, "diagonal vertices are dependent", k);
  return ns.front();
}

Hyperplane diagonal_plane(const CoefficientArray& coeffs, long k, const JumpTuple& I) {
  VertexWindow win = vertex_window(coeffs, k, k + total(I));
  return diagonal_plane(win, k, I, coeffs.d);
}

std::vector<Vec> image_points(const CoefficientArray& coeffs, const MapSpec& spec, long first, long last) {
  const int d = coeffs.d;
  if (spec.kind == MapSpec::Kind::kCorrugated) return corrugated_points(coeffs, first, last, false);
  if (spec.kind == MapSpec::Kind::kPartiallyCorrugated) return partial_points(coeffs, spec.corrugation, first, last);
  auto [I, J] = jump_tuples(spec, d);
  const long reach_j = total(J);
  VertexWindow win = vertex_window(coeffs, first, last + reach_j + total(I));
  std::vector<Hyperplane> planes;
  for (long i = first; i <= last + reach_j; ++i) planes.push_back(diagonal_plane(win, i, I, d));
  const auto offsets = prefix_offsets(J);
  std::vector<Vec> out;
  for (long k = first; k <= last; ++k) {
    std::vector<Hyperplane> chosen;
    for (long off : offsets) chosen.push_back(planes[k - first + off]);
    try {
      out.push_back(intersect_hyperplanes(chosen, d));
    } catch (const Error&) {
      throw Error(ErrorCode::kDegenerateIntersection, "diagonal hyperplanes do not meet in a point", k);
    }
  }
  return out;
}

CoefficientReport apply_map(const CoefficientArray& coeffs, const MapSpec& spec) {
  if (spec.kind == MapSpec::Kind::kCorrugated) return corrugated_map(coeffs);
  if (spec.kind == MapSpec::Kind::kPartiallyCorrugated) return partially_corrugated_map(coeffs, spec.corrugation);
  auto pts = image_points(coeffs, spec, 0, coeffs.n + coeffs.d + 1);
  return reencode(coeffs, pts, vertex_monodromy(coeffs));
}

CoefficientReport corrugated_map(const CoefficientArray& coeffs) {
  if (!is_corrugated(coeffs)) throw Error(ErrorCode::kNotCorrugated, "polygon is not corrugated");
  auto pts = corrugated_points(coeffs, 0, coeffs.n + coeffs.d + 1, false);
  return reencode(coeffs, pts, vertex_monodromy(coeffs));
}

CoefficientReport inverse_corrugated_map(const CoefficientArray& coeffs) {
  if (!is_corrugated(coeffs)) throw Error(ErrorCode::kNotCorrugated, "polygon is not corrugated");
  auto pts = corrugated_points(coeffs, 0, coeffs.n + coeffs.d + 1, true);
  return reencode(coeffs, pts, vertex_monodromy(coeffs));
}

CoefficientReport partially_corrugated_map(const CoefficientArray& coeffs, const CorrugationSpec& spec) {
  validate(spec);
  if (!is_partially_corrugated(coeffs, spec)) {
    throw Error(ErrorCode::kNotPartiallyCorrugated, "polygon fails the partial corrugation rank test");
  }
  auto pts = partial_points(coeffs, spec, 0, coeffs.n + coeffs.d + 1);
  return reencode(coeffs, pts, vertex_monodromy(coeffs));
}

CoefficientReport alpha_map(const CoefficientArray& coeffs, const JumpTuple& I) {
  const int d = coeffs.d;
  check_tuple(I, d, "I");
  const long last = coeffs.n + d + 1;
  VertexWindow win = vertex_window(coeffs, 0, last + total(I));
  std::vector<Vec> planes;
  for (long k = 0; k <= last; ++k) planes.push_back(diagonal_plane(win, k, I, d));
  // Covectors transform by the inverse transpose.
  QMatrix hint = inverse(vertex_monodromy(coeffs)).transpose();
  return coefficients_from_vertices(planes, d, coeffs.n, hint);
}

CoefficientArray shift_indices(const CoefficientArray& coeffs, long c) {
  CoefficientArray out = coeffs;
  for (int j = 0; j < coeffs.n; ++j) {
    for (int k = 1; k <= coeffs.d; ++k) out.a[j][k - 1] = coeffs.coeff(j + c, k);
  }
  if (coeffs.quasi) {
    for (int i = 0; i <= coeffs.d; ++i) out.quasi->t[i] = coeffs.t(i + c);
  }
  return out;
}

std::optional<int> detect_shift(const CoefficientArray& a, const CoefficientArray& b) {
  if (a.d != b.d || a.n != b.n) return std::nullopt;
  const long len = a.n + a.d + 2;
  VertexWindow wa = vertex_window(a, 0, a.n - 1 + len - 1);
  std::vector<Vec> target = vertex_window(b, 0, len - 1).slice(0, len - 1);
  for (int c = 0; c < a.n; ++c) {
    if (projective_equivalence(wa.slice(c, c + len - 1), target, a.d)) return c;
  }
  return std::nullopt;
}

LiftedVertex dual_dented_image(const CoefficientArray& coeffs, int m, long k) {
  const int d = coeffs.d;
  if (m < 1 || m > d - 1) throw Error(ErrorCode::kInvalidArgument, "dent position must lie in [1, d-1]");
  VertexWindow win = vertex_window(coeffs, k, k + d + 1);
  Vec r = scale(win[k], (d % 2 == 0) ? Scalar(1) : Scalar(-1));
  for (int i = 1; i <= m; ++i) r = add(r, scale(win[k + i], coeffs.coeff(k, i)));
  std::vector<Vec> head = win.slice(k, k + m);
  std::vector<Vec> tail = win.slice(k + m + 1, k + d + 1);
  head.push_back(r);
  tail.push_back(r);
  if (span_rank(head) != static_cast<std::size_t>(m + 1) ||
      span_rank(tail) != static_cast<std::size_t>(d - m + 1)) {
    throw Error(ErrorCode::kDegenerateSpan, "R_k leaves one of the two spans", k);
  }
  return r;
}

std::vector<Vec> cramer_dependencies(const std::vector<Vec>& points, int d, int rows) {
  if (points.size() < static_cast<std::size_t>(rows + d + 1)) {
    throw Error(ErrorCode::kInvalidArgument, "not enough points for the requested dependencies");
  }
  std::vector<Vec> out;
  for (int j = 0; j < rows; ++j) {
    std::vector<Vec> cols(points.begin() + j, points.begin() + j + d + 1);
    const Scalar base = determinant(column_matrix(cols));
    if (base == 0) throw Error(ErrorCode::kDegenerateInput, "consecutive points are dependent", j);
    Vec row(d + 1);
    for (int i = 0; i <= d; ++i) {
      std::vector<Vec> swapped = cols;
      swapped[i] = points[j + d + 1];
      row[i] = determinant(column_matrix(swapped)) / base;
    }
    out.push_back(std::move(row));
  }
  return out;
}

CoefficientArray scaling_transform(const CoefficientArray& coeffs, int m, const Scalar& s) {
  if (s == 0) throw Error(ErrorCode::kInvalidArgument, "scaling factor must be nonzero");
  const int d = coeffs.d;
  if (m < 0 || m > d) throw Error(ErrorCode::kInvalidArgument, "dent position must lie in [0, d]");
  CoefficientArray out = coeffs;
  for (auto& row : out.a) {
    for (int k = 1; k <= d; ++k) row[k - 1] *= power(s, k <= m ? -k : d + 1 - k);
  }
  return out;
}

}  // namespace pentagram
