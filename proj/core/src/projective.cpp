#include "pentagram/projective.hpp"

#include "pentagram/error.hpp"

namespace pentagram {
namespace {

void check_lengths(const std::vector<Vec>& vs, int d, const char* what) {
  if (vs.size() != static_cast<std::size_t>(d)) {
    throw Error(ErrorCode::kInvalidArgument, std::string(what) + ": expected d entries");
  }
  for (const auto& v : vs) {
    if (v.size() != static_cast<std::size_t>(d + 1)) {
      throw Error(ErrorCode::kInvalidArgument, std::string(what) + ": expected (d+1)-vectors");
    }
  }
}

struct Frame {
  std::vector<std::size_t> basis;  // d+1 indices
  std::size_t unit;                // index of the (d+2)-th point
};

// Coefficients of p in the basis of columns, or nullopt when not all nonzero.
std::optional<Vec> frame_coefficients(const QMatrix& basis, const Vec& p) {
  auto c = solve(basis, p);
  if (!c) return std::nullopt;
  for (const auto& x : *c) {
    if (x == 0) return std::nullopt;
  }
  return c;
}

std::optional<Frame> find_frame(const std::vector<Vec>& pts, int d) {
  Frame f;
  std::vector<Vec> chosen;
  for (std::size_t i = 0; i < pts.size() && chosen.size() < static_cast<std::size_t>(d + 1); ++i) {
    chosen.push_back(pts[i]);
    if (span_rank(chosen) == chosen.size()) {
      f.basis.push_back(i);
    } else {
      chosen.pop_back();
    }
  }
  if (f.basis.size() != static_cast<std::size_t>(d + 1)) return std::nullopt;
  QMatrix basis = column_matrix(chosen);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    bool used = false;
    for (auto b : f.basis) used = used || b == i;
    if (used) continue;
    if (frame_coefficients(basis, pts[i])) {
      f.unit = i;
      return f;
    }
  }
  return std::nullopt;
}

// Columns c_i * P_i so that the unit point is their sum.
std::optional<QMatrix> frame_matrix(const std::vector<Vec>& pts, const Frame& f) {
  std::vector<Vec> cols;
  for (auto i : f.basis) cols.push_back(pts[i]);
  QMatrix basis = column_matrix(cols);
  if (span_rank(cols) != cols.size()) return std::nullopt;
  auto c = frame_coefficients(basis, pts[f.unit]);
  if (!c) return std::nullopt;
  for (std::size_t i = 0; i < cols.size(); ++i) cols[i] = scale(cols[i], (*c)[i]);
  return column_matrix(cols);
}

}  // namespace

QMatrix column_matrix(const std::vector<Vec>& vectors) {
  return QMatrix::from_columns(vectors);
}

std::size_t span_rank(const std::vector<Vec>& vectors) {
  if (vectors.empty()) return 0;
  return rank(QMatrix::from_rows(vectors));
}

Hyperplane hyperplane_through(const std::vector<LiftedVertex>& points, int d) {
  check_lengths(points, d, "hyperplane_through");
  auto ns = nullspace(QMatrix::from_rows(points));
  if (ns.size() != 1) throw Error(ErrorCode::kDegenerateSpan, "points do not span a hyperplane");
  return ns.front();
}

LiftedVertex intersect_hyperplanes(const std::vector<Hyperplane>& planes, int d) {
  check_lengths(planes, d, "intersect_hyperplanes");
  auto ns = nullspace(QMatrix::from_rows(planes));
  if (ns.size() != 1) {
    throw Error(ErrorCode::kDegenerateIntersection, "hyperplanes do not meet in a single point");
  }
  return ns.front();
}

std::vector<Vec> annihilator(const std::vector<Vec>& vectors) {
  if (vectors.empty()) return {};
  return nullspace(QMatrix::from_rows(vectors));
}

std::vector<Vec> intersect_subspaces(const std::vector<std::vector<Vec>>& spans) {
  std::vector<Vec> equations;
  std::size_t dim = 0;
  for (const auto& span : spans) {
    if (span.empty()) return {};
    dim = span.front().size();
    auto ann = annihilator(span);
    equations.insert(equations.end(), ann.begin(), ann.end());
  }
  if (equations.empty()) {
    std::vector<Vec> out;
    for (std::size_t i = 0; i < dim; ++i) {
      Vec e(dim, Scalar(0));
      e[i] = 1;
      out.push_back(std::move(e));
    }
    return out;
  }
  return nullspace(QMatrix::from_rows(equations));
}

std::optional<QMatrix> projective_equivalence(const std::vector<LiftedVertex>& a,
                                              const std::vector<LiftedVertex>& b, int d) {
  if (a.size() != b.size() || a.size() < static_cast<std::size_t>(d + 2)) {
    throw Error(ErrorCode::kInvalidArgument, "projective_equivalence needs equal lengths >= d+2");
  }
  auto frame = find_frame(a, d);
  if (!frame) throw Error(ErrorCode::kDegenerateInput, "source points contain no projective frame");
  auto pa = frame_matrix(a, *frame);
  // A frame maps to a frame, so a degenerate image frame rules out g.
  auto pb = frame_matrix(b, *frame);
  if (!pb) return std::nullopt;
  QMatrix g = (*pb) * inverse(*pa);
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (!proportional(g * a[k], b[k])) return std::nullopt;
  }
  return g;
}

}  // namespace pentagram
