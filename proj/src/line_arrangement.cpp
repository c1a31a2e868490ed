#include "papertorus/line_arrangement.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "papertorus/deformation.hpp"

namespace papertorus {

namespace {

// Keep the part of a convex polygon where sign * line(p) >= 0.
std::vector<Eigen::Vector2d> clip(const std::vector<Eigen::Vector2d>& poly, const DriftLine& line,
                                  double sign) {
  std::vector<Eigen::Vector2d> out;
  const size_t n = poly.size();
  for (size_t i = 0; i < n; ++i) {
    const Eigen::Vector2d& p = poly[i];
    const Eigen::Vector2d& q = poly[(i + 1) % n];
    const double dp = sign * line.eval(p);
    const double dq = sign * line.eval(q);
    if (dp >= 0) out.push_back(p);
    if ((dp > 0 && dq < 0) || (dp < 0 && dq > 0)) out.push_back(p + (dp / (dp - dq)) * (q - p));
  }
  // Drop repeats created when a corner lies on the clipping line.
  std::vector<Eigen::Vector2d> unique;
  for (const auto& v : out) {
    const double tol = kLineTolerance * std::max(1.0, v.norm());
    if (unique.empty() || (v - unique.back()).norm() > tol) unique.push_back(v);
  }
  if (unique.size() > 1 && (unique.front() - unique.back()).norm() <= kLineTolerance * std::max(1.0, unique.back().norm()))
    unique.pop_back();
  return unique;
}

}  // namespace

LineArrangement order2_line_arrangement(const ModularParameter& z) {
  if (!z.interior()) throw DomainError("line arrangement requires an interior parameter");
  const DeformationCoefficients c = deformation_coefficients(z);
  const Eigen::Vector2d origin(c.x1, c.x2);
  constexpr double step = 0.25;

  const auto p0 = expanded_det_coefficients(z, origin.x(), origin.y());
  const auto p1 = expanded_det_coefficients(z, origin.x() + step, origin.y());
  const auto p2 = expanded_det_coefficients(z, origin.x(), origin.y() + step);

  const double s = golden_torus(z).scale();
  const double scale3 = s * s * s;

  LineArrangement out;
  out.z = z;
  for (size_t q = 0; q < kQuadrupleCount; ++q) {
    const double v0 = p0[q][2];
    const Eigen::Vector2d grad((p1[q][2] - v0) / step, (p2[q][2] - v0) / step);
    out.gradient[q] = grad;
    out.base[q] = v0 - grad.dot(origin);
    // Only coefficients that lead (c0 = c1 = 0) shape the sign list.
    const double lead_tol = kLeadingTolerance * scale3;
    if (std::abs(p0[q][0]) > lead_tol || std::abs(p0[q][1]) > lead_tol) continue;
    if (grad.norm() <= lead_tol) continue;
    out.drift_dependent.push_back(quadruples()[q]);

    DriftLine line;
    line.normal = grad / grad.norm();
    line.offset = out.base[q] / grad.norm();
    const double lead = std::abs(line.normal.x()) > kLineTolerance ? line.normal.x() : line.normal.y();
    if (lead < 0) {
      line.normal = -line.normal;
      line.offset = -line.offset;
    }
    line.quadruples.push_back(quadruples()[q]);

    bool merged = false;
    for (DriftLine& other : out.lines) {
      const double d = std::max((other.normal - line.normal).norm(), std::abs(other.offset - line.offset));
      const double rel = d / std::max(1.0, std::abs(line.offset));
      if (rel <= kLineTolerance) {
        other.quadruples.push_back(quadruples()[q]);
        merged = true;
        break;
      }
      if (rel <= 1e3 * kLineTolerance) {
        throw ClusteringError("drift lines of " + to_string(other.quadruples.front()) + " and " +
                              to_string(quadruples()[q]) + " nearly coincide");
      }
    }
    if (!merged) out.lines.push_back(std::move(line));
  }
  return out;
}

CellReport LineArrangement::cell(const Eigen::Vector2d& drift) const {
  CellReport r;
  r.point = drift;
  r.margin = std::numeric_limits<double>::infinity();
  for (const DriftLine& line : lines) r.margin = std::min(r.margin, std::abs(line.eval(drift)));
  r.strictly_inside = r.margin > kLineTolerance * std::max(1.0, drift.norm());

  constexpr double box = 1e3;
  r.polygon = {{-box, -box}, {box, -box}, {box, box}, {-box, box}};
  for (const DriftLine& line : lines) {
    r.polygon = clip(r.polygon, line, line.eval(drift) >= 0 ? 1.0 : -1.0);
    if (r.polygon.empty()) break;
  }
  r.bounded = !r.polygon.empty();
  for (const auto& v : r.polygon) {
    if (v.cwiseAbs().maxCoeff() >= 0.5 * box) r.bounded = false;
  }
  if (!r.polygon.empty()) {
    r.barycenter.setZero();
    for (const auto& v : r.polygon) r.barycenter += v;
    r.barycenter /= static_cast<double>(r.polygon.size());
  }

  const auto polys = det_polynomials(z, drift.x(), drift.y());
  r.signs = leading_sign_list(polys);
  for (const Quadruple& q : drift_dependent) {
    const size_t i = static_cast<size_t>(quadruple_index(q));
    const double v = base[i] + gradient[i].dot(drift);
    r.signs[static_cast<int>(i)] = v > 0 ? Sign::Positive : v < 0 ? Sign::Negative : Sign::Degenerate;
  }
  r.winning = embedding_clause(r.signs).yes();
  return r;
}

}  // namespace papertorus
