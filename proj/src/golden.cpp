#include "papertorus/golden.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>

namespace papertorus {

const char* to_string(Region r) {
  switch (r) {
    case Region::Interior: return "interior";
    case Region::LeftEdge: return "left-edge";
    case Region::RightEdge: return "right-edge";
    case Region::CircularArc: return "circular-arc";
    case Region::HexVertex: return "hex-vertex";
    case Region::SquarePoint: return "square-point";
    case Region::Outside: return "outside";
  }
  return "?";
}

ModularParameter classify(double x, double y) {
  if (!(y > 0.0) || !std::isfinite(x) || !std::isfinite(y)) {
    throw DomainError("modular parameter requires y > 0");
  }
  const double left = x;
  const double right = 1.0 - 2.0 * x;
  const double arc = -2.0 * x + x * x + y * y;
  constexpr double tol = kEdgeTolerance;

  ModularParameter z{x, y, Region::Interior};
  if (left < -tol || right < -tol || arc < -tol) {
    z.region = Region::Outside;
  } else if (std::abs(right) <= tol && std::abs(arc) <= tol) {
    z.region = Region::HexVertex;
  } else if (std::abs(left) <= tol && std::abs(y - 1.0) <= tol) {
    z.region = Region::SquarePoint;
  } else if (std::abs(left) <= tol) {
    z.region = Region::LeftEdge;
  } else if (std::abs(right) <= tol) {
    z.region = Region::RightEdge;
  } else if (std::abs(arc) <= tol) {
    z.region = Region::CircularArc;
  }
  return z;
}

double boundary_distance(double x, double y) {
  if (x <= 0.0 || x >= 0.5) return 0.0;
  const double to_arc = std::hypot(x - 1.0, y) - 1.0;
  if (to_arc <= 0.0) return 0.0;
  return std::min({x, 0.5 - x, to_arc});
}

GammaValues gammas(double x, double y) {
  const double r2 = x * x + y * y;
  GammaValues out;
  auto& g = out.g;
  g[0] = 1.0 - 2.0 * x;
  g[1] = -2.0 * x + r2;
  g[2] = 2.0 * x - x * x + y * y;
  g[3] = 2.0 * x + r2;
  g[4] = 2.0 * x * g[0] + (2.0 * x + 1.0) * r2;
  g[5] = 2.0 * x * x * g[0] + x * x * g[3] + y * y * g[3];
  return out;
}

Torus8 golden_torus(const ModularParameter& z) {
  const double x = z.x;
  const double y = z.y;
  if (x < 0.0) throw DomainError("golden torus undefined for x < 0 (sqrt(8x))");
  if (z.region == Region::Outside) {
    throw DomainError("golden torus requires a parameter in the closed domain");
  }
  Torus8 p;
  p[0] = {x * (1.0 - 2.0 * x), y * (1.0 - 2.0 * x), y * std::sqrt(8.0 * x)};
  p[2] = {2.0 * x - x * x - y * y, 0.0, 0.0};
  p[1] = p[2] - Vec3(x, y, 0.0);
  p[3] = p[2] + Vec3(x, y, 0.0);
  p.symmetrize();
  return p;
}

double ChartTriangle::signed_area() const {
  return 0.5 * (std::conj(points[1] - points[0]) * (points[2] - points[0])).imag();
}

double IntrinsicChart::total_area() const {
  double s = 0.0;
  for (const auto& t : triangles) s += std::abs(t.signed_area());
  return s;
}

IntrinsicChart intrinsic_chart(const ModularParameter& z) {
  if (z.region == Region::Outside) throw DomainError("intrinsic chart requires the closed domain");
  const Complex zz = z.z();
  IntrinsicChart c;
  const double x = z.x;
  const double y = z.y;
  auto& q = c.q;
  q[2] = 2.0 * x - x * x - y * y;
  q[1] = q[2] - zz;
  q[3] = q[2] + zz;
  q[0] = -2.0 * x * x - 2.0 * y * y + zz;
  c.l1 = Complex(0.0, 4.0 * y);
  c.l2 = zz * c.l1;
  const Complex l1 = c.l1;
  const Complex l2 = c.l2;

  const std::array<ChartTriangle, 8> listed{{
      {{0, 1, 6}, {q[0], q[1] + l1, -q[1] + l2}},
      {{1, 0, 3}, {q[1] + l1, q[0], q[3]}},
      {{3, 4, 1}, {q[3], -q[3] + l1, q[1] + l1}},
      {{0, 7, 2}, {q[0], -q[0] + l2, q[2]}},
      {{2, 3, 0}, {q[2], q[3], q[0]}},
      {{3, 2, 5}, {q[3], q[2], -q[2]}},
      {{5, 6, 3}, {-q[2], -q[1], q[3]}},
      {{6, 5, 0}, {-q[1], -q[2], q[0] - l2}},
  }};
  for (size_t i = 0; i < listed.size(); ++i) {
    c.triangles[i] = listed[i];
    ChartTriangle& img = c.triangles[i + 8];
    for (size_t k = 0; k < 3; ++k) {
      img.labels[k] = 7 - listed[i].labels[k];
      img.points[k] = -listed[i].points[k];
    }
  }

  c.min_area = std::numeric_limits<double>::infinity();
  for (int i = 0; i < kTriangleCount; ++i) {
    const double a = std::abs(c.triangles[static_cast<size_t>(i)].signed_area());
    if (a < c.min_area) {
      c.min_area = a;
      c.smallest_triangle = i;
    }
  }
  const double scale2 = std::max(std::norm(l1), std::norm(l2));
  c.degenerate = c.min_area < kChartAreaTolerance * scale2;
  return c;
}

IsometryReport verify_isometry(const ModularParameter& z, double tol) {
  IsometryReport r;
  const Torus8 p = golden_torus(z);
  const IntrinsicChart chart = intrinsic_chart(z);
  const auto& tri = uniform_triangulation();

  for (int i = 0; i < kTriangleCount; ++i) {
    const auto& t = chart.triangles[static_cast<size_t>(i)];
    if (tri.find_triangle(t.labels[0], t.labels[1], t.labels[2]) < 0) {
      r.message = "chart triangle is not a triangle of the triangulation";
      return r;
    }
    for (size_t k = 0; k < 3; ++k) {
      const int a = t.labels[k];
      const int b = t.labels[(k + 1) % 3];
      const double planar = std::abs(t.points[(k + 1) % 3] - t.points[k]);
      const double spatial = (p[b] - p[a]).norm();
      const double err = std::abs(planar - spatial);
      ++r.comparisons;
      if (err > r.worst_error || r.worst_triangle < 0) {
        r.worst_error = err;
        r.worst_triangle = i;
        r.worst_edge = {a, b};
      }
    }
  }

  // Directed edge vectors keyed by the unordered edge: an oriented tiling
  // traverses each edge once in each direction with the same vector.
  std::map<Edge, std::vector<std::pair<int, Complex>>> uses;
  for (const auto& t : chart.triangles) {
    for (size_t k = 0; k < 3; ++k) {
      const int a = t.labels[k];
      const int b = t.labels[(k + 1) % 3];
      const Complex v = t.points[(k + 1) % 3] - t.points[k];
      if (a < b) uses[{a, b}].push_back({+1, v});
      else uses[{b, a}].push_back({-1, -v});
    }
  }
  r.gluing_consistent = uses.size() == static_cast<size_t>(kEdgeCount);
  for (const auto& [edge, list] : uses) {
    if (list.size() != 2 || list[0].first == list[1].first) {
      r.gluing_consistent = false;
      continue;
    }
    r.gluing_error = std::max(r.gluing_error, std::abs(list[0].second - list[1].second));
  }
  r.area_mismatch = std::abs(chart.lattice_area() - chart.total_area());
  const double scale = std::abs(chart.l1) + std::abs(chart.l2);
  r.gluing_consistent = r.gluing_consistent && r.gluing_error <= tol * std::max(1.0, scale) &&
                        r.area_mismatch <= tol * std::max(1.0, scale * scale);

  r.passed = r.worst_error <= tol && r.gluing_consistent;
  std::ostringstream msg;
  if (!r.passed) {
    msg << "worst edge (" << r.worst_edge[0] << "," << r.worst_edge[1] << ") of chart triangle "
        << r.worst_triangle << " off by " << r.worst_error << "; gluing error " << r.gluing_error
        << "; area mismatch " << r.area_mismatch;
  }
  r.message = msg.str();
  return r;
}

}  // namespace papertorus
