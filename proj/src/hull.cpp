#include <algorithm>
#include <cmath>
#include <set>

#include <Eigen/Dense>

#include "papertorus/shape.hpp"

namespace papertorus {

namespace {

// Strict 2D convex hull (Andrew's monotone chain), collinear points dropped.
std::vector<int> hull_2d(const std::vector<Eigen::Vector2d>& pts, double tol) {
  std::vector<int> idx(pts.size());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    const auto& p = pts[static_cast<size_t>(a)];
    const auto& q = pts[static_cast<size_t>(b)];
    return p.x() < q.x() || (p.x() == q.x() && p.y() < q.y());
  });
  auto cross = [&](int o, int a, int b) {
    const auto& po = pts[static_cast<size_t>(o)];
    const Eigen::Vector2d u = pts[static_cast<size_t>(a)] - po;
    const Eigen::Vector2d v = pts[static_cast<size_t>(b)] - po;
    return u.x() * v.y() - u.y() * v.x();
  };
  std::vector<int> h(2 * idx.size());
  size_t k = 0;
  for (int i : idx) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], i) <= tol) --k;
    h[k++] = i;
  }
  for (size_t n = idx.size(), lower = k + 1; n-- > 1;) {
    const int i = idx[n - 1];
    while (k >= lower && cross(h[k - 2], h[k - 1], i) <= tol) --k;
    h[k++] = i;
  }
  h.resize(k > 1 ? k - 1 : k);
  return h;
}

}  // namespace

Hull convex_hull(const Torus8& p, double tol) {
  Hull hull;
  const double s = std::max(p.scale(), 1e-300);

  Vec3 centroid = Vec3::Zero();
  for (const auto& v : p.vertices) centroid += v;
  centroid /= kVertexCount;
  Eigen::Matrix<double, kVertexCount, 3> m;
  for (int j = 0; j < kVertexCount; ++j) m.row(j) = (p[j] - centroid).transpose();
  const Eigen::JacobiSVD<Eigen::Matrix<double, kVertexCount, 3>> svd(m, Eigen::ComputeFullV);
  const Vec3 normal = svd.matrixV().col(2);
  double off_plane = 0.0;
  for (const auto& v : p.vertices) off_plane = std::max(off_plane, std::abs(normal.dot(v - centroid)));

  if (off_plane <= tol * s) {
    hull.planar = true;
    hull.plane_normal = normal;
    const Vec3 e1 = svd.matrixV().col(0);
    const Vec3 e2 = normal.cross(e1);
    std::vector<Eigen::Vector2d> flat;
    for (const auto& v : p.vertices) flat.emplace_back(e1.dot(v - centroid), e2.dot(v - centroid));
    for (int i : hull_2d(flat, tol * s * s)) hull.polygon.push_back(p[i]);
    return hull;
  }

  std::set<std::vector<int>> seen;
  for (int a = 0; a < kVertexCount; ++a) {
    for (int b = a + 1; b < kVertexCount; ++b) {
      for (int c = b + 1; c < kVertexCount; ++c) {
        Vec3 n = (p[b] - p[a]).cross(p[c] - p[a]);
        if (n.norm() <= tol * s * s) continue;
        n.normalize();
        int above = 0, below = 0;
        std::vector<int> on;
        for (int d = 0; d < kVertexCount; ++d) {
          const double h = n.dot(p[d] - p[a]);
          if (h > tol * s) ++above;
          else if (h < -tol * s) ++below;
          else on.push_back(d);
        }
        if (above > 0 && below > 0) continue;
        if (!seen.insert(on).second) continue;
        HullFacet f;
        f.normal = above > 0 ? Vec3(-n) : n;
        f.offset = f.normal.dot(p[a]);
        f.points = on;
        hull.facets.push_back(std::move(f));
      }
    }
  }

  const auto& tri = uniform_triangulation();
  for (int i = 0; i < kTriangleCount; ++i) {
    const Triangle& t = tri.triangles[static_cast<size_t>(i)];
    for (const HullFacet& f : hull.facets) {
      auto has = [&](int v) { return std::find(f.points.begin(), f.points.end(), v) != f.points.end(); };
      if (has(t[0]) && has(t[1]) && has(t[2])) {
        hull.on_hull_triangles.push_back(i);
        break;
      }
    }
  }
  return hull;
}

const char* to_string(PolygonKind k) {
  switch (k) {
    case PolygonKind::Rectangle: return "rectangle";
    case PolygonKind::Trapezoid: return "trapezoid";
    case PolygonKind::EquilateralTriangle: return "equilateral-triangle";
  }
  return "?";
}

std::vector<double> GoodPolygon::sides() const {
  std::vector<double> out;
  for (size_t k = 0; k < vertices.size(); ++k) {
    out.push_back((vertices[(k + 1) % vertices.size()] - vertices[k]).norm());
  }
  return out;
}

GoodPolygon good_polygon(const ModularParameter& zeta) {
  GoodPolygon q;
  switch (zeta.region) {
    case Region::LeftEdge:
    case Region::SquarePoint: {
      const double y = zeta.y;
      const double h = y * y;
      q.kind = PolygonKind::Rectangle;
      q.vertices = {Vec3(-h, -y, 0), Vec3(h, -y, 0), Vec3(h, y, 0), Vec3(-h, y, 0)};
      return q;
    }
    case Region::CircularArc: {
      const Torus8 p = golden_torus(zeta);
      q.kind = PolygonKind::Trapezoid;
      q.vertices = {p[1], p[6], p[0], p[7]};
      return q;
    }
    case Region::HexVertex: {
      const Torus8 p = golden_torus(zeta);
      q.kind = PolygonKind::EquilateralTriangle;
      q.vertices = {p[0], p[1], p[3]};
      return q;
    }
    default:
      throw DomainError(std::string("no good polygon at a ") + to_string(zeta.region) + " parameter");
  }
}

}  // namespace papertorus
