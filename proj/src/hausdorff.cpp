#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Dense>

#include "papertorus/shape.hpp"

namespace papertorus {

TriangleSet mesh_triangles(const Torus8& p) {
  TriangleSet out;
  for (const Triangle& t : uniform_triangulation().triangles) out.push_back({p[t[0]], p[t[1]], p[t[2]]});
  return out;
}

TriangleSet filled_polygon(const GoodPolygon& q) {
  TriangleSet out;
  for (size_t k = 1; k + 1 < q.vertices.size(); ++k) out.push_back({q.vertices[0], q.vertices[k], q.vertices[k + 1]});
  return out;
}

namespace {

double point_segment_distance(const Vec3& p, const Vec3& a, const Vec3& b) {
  const Vec3 ab = b - a;
  const double len2 = ab.squaredNorm();
  const double s = len2 > 0.0 ? std::clamp((p - a).dot(ab) / len2, 0.0, 1.0) : 0.0;
  return (p - (a + s * ab)).norm();
}

}  // namespace

double point_triangle_distance(const Vec3& p, const std::array<Vec3, 3>& tri) {
  const Vec3& a = tri[0];
  const Vec3& b = tri[1];
  const Vec3& c = tri[2];
  const Vec3 ab = b - a;
  const Vec3 ac = c - a;
  const Vec3 n = ab.cross(ac);
  const double scale = std::max({ab.squaredNorm(), ac.squaredNorm(), (c - b).squaredNorm()});
  if (n.squaredNorm() <= 1e-24 * scale * scale) {
    return std::min({point_segment_distance(p, a, b), point_segment_distance(p, b, c),
                     point_segment_distance(p, c, a)});
  }
  // Closest point by Voronoi region of the triangle.
  const Vec3 ap = p - a;
  const double d1 = ab.dot(ap), d2 = ac.dot(ap);
  if (d1 <= 0 && d2 <= 0) return ap.norm();
  const Vec3 bp = p - b;
  const double d3 = ab.dot(bp), d4 = ac.dot(bp);
  if (d3 >= 0 && d4 <= d3) return bp.norm();
  const double vc = d1 * d4 - d3 * d2;
  if (vc <= 0 && d1 >= 0 && d3 <= 0) return (p - (a + (d1 / (d1 - d3)) * ab)).norm();
  const Vec3 cp = p - c;
  const double d5 = ab.dot(cp), d6 = ac.dot(cp);
  if (d6 >= 0 && d5 <= d6) return cp.norm();
  const double vb = d5 * d2 - d1 * d6;
  if (vb <= 0 && d2 >= 0 && d6 <= 0) return (p - (a + (d2 / (d2 - d6)) * ac)).norm();
  const double va = d3 * d6 - d5 * d4;
  if (va <= 0 && (d4 - d3) >= 0 && (d5 - d6) >= 0) {
    return (p - (b + ((d4 - d3) / ((d4 - d3) + (d5 - d6))) * (c - b))).norm();
  }
  const double denom = 1.0 / (va + vb + vc);
  return (p - (a + ab * (vb * denom) + ac * (vc * denom))).norm();
}

double point_set_distance(const Vec3& p, const TriangleSet& set) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& t : set) best = std::min(best, point_triangle_distance(p, t));
  return best;
}

namespace {

// One-sided sampled distance; returns (max distance, sample count).
std::pair<double, int> directed(const TriangleSet& from, const TriangleSet& to, int n) {
  double worst = 0.0;
  int count = 0;
  for (const auto& t : from) {
    const Vec3 e1 = t[1] - t[0];
    const Vec3 e2 = t[2] - t[0];
    for (int i = 0; i <= n; ++i) {
      for (int j = 0; i + j <= n; ++j) {
        const Vec3 p = t[0] + (static_cast<double>(i) / n) * e1 + (static_cast<double>(j) / n) * e2;
        worst = std::max(worst, point_set_distance(p, to));
        ++count;
      }
    }
  }
  return {worst, count};
}

struct Moments {
  Vec3 centroid = Vec3::Zero();
  Eigen::Matrix3d axes = Eigen::Matrix3d::Identity();  // columns by decreasing spread
  Eigen::Vector3d spread = Eigen::Vector3d::Zero();
};

Moments moments(const TriangleSet& set) {
  double area = 0.0;
  Vec3 first = Vec3::Zero();
  Eigen::Matrix3d second = Eigen::Matrix3d::Zero();
  for (const auto& t : set) {
    const double a = 0.5 * (t[1] - t[0]).cross(t[2] - t[0]).norm();
    const Vec3 sum = t[0] + t[1] + t[2];
    area += a;
    first += a * sum / 3.0;
    Eigen::Matrix3d m = sum * sum.transpose();
    for (const auto& v : t) m += v * v.transpose();
    second += (a / 12.0) * m;
  }
  Moments out;
  if (area <= 1e-300) {
    // Collapsed set: fall back to vertex moments.
    int n = 0;
    for (const auto& t : set)
      for (const auto& v : t) {
        first += v;
        second += v * v.transpose();
        ++n;
      }
    area = n;
  }
  out.centroid = first / area;
  const Eigen::Matrix3d cov = second / area - out.centroid * out.centroid.transpose();
  const Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> eig(cov);
  for (int k = 0; k < 3; ++k) {
    out.axes.col(k) = eig.eigenvectors().col(2 - k);
    out.spread(k) = eig.eigenvalues()(2 - k);
  }
  return out;
}

// Filled convex hull of the vertices of a set, after projection onto their
// best-fit plane. Folded layers of a collapsing mesh weigh it like the
// flat region it covers.
TriangleSet planar_hull_region(const TriangleSet& set) {
  std::vector<Vec3> pts;
  for (const auto& t : set) pts.insert(pts.end(), t.begin(), t.end());
  Vec3 c = Vec3::Zero();
  for (const auto& v : pts) c += v;
  c /= static_cast<double>(pts.size());
  Eigen::MatrixXd m(3, static_cast<Eigen::Index>(pts.size()));
  for (size_t i = 0; i < pts.size(); ++i) m.col(static_cast<Eigen::Index>(i)) = pts[i] - c;
  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeThinU);
  const Vec3 e1 = svd.matrixU().col(0);
  const Vec3 e2 = svd.matrixU().col(1);

  std::vector<Eigen::Vector2d> flat;
  for (const auto& v : pts) flat.emplace_back(e1.dot(v - c), e2.dot(v - c));
  std::sort(flat.begin(), flat.end(), [](const auto& a, const auto& b) {
    return a.x() < b.x() || (a.x() == b.x() && a.y() < b.y());
  });
  auto turn = [](const Eigen::Vector2d& o, const Eigen::Vector2d& a, const Eigen::Vector2d& b) {
    return (a - o).x() * (b - o).y() - (a - o).y() * (b - o).x();
  };
  std::vector<Eigen::Vector2d> hull(2 * flat.size());
  size_t k = 0;
  for (size_t i = 0; i < flat.size(); ++i) {
    while (k >= 2 && turn(hull[k - 2], hull[k - 1], flat[i]) <= 0) --k;
    hull[k++] = flat[i];
  }
  for (size_t i = flat.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && turn(hull[k - 2], hull[k - 1], flat[i]) <= 0) --k;
    hull[k++] = flat[i];
  }
  hull.resize(k > 0 ? k - 1 : 0);

  TriangleSet out;
  auto lift = [&](const Eigen::Vector2d& u) -> Vec3 { return c + u.x() * e1 + u.y() * e2; };
  for (size_t i = 1; i + 1 < hull.size(); ++i) out.push_back({lift(hull[0]), lift(hull[i]), lift(hull[i + 1])});
  return out.empty() ? set : out;
}

double diameter(const TriangleSet& set) {
  std::vector<Vec3> pts;
  for (const auto& t : set) pts.insert(pts.end(), t.begin(), t.end());
  double d = 0.0;
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = i + 1; j < pts.size(); ++j) d = std::max(d, (pts[i] - pts[j]).norm());
  return d;
}

TriangleSet apply(const TriangleSet& s, const Eigen::Matrix3d& r, double k, const Vec3& from, const Vec3& to) {
  TriangleSet out = s;
  for (auto& t : out)
    for (auto& v : t) v = r * (k * (v - from)) + to;
  return out;
}

Eigen::Matrix3d rotation_about(const Vec3& axis, double angle) {
  return Eigen::AngleAxisd(angle, axis.normalized()).toRotationMatrix();
}

}  // namespace

HausdorffResult hausdorff(const TriangleSet& a, const TriangleSet& b, int subdivisions) {
  HausdorffResult r;
  r.subdivisions = subdivisions;
  const auto [ab, na] = directed(a, b, subdivisions);
  const auto [ba, nb] = directed(b, a, subdivisions);
  r.a_to_b = ab;
  r.b_to_a = ba;
  r.distance = std::max(ab, ba);
  r.samples = na + nb;
  return r;
}

TriangleSet normalize_similarity(const TriangleSet& s, const GoodPolygon& q) {
  const TriangleSet target = filled_polygon(q);
  const double ds = diameter(s);
  if (!(ds > 0.0)) throw GeometryError("cannot normalize a set of zero diameter");
  const double k = diameter(target) / ds;

  const Moments ms = moments(planar_hull_region(s));
  const Moments mq = moments(target);
  const Vec3 normal = mq.axes.col(2);

  auto isotropic = [](const Moments& m) { return m.spread(0) - m.spread(1) <= 0.05 * m.spread(0); };
  const bool scan = isotropic(ms) || isotropic(mq);

  std::vector<Eigen::Matrix3d> candidates;
  const double orient = ms.axes.determinant() * mq.axes.determinant();
  for (int f = 0; f < 4; ++f) {
    Eigen::Vector3d d(f & 1 ? -1.0 : 1.0, f & 2 ? -1.0 : 1.0, 1.0);
    d(2) = orient * d(0) * d(1);
    candidates.push_back(mq.axes * d.asDiagonal() * ms.axes.transpose());
  }
  if (scan) {
    // In-plane principal axes are undefined: try a rotation scan plus the
    // rotations carrying far vertices of s onto the farthest vertex of q.
    const std::vector<Eigen::Matrix3d> base = candidates;
    Vec3 q_far = Vec3::Zero();
    for (const auto& v : q.vertices)
      if ((v - mq.centroid).norm() > q_far.norm()) q_far = v - mq.centroid;
    for (const Eigen::Matrix3d& r : base) {
      for (int a = 1; a < 72; ++a) candidates.push_back(rotation_about(normal, a * std::numbers::pi / 36) * r);
      double far = 0.0;
      for (const auto& t : s)
        for (const auto& v : t) far = std::max(far, (v - ms.centroid).norm());
      for (const auto& t : s) {
        for (const auto& v : t) {
          if ((v - ms.centroid).norm() < 0.9 * far) continue;
          Vec3 u = r * (v - ms.centroid);
          u -= normal.dot(u) * normal;
          if (u.norm() <= 0.0) continue;
          const double angle = std::atan2(normal.dot(u.cross(q_far)), u.dot(q_far));
          candidates.push_back(rotation_about(normal, angle) * r);
        }
      }
    }
  }

  TriangleSet best;
  double best_d = std::numeric_limits<double>::infinity();
  for (const Eigen::Matrix3d& r : candidates) {
    TriangleSet moved = apply(s, r, k, ms.centroid, mq.centroid);
    const double d = hausdorff(moved, target, 8).distance;
    if (d < best_d) {
      best_d = d;
      best = std::move(moved);
    }
  }
  return best;
}

}  // namespace papertorus
