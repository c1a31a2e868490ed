#include "papertorus/angles.hpp"

#include <cmath>
#include <numbers>

#include "papertorus/golden.hpp"

namespace papertorus {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

double ConeAngles::total() const {
  double s = 0.0;
  for (double t : theta) s += t;
  return s;
}

double corner_angle(const Vec3& apex, const Vec3& b, const Vec3& c) {
  const Vec3 u = b - apex;
  const Vec3 v = c - apex;
  return std::atan2(u.cross(v).norm(), u.dot(v));
}

ConeAngles cone_angles(const Torus8& p) {
  const double min_len = kLengthTolerance * p.scale();
  for (const auto& e : uniform_triangulation().edges) {
    if ((p[e[1]] - p[e[0]]).norm() <= min_len) {
      throw DegenerateEdgeError("edge (" + std::to_string(e[0]) + "," + std::to_string(e[1]) +
                                ") has collapsed");
    }
  }
  ConeAngles out;
  for (const auto& t : uniform_triangulation().triangles) {
    for (size_t k = 0; k < 3; ++k) {
      const int a = t[k];
      out.theta[static_cast<size_t>(a)] += corner_angle(p[a], p[t[(k + 1) % 3]], p[t[(k + 2) % 3]]);
    }
  }
  return out;
}

FlatnessDefect flatness_defect(const Torus8& p) {
  const ConeAngles a = cone_angles(p);
  FlatnessDefect d;
  for (int j = 0; j < 3; ++j) {
    d.per_vertex[static_cast<size_t>(j)] = a[j] - kTwoPi;
    d.theta_max = std::max(d.theta_max, std::abs(a[j] - kTwoPi));
  }
  return d;
}

Eigen::Vector3d free_heights(const Torus8& p) { return {p[0].z(), p[1].z(), p[2].z()}; }

Torus8 with_free_heights(const Torus8& p, const Eigen::Vector3d& heights) {
  Torus8 out = p;
  for (int j = 0; j < 3; ++j) {
    out[j].z() = heights[j];
    out[7 - j].z() = heights[j];
  }
  return out;
}

Eigen::Vector3d angle_residual(const Torus8& p) {
  const ConeAngles a = cone_angles(p);
  return {a[0] - kTwoPi, a[1] - kTwoPi, a[2] - kTwoPi};
}

AngleJacobian angle_jacobian(const Torus8& p, double step) {
  AngleJacobian jac;
  jac.step = step > 0.0 ? step : 1e-6 * p.scale();
  const Eigen::Vector3d w = free_heights(p);
  for (int j = 0; j < 3; ++j) {
    Eigen::Vector3d up = w;
    Eigen::Vector3d down = w;
    up[j] += jac.step;
    down[j] -= jac.step;
    const ConeAngles hi = cone_angles(with_free_heights(p, up));
    const ConeAngles lo = cone_angles(with_free_heights(p, down));
    for (int i = 0; i < 3; ++i) jac.m(i, j) = (hi[i] - lo[i]) / (2.0 * jac.step);
  }
  return jac;
}

double jacobian_determinant_closed_form(double x, double y) {
  const GammaValues g = gammas(x, y);
  return -64.0 * std::sqrt(2.0) * std::pow(x, 1.5) * g[5] / (std::pow(g[3], 4) * g[4]);
}

}  // namespace papertorus
