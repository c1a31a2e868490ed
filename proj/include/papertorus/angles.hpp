#pragma once

// Cone angles, the flatness defect and the Jacobian of the three free cone
// angles with respect to the three free (rho-paired) vertex heights.

#include <array>

#include <Eigen/Core>

#include "papertorus/core.hpp"

namespace papertorus {

class DegenerateEdgeError : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

/// Edge lengths below this fraction of the bounding-box diameter are
/// treated as collapsed.
inline constexpr double kLengthTolerance = 1e-13;

struct ConeAngles {
  std::array<double, kVertexCount> theta{};
  double operator[](int j) const { return theta[static_cast<size_t>(j)]; }
  /// theta_0 + theta_1 + theta_2 + theta_3.
  double half_sum() const { return theta[0] + theta[1] + theta[2] + theta[3]; }
  double total() const;
};

/// Interior angle of triangle (apex, b, c) at apex, via atan2(|cross|, dot).
double corner_angle(const Vec3& apex, const Vec3& b, const Vec3& c);

ConeAngles cone_angles(const Torus8& p);

struct FlatnessDefect {
  double theta_max = 0.0;               // max_j |theta_j - 2 pi|, j = 0, 1, 2
  std::array<double, 3> per_vertex{};   // theta_j - 2 pi
};

FlatnessDefect flatness_defect(const Torus8& p);
inline double flatness(const Torus8& p) { return flatness_defect(p).theta_max; }

/// The three free heights (w_0, w_1, w_2).
Eigen::Vector3d free_heights(const Torus8& p);

/// Copy of p with (w_j, w_{7-j}) set to heights[j] for j = 0, 1, 2.
Torus8 with_free_heights(const Torus8& p, const Eigen::Vector3d& heights);

/// (theta_0 - 2pi, theta_1 - 2pi, theta_2 - 2pi).
Eigen::Vector3d angle_residual(const Torus8& p);

struct AngleJacobian {
  Eigen::Matrix3d m = Eigen::Matrix3d::Zero();  // m(i, j) = d theta_i / d w_j
  double step = 0.0;

  double determinant() const { return m.determinant(); }
  double asymmetry() const { return (m - m.transpose()).cwiseAbs().maxCoeff(); }
};

/// Central differences moving w_j and w_{7-j} together. A non-positive step
/// selects the default 1e-6 times the bounding-box diameter.
AngleJacobian angle_jacobian(const Torus8& p, double step = 0.0);

/// -64 sqrt(2) x^{3/2} gamma_5 / (gamma_3^4 gamma_4): det dF at the golden
/// pup tent of modulus x + iy.
double jacobian_determinant_closed_form(double x, double y);

}  // namespace papertorus
