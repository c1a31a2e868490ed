#pragma once

// The special deformation P(z, t): a one-parameter motion of vertices 0, 1,
// 2 (and their rho images) away from the golden pup tent that keeps all
// cone angles equal to 2 pi through second order in t.

#include <array>

#include "papertorus/core.hpp"
#include "papertorus/golden.hpp"

namespace papertorus {

struct DeformationCoefficients {
  GammaValues gammas;
  double m = 0.0;           // v_0 slope
  double x1 = 0.0;          // second-order horizontal drift of vertices 1, 2
  double x2 = 0.0;
  /// The drift with the opposite overall sign, kept for the cell audit.
  double x1_opposite = 0.0;
  double x2_opposite = 0.0;
  double big_gamma = 0.0;   // common positive factor in the x1, x2 denominators
  /// alpha[j] = {alpha_j, alpha_j1, alpha_j2}.
  std::array<std::array<double, 3>, 3> alpha{};
  double a_denominator = 0.0;  // 4 sqrt(2x) gamma_0 gamma_1 gamma_2^2 gamma_5
  std::array<double, 3> a{};   // second-order height coefficients

  /// Height coefficients for an arbitrary drift (x1, x2); flatness to second
  /// order holds for every choice, embedding only for suitable ones.
  std::array<double, 3> heights_for(double drift1, double drift2) const;
};

/// Closed-form coefficients; throws DomainError unless z is interior.
DeformationCoefficients deformation_coefficients(const ModularParameter& z);

/// The printed polynomial factors, exposed for term-by-term audit.
namespace deformation_terms {
double big_gamma(double x, double y);
double x1_polynomial(double x, double y);  // the degree-9 bracket in x1
double x2_polynomial(double x, double y);  // the degree-7 bracket in x2
std::array<std::array<double, 3>, 3> alphas(double x, double y);
}  // namespace deformation_terms

/// P(z, t) with the built-in drift (x1, x2). deform(z, 0) is exactly the
/// golden torus.
Torus8 deform(const ModularParameter& z, double t);

/// P(z, t) with an explicit drift, heights adjusted to keep second-order
/// flatness.
Torus8 deform(const ModularParameter& z, double t, double drift1, double drift2);

Torus8 deform(const DeformationCoefficients& c, const Torus8& golden, double t, double drift1,
              double drift2);

}  // namespace papertorus
