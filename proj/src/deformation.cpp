#include "papertorus/deformation.hpp"

#include <cmath>

namespace papertorus {

namespace deformation_terms {

double big_gamma(double x, double y) {
  const GammaValues g = gammas(x, y);
  const double g0 = g[0];
  const double g1 = g[1];
  const double x2 = x * x, x3 = x2 * x, x4 = x3 * x, x5 = x4 * x, x6 = x5 * x, x7 = x6 * x;
  const double y2 = y * y, y3 = y2 * y, y4 = y3 * y, y5 = y4 * y, y6 = y5 * y, y7 = y6 * y;
  return y7 + 2 * g0 * x * y6 + 8 * x * y5 + 7 * x2 * y5 + 16 * x2 * y4 + 6 * g0 * x3 * y4 +
         11 * x2 * y3 + g0 * x2 * y3 + 6 * x4 * y3 + 24 * x3 * y2 + 24 * x4 * y2 +
         16 * x5 * y2 + 6 * g0 * x5 * y2 + 10 * g1 * x3 * y + 5 * g1 * x4 * y +
         1.5 * g0 * x5 + 6 * g0 * g0 * x5 + 0.5 * g0 * g0 * g0 * x5 + 6 * g0 * g0 * x6 +
         12 * g0 * x7;
}

double x1_polynomial(double x, double y) {
  const double x2 = x * x, x3 = x2 * x, x4 = x3 * x, x5 = x4 * x, x6 = x5 * x, x7 = x6 * x,
               x8 = x7 * x, x9 = x8 * x;
  const double y2 = y * y, y4 = y2 * y2, y6 = y4 * y2, y8 = y4 * y4;
  return 40 * x5 - 60 * x6 + 30 * x7 + 25 * x8 - 15 * x9                        //
         - 24 * x3 * y2 + 24 * x4 * y2 + 50 * x5 * y2 + 54 * x6 * y2 - 48 * x7 * y2  //
         + 20 * x2 * y4 + 42 * x3 * y4 + 36 * x4 * y4 - 54 * x5 * y4               //
         + 22 * x * y6 + 10 * x2 * y6 - 24 * x3 * y6 + 3 * y8 - 3 * x * y8;
}

double x2_polynomial(double x, double y) {
  const double x2 = x * x, x3 = x2 * x, x4 = x3 * x, x5 = x4 * x, x6 = x5 * x, x7 = x6 * x;
  const double y2 = y * y, y3 = y2 * y, y4 = y3 * y, y5 = y4 * y, y6 = y5 * y, y7 = y6 * y;
  return -48 * x4 + 72 * x5 - 48 * x6 - 18 * x7 - 20 * x5 * y - 15 * x6 * y  //
         - 24 * x3 * y2 - 48 * x4 * y2 - 30 * x5 * y2                        //
         - 32 * x2 * y3 - 40 * x3 * y3 - 33 * x4 * y3                        //
         - 6 * x3 * y4 - 20 * x * y5 - 21 * x2 * y5 + 6 * x * y6 - 3 * y7;
}

std::array<std::array<double, 3>, 3> alphas(double x, double y) {
  const GammaValues g = gammas(x, y);
  const double g0 = g[0], g1 = g[1], g2 = g[2], g3 = g[3];
  const double g22 = g2 * g2, g32 = g3 * g3;
  const double x2 = x * x, x3 = x2 * x, x4 = x3 * x, x5 = x4 * x, x6 = x5 * x, x7 = x6 * x;
  const double y2 = y * y, y3 = y2 * y, y4 = y2 * y2, y6 = y4 * y2;

  std::array<std::array<double, 3>, 3> al{};
  al[0][0] = 8 * x * y * (-4 * x2 + 9 * x3 - 7 * x4 - 3 * x * y2 - y4) * g1;
  al[0][1] = -4 * y * g0 * g1 * g22 * g32;
  al[0][2] = 2 * (x - 2 * y2) * g0 * g22 * g32;

  al[1][0] = 8 * x * y * (x2 + y2) * (2 * x - 3 * x2 + y2) * g1;
  al[1][1] = -4 * y * (x4 + 6 * x2 + 4 * x * y2 + 2 * x2 * y2 + y4) * g0 * g1 * g22;
  al[1][2] = 2 *
             (2 * x7 - 9 * x6 + 12 * x5 - 4 * x4  //
              + 6 * x5 * y2 - 11 * x4 * y2 - 12 * x3 * y2 - 12 * x2 * y2  //
              + 6 * x3 * y4 - 3 * x2 * y4 - 8 * x * y4 + 2 * x * y6 - y6) *
             g0 * g22;

  al[2][0] = 4 * x * y * (-4 * x2 + 6 * x3 - 5 * x4 - 2 * x * y2 - 6 * x2 * y2 - y4) * g1;
  al[2][1] = 4 * x *
             (2 * x2 - 2 * x3 + x4 - 2 * x * y - x2 * y + 2 * x * y2 + 2 * x2 * y2 - y3 + y4) *
             g0 * g1 * g22;
  al[2][2] = (2 * x3 - x4 - 6 * x * y2 - 2 * x2 * y2 - y4) * g0 * g22 * g3;
  return al;
}

}  // namespace deformation_terms

std::array<double, 3> DeformationCoefficients::heights_for(double drift1, double drift2) const {
  std::array<double, 3> out{};
  for (size_t j = 0; j < 3; ++j) {
    out[j] = (alpha[j][0] + alpha[j][1] * drift1 + alpha[j][2] * drift2) / a_denominator;
  }
  return out;
}

DeformationCoefficients deformation_coefficients(const ModularParameter& z) {
  if (!z.interior()) {
    throw DomainError(std::string("deformation requires an interior parameter, got ") +
                      to_string(z.region));
  }
  const double x = z.x;
  const double y = z.y;
  DeformationCoefficients c;
  c.gammas = gammas(x, y);
  const auto& g = c.gammas;
  c.m = -2.0 * x * y / g[2];
  c.big_gamma = deformation_terms::big_gamma(x, y);

  // The drift is the barycenter of the winning cell of the order-2 line
  // arrangement. That is +4xy (...) / (3 g0 g2^2 g3 Gamma); the opposite
  // sign lands in a cell whose sign list is not winning.
  const double denom = 3.0 * g[0] * g[2] * g[2] * g[3] * c.big_gamma;
  c.x1 = 4.0 * x * y * deformation_terms::x1_polynomial(x, y) / denom;
  c.x2 = 4.0 * x * y * g[1] * deformation_terms::x2_polynomial(x, y) / denom;
  c.x1_opposite = -c.x1;
  c.x2_opposite = -c.x2;

  c.alpha = deformation_terms::alphas(x, y);
  c.a_denominator = 4.0 * std::sqrt(2.0 * x) * g[0] * g[1] * g[2] * g[2] * g[5];
  c.a = c.heights_for(c.x1, c.x2);
  return c;
}

Torus8 deform(const DeformationCoefficients& c, const Torus8& golden, double t, double drift1,
              double drift2) {
  const auto a = c.heights_for(drift1, drift2);
  const double t2 = t * t;
  Torus8 p = golden;
  p[0] += Vec3(t, c.m * t, a[0] * t2);
  p[1] += Vec3(drift1 * t2, drift2 * t2, a[1] * t2);
  p[2] += Vec3(0.0, drift1 * t2, a[2] * t2);
  p.symmetrize();
  return p;
}

Torus8 deform(const ModularParameter& z, double t, double drift1, double drift2) {
  if (!(t >= 0.0)) throw std::invalid_argument("deformation time must be >= 0");
  const DeformationCoefficients c = deformation_coefficients(z);
  if (t == 0.0) return golden_torus(z);
  return deform(c, golden_torus(z), t, drift1, drift2);
}

Torus8 deform(const ModularParameter& z, double t) {
  if (!(t >= 0.0)) throw std::invalid_argument("deformation time must be >= 0");
  const DeformationCoefficients c = deformation_coefficients(z);
  if (t == 0.0) return golden_torus(z);
  return deform(c, golden_torus(z), t, c.x1, c.x2);
}

}  // namespace papertorus
