#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "papertorus/angles.hpp"
#include "papertorus/deformation.hpp"
#include "papertorus/line_arrangement.hpp"

using namespace papertorus;

namespace {
const std::vector<ModularParameter> kPoints{classify(0.25, 1.0), classify(0.1, 1.3), classify(0.4, 1.2),
                                            classify(0.05, 1.05), classify(0.3, 1.8)};
}

TEST_CASE("coefficients at 1/4 + i") {
  const DeformationCoefficients c = deformation_coefficients(classify(0.25, 1.0));
  CHECK(c.m == doctest::Approx(-8.0 / 23).epsilon(1e-15));
  CHECK(c.gammas[2] == 23.0 / 16);
  CHECK(c.big_gamma > 0.0);
  CHECK(c.x1_opposite == -c.x1);
  CHECK(c.x2_opposite == -c.x2);
  CHECK(c.x1 == doctest::Approx(0.333542).epsilon(1e-5));
  CHECK(c.x2 == doctest::Approx(-0.21838).epsilon(1e-4));
  const auto h = c.heights_for(c.x1, c.x2);
  for (int k = 0; k < 3; ++k) CHECK(h[static_cast<size_t>(k)] == c.a[static_cast<size_t>(k)]);
}

TEST_CASE("deformation starts at the golden tent and fixes P3, P4") {
  for (const auto& z : kPoints) {
    const Torus8 g = golden_torus(z);
    const Torus8 p0 = deform(z, 0.0);
    for (int j = 0; j < 8; ++j) CHECK(p0[j] == g[j]);
    const Torus8 p = deform(z, 0.07);
    CHECK(p[3] == g[3]);
    CHECK(p[4] == g[4]);
    CHECK(p.rho_asymmetry() <= 1e-15);
  }
  CHECK_THROWS_AS(deform(classify(0.25, 1.0), -0.1), std::invalid_argument);
  CHECK_THROWS_AS(deform(classify(0.0, 1.3), 0.1), DomainError);
}

TEST_CASE("the special deformation is flat to third order") {
  for (const auto& z : kPoints) {
    const double r1 = oracle::flatness(deform(z, 1e-2)) / oracle::flatness(deform(z, 5e-3));
    const double r2 = oracle::flatness(deform(z, 5e-3)) / oracle::flatness(deform(z, 2.5e-3));
    CHECK(r1 >= 7.0);
    CHECK(r1 <= 9.0);
    CHECK(r2 >= 7.0);
    CHECK(r2 <= 9.0);
    // theta(t)/t^2 -> 0: first and second derivatives vanish.
    const double q3 = flatness(deform(z, 1e-3)) / 1e-6;
    const double q4 = flatness(deform(z, 1e-4)) / 1e-8;
    CHECK(q4 < 0.2 * q3);
  }
}

TEST_CASE("an arbitrary drift keeps second-order flatness") {
  const ModularParameter z = classify(0.2, 1.4);
  const double r = flatness(deform(z, 1e-2, 0.5, 0.1)) / flatness(deform(z, 5e-3, 0.5, 0.1));
  CHECK(r == doctest::Approx(8.0).epsilon(0.125));
}

TEST_CASE("printed drift sign lands in a non-winning region") {
  // The coefficients as printed carry the opposite overall sign; the
  // corrected drift embeds, the printed one does not.
  const ModularParameter z = classify(0.25, 1.0);
  const DeformationCoefficients c = deformation_coefficients(z);
  CHECK(embedding_clause(deform(z, 0.05)).yes());
  CHECK_FALSE(embedding_clause(deform(z, 0.05, c.x1_opposite, c.x2_opposite)).yes());
}

TEST_CASE("order-2 line arrangement") {
  for (const auto& z : {classify(0.25, 1.0), classify(0.125, 1.375), classify(0.375, 1.375)}) {
    const LineArrangement a = order2_line_arrangement(z);
    CHECK(a.drift_dependent.size() == 19);
    CHECK(a.lines.size() == 7);
    size_t members = 0;
    for (const auto& l : a.lines) members += l.quadruples.size();
    CHECK(members == 19);

    const DeformationCoefficients c = deformation_coefficients(z);
    const Eigen::Vector2d x(c.x1, c.x2);
    const CellReport cell = a.cell(x);
    CHECK(cell.bounded);
    CHECK(cell.strictly_inside);
    CHECK(cell.winning);
    REQUIRE(cell.polygon.size() == 3);
    CHECK((cell.barycenter - x).norm() < 1e-6);
    CHECK(cell.signs == reference_sign_list());

    const CellReport other = a.cell({c.x1_opposite, c.x2_opposite});
    CHECK_FALSE(other.winning);
  }
  CHECK_THROWS_AS(order2_line_arrangement(classify(0.0, 1.2)), DomainError);
}

TEST_CASE("closed-form drift polynomials are finite and Gamma positive") {
  for (const auto& z : kPoints) {
    CHECK(deformation_terms::big_gamma(z.x, z.y) > 0.0);
    CHECK(std::isfinite(deformation_terms::x1_polynomial(z.x, z.y)));
    CHECK(std::isfinite(deformation_terms::x2_polynomial(z.x, z.y)));
  }
}
