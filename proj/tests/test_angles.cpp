#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "papertorus/angles.hpp"
#include "papertorus/flatten.hpp"
#include "papertorus/sampling.hpp"

using namespace papertorus;

TEST_CASE("cone angles agree with the law of cosines") {
  Rng rng(5);
  for (int k = 0; k < 200; ++k) {
    const Torus8 p = random_torus(rng);
    const ConeAngles a = cone_angles(p);
    const auto want = oracle::cone_angles(p);
    for (int j = 0; j < kVertexCount; ++j) CHECK(a[j] == doctest::Approx(want[static_cast<size_t>(j)]).epsilon(1e-9));
  }
}

TEST_CASE("corner_angle on a right triangle") {
  CHECK(corner_angle({0, 0, 0}, {1, 0, 0}, {0, 2, 0}) == doctest::Approx(std::numbers::pi / 2).epsilon(1e-16));
  CHECK(corner_angle({0, 0, 0}, {1, 0, 0}, {1, 1, 0}) == doctest::Approx(std::numbers::pi / 4).epsilon(1e-16));
}

TEST_CASE("Gauss-Bonnet on random rho-symmetric tori") {
  Rng rng(17);
  for (int k = 0; k < 1000; ++k) {
    const Torus8 p = random_rho_symmetric_torus(rng);
    CHECK(std::abs(cone_angles(p).half_sum() - 8.0 * std::numbers::pi) <= 1e-10);
  }
  for (int k = 0; k < 100; ++k) {
    CHECK(std::abs(cone_angles(random_torus(rng)).total() - 16.0 * std::numbers::pi) <= 1e-10);
  }
}

TEST_CASE("cone angles are similarity invariant") {
  Rng rng(23);
  const Eigen::Matrix3d r = Eigen::AngleAxisd(1.1, Vec3(0.3, -1, 2).normalized()).toRotationMatrix();
  for (int k = 0; k < 30; ++k) {
    const Torus8 p = random_torus(rng);
    const ConeAngles a = cone_angles(p);
    const ConeAngles b = cone_angles(p.transformed(r, Vec3(-4, 1, 7)).scaled(0.3));
    for (int j = 0; j < kVertexCount; ++j) CHECK(b[j] == doctest::Approx(a[j]).epsilon(1e-12));
  }
}

TEST_CASE("collapsed edges are rejected") {
  Rng rng(1);
  Torus8 p = random_torus(rng);
  p[1] = p[0];
  CHECK_THROWS_AS(cone_angles(p), DegenerateEdgeError);
}

TEST_CASE("flatness defect and free heights") {
  const Torus8 g = golden_torus(classify(0.25, 1.0));
  CHECK(flatness(g) < 1e-13);
  const Eigen::Vector3d w = free_heights(g);
  CHECK(w(0) == std::sqrt(2.0));
  CHECK(w(1) == 0.0);
  const Torus8 lifted = with_free_heights(g, w + Eigen::Vector3d(0, 0.01, 0));
  CHECK(lifted[1].z() == 0.01);
  CHECK(lifted[6].z() == 0.01);
  CHECK(lifted.rho_asymmetry() == 0.0);
  const FlatnessDefect d = flatness_defect(lifted);
  CHECK(d.theta_max > 1e-4);
  CHECK(angle_residual(lifted)(1) == doctest::Approx(d.per_vertex[1]));
}

TEST_CASE("Jacobian determinant at 1/4 + i") {
  const Torus8 g = golden_torus(classify(0.25, 1.0));
  const double closed = jacobian_determinant_closed_form(0.25, 1.0);
  // -64 sqrt2 (1/8) (441/256) / ((25/16)^4 (59/32))
  const double exact = -64.0 * std::sqrt(2.0) * 0.125 * (441.0 / 256) / (std::pow(25.0 / 16, 4) * (59.0 / 32));
  CHECK(closed == doctest::Approx(exact).epsilon(1e-15));
  CHECK(closed == doctest::Approx(-1.7734603025548703).epsilon(1e-14));
  CHECK(angle_jacobian(g).determinant() == doctest::Approx(closed).epsilon(1e-6));
  CHECK(oracle::jacobian_det(g, 1e-3) == doctest::Approx(closed).epsilon(1e-6));
}

TEST_CASE("Jacobian determinant across the interior") {
  for (const auto& z : interior_grid(5, 4)) {
    const Torus8 g = golden_torus(z);
    const double closed = jacobian_determinant_closed_form(z.x, z.y);
    CHECK(closed < 0.0);
    CHECK(angle_jacobian(g).determinant() == doctest::Approx(closed).epsilon(1e-6));
    CHECK(oracle::jacobian_det(g, 1e-3 * g.scale()) == doctest::Approx(closed).epsilon(1e-6));
  }
}

TEST_CASE("finite differences converge at second order") {
  const Torus8 g = golden_torus(classify(0.3, 1.4));
  const double closed = jacobian_determinant_closed_form(0.3, 1.4);
  const double h = 2e-2 * g.scale();
  const double e1 = std::abs(angle_jacobian(g, h).determinant() - closed);
  const double e2 = std::abs(angle_jacobian(g, h / 2).determinant() - closed);
  const double e3 = std::abs(angle_jacobian(g, h / 4).determinant() - closed);
  CHECK(std::log2(e1 / e2) >= 1.8);
  CHECK(std::log2(e2 / e3) >= 1.8);
}

TEST_CASE("Jacobian is symmetric on rho-symmetric tori only") {
  const Torus8 g = golden_torus(classify(0.25, 1.0));
  CHECK(angle_jacobian(g).asymmetry() < 1e-6);
  Rng rng(2);
  for (int k = 0; k < 20; ++k) {
    CHECK(angle_jacobian(random_rho_symmetric_torus(rng)).asymmetry() < 1e-6);
    CHECK(angle_jacobian(random_torus(rng)).asymmetry() > 1e-3);
  }
}
