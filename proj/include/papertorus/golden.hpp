#pragma once

// Golden pup tents: the explicit family of flat, rho-symmetric immersed
// tori indexed by the bi-cusped modular domain, their intrinsic charts and
// the isometry check tying the two together.

#include <array>
#include <complex>
#include <string>

#include "papertorus/core.hpp"

namespace papertorus {

using Complex = std::complex<double>;

enum class Region {
  Interior,
  LeftEdge,     // x = 0
  RightEdge,    // x = 1/2, y > sqrt(3)/2
  CircularArc,  // |z - 1| = 1
  HexVertex,    // 1/2 + (sqrt(3)/2) i
  SquarePoint,  // i
  Outside,
};

const char* to_string(Region r);

/// Tolerance on the three defining quantities x, 1 - 2x, -2x + x^2 + y^2.
inline constexpr double kEdgeTolerance = 1e-12;

class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct ModularParameter {
  double x = 0.0;
  double y = 1.0;
  Region region = Region::Interior;

  Complex z() const { return {x, y}; }
  bool interior() const { return region == Region::Interior; }
  bool in_closed_domain() const { return region != Region::Outside; }
};

/// Region classification; throws DomainError for y <= 0.
ModularParameter classify(double x, double y);

/// Euclidean distance from (x, y) to the boundary of the domain in the
/// (x, y) chart (0 on or outside the boundary).
double boundary_distance(double x, double y);

struct GammaValues {
  std::array<double, 6> g{};
  double operator[](int k) const { return g[static_cast<size_t>(k)]; }
};

GammaValues gammas(double x, double y);
inline GammaValues gammas(const ModularParameter& z) { return gammas(z.x, z.y); }

/// Vertices P_0..P_7 of the golden pup tent; throws DomainError for x < 0 or
/// parameters outside the closed domain.
Torus8 golden_torus(const ModularParameter& z);

/// Area threshold (relative to the squared lattice scale) below which a
/// chart triangle counts as collapsed.
inline constexpr double kChartAreaTolerance = 1e-10;

struct ChartTriangle {
  std::array<int, 3> labels{};
  std::array<Complex, 3> points{};
  double signed_area() const;
};

struct IntrinsicChart {
  std::array<Complex, 4> q{};  // Q0..Q3
  Complex l1;
  Complex l2;
  std::array<ChartTriangle, kTriangleCount> triangles{};
  bool degenerate = false;
  double min_area = 0.0;
  int smallest_triangle = -1;

  double lattice_area() const { return std::abs((std::conj(l1) * l2).imag()); }
  double total_area() const;
};

/// Flat chart of the torus of modulus z: 8 explicit triangles plus their
/// images under (j -> 7 - j, zeta -> -zeta). Boundary parameters produce a
/// chart flagged degenerate rather than an error.
IntrinsicChart intrinsic_chart(const ModularParameter& z);

struct IsometryReport {
  bool passed = false;
  int comparisons = 0;
  double worst_error = 0.0;
  int worst_triangle = -1;
  Edge worst_edge{};
  /// Each combinatorial edge appears exactly twice, with identical edge
  /// vectors traversed in opposite directions.
  bool gluing_consistent = false;
  double gluing_error = 0.0;
  /// |lattice area - total triangle area|.
  double area_mismatch = 0.0;
  std::string message;
};

IsometryReport verify_isometry(const ModularParameter& z, double tol);

}  // namespace papertorus
