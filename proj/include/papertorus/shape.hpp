#pragma once

// Extrinsic and intrinsic shape: convex hulls, the good polygons that
// collapsing pup tents approach, sampled Hausdorff distance, similarity
// alignment, and the modulus of a flat torus via its developing map.

#include <complex>
#include <vector>

#include "papertorus/core.hpp"
#include "papertorus/golden.hpp"

namespace papertorus {

// --- convex hull ----------------------------------------------------------------

inline constexpr double kHullTolerance = 1e-12;

struct HullFacet {
  Vec3 normal = Vec3::Zero();     // outward, unit length
  double offset = 0.0;            // normal . p = offset on the facet
  std::vector<int> points;        // indices of the input points on the facet
};

struct Hull {
  bool planar = false;
  std::vector<HullFacet> facets;  // 3D case
  /// Planar case: the strictly convex hull polygon, counterclockwise about
  /// plane_normal, duplicate and collinear points dropped.
  std::vector<Vec3> polygon;
  Vec3 plane_normal = Vec3::Zero();
  /// Mesh triangles whose three vertices lie on a common facet (3D only).
  std::vector<int> on_hull_triangles;
};

/// Exhaustive facet search over point triples; tolerances relative to the
/// bounding-box diameter.
Hull convex_hull(const Torus8& p, double tol = kHullTolerance);

// --- good polygons -----------------------------------------------------------

enum class PolygonKind { Rectangle, Trapezoid, EquilateralTriangle };

const char* to_string(PolygonKind k);

struct GoodPolygon {
  PolygonKind kind = PolygonKind::Rectangle;
  std::vector<Vec3> vertices;  // in order around the polygon

  /// Side lengths in order (vertex k to k+1).
  std::vector<double> sides() const;
};

/// Limiting hull polygon at a boundary parameter: the 2y^2 x 2y rectangle
/// on x = 0, the trapezoid P1 P6 P0 P7 on the arc, the equilateral triangle
/// at the hex vertex. Throws DomainError elsewhere.
GoodPolygon good_polygon(const ModularParameter& zeta);

// --- Hausdorff distance -------------------------------------------------------

/// A compact set given as a union of (possibly degenerate) triangles.
using TriangleSet = std::vector<std::array<Vec3, 3>>;

TriangleSet mesh_triangles(const Torus8& p);
/// Fan triangulation of the filled polygon.
TriangleSet filled_polygon(const GoodPolygon& q);

double point_triangle_distance(const Vec3& p, const std::array<Vec3, 3>& tri);
double point_set_distance(const Vec3& p, const TriangleSet& set);

struct HausdorffResult {
  double distance = 0.0;
  double a_to_b = 0.0;
  double b_to_a = 0.0;
  int samples = 0;          // points sampled over both sets
  int subdivisions = 0;     // per triangle edge
};

/// Symmetric sampled Hausdorff distance with n subdivisions per triangle
/// edge and exact point-to-triangle distances.
HausdorffResult hausdorff(const TriangleSet& a, const TriangleSet& b, int subdivisions = 200);

/// Scale, translate and rotate s so that its diameter, area centroid and
/// principal axes match those of q; the best of the four proper axis sign
/// choices (and, for in-plane isotropic shapes, of a rotation scan about
/// the normal) is returned. Throws GeometryError on zero diameter.
TriangleSet normalize_similarity(const TriangleSet& s, const GoodPolygon& q);

// --- modulus ------------------------------------------------------------------

using Complex = std::complex<double>;

struct ModulusEstimate {
  Complex tau;             // reduced: |Re tau| <= 1/2, |tau| >= 1, Im tau > 0
  Complex generator1;      // holonomy of the two combinatorial cycles
  Complex generator2;
  double residual = 0.0;   // worst layout inconsistency
};

class NotFlatError : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

/// Develops the flat metric from 3-space edge lengths, reads the holonomy
/// lattice and reduces it. Throws NotFlatError if the flatness defect
/// exceeds tol, GeometryError if the layout residual exceeds sqrt(tol).
ModulusEstimate modulus_of(const Torus8& p, double tol = 1e-9);

/// Lagrange reduction of the lattice spanned by a and b, returned as the
/// reduced modulus.
Complex reduce_lattice(Complex a, Complex b);
/// Reduces tau under SL2(Z) into the standard domain.
Complex reduce_modulus(Complex tau);

double hyperbolic_distance(Complex a, Complex b);

/// Minimum hyperbolic distance between the SL2(Z) orbits of a and b, also
/// allowing the mirror tau -> -conj(tau).
double modular_distance(Complex a, Complex b);

}  // namespace papertorus
