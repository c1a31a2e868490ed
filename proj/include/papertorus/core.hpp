#pragma once

// Combinatorics of the uniform 8-vertex torus triangulation and the
// orientation-determinant kernel shared by every other module.

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <Eigen/Geometry>

namespace papertorus {

using Vec3 = Eigen::Vector3d;

inline constexpr int kVertexCount = 8;
inline constexpr int kTriangleCount = 16;
inline constexpr int kEdgeCount = 24;
inline constexpr int kQuadrupleCount = 70;

/// Vertex labels in ascending order.
using Triangle = std::array<int, 3>;
using Edge = std::array<int, 2>;
using Quadruple = std::array<int, 4>;

class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The fixed 8-vertex, degree-6 triangulation of the torus.
///
/// Triangles are {a, a+1, a+3} and {a, a+2, a+3} (mod 8); the only
/// non-edges are the four pairs {a, a+4}. Every triple is stored with
/// ascending labels and all downstream sign conventions refer to that order.
struct Triangulation8 {
  std::array<Triangle, kTriangleCount> triangles{};
  std::array<Edge, kEdgeCount> edges{};
  std::array<Edge, 4> missing_edges{};

  bool has_edge(int a, int b) const;
  int degree(int v) const;
  /// Indices of the triangles incident to vertex v.
  std::vector<int> star(int v) const;
  /// Index of the triangle with the given labels (any order), or -1.
  int find_triangle(int a, int b, int c) const;
};

Triangulation8 build_triangulation();

/// Shared immutable instance of build_triangulation().
const Triangulation8& uniform_triangulation();

enum class PairKind { EdgeSharing, VertexSharing, Disjoint };

const char* to_string(PairKind kind);

struct TrianglePairClass {
  int first = 0;
  int second = 0;
  PairKind kind = PairKind::Disjoint;
  std::vector<int> shared;
};

std::vector<TrianglePairClass> classify_pairs(const Triangulation8& tri);

/// rho(u, v, w) = (-u, -v, w): the half-turn about the vertical axis.
inline Vec3 rho(const Vec3& p) { return {-p.x(), -p.y(), p.z()}; }

/// Eight labeled points on the uniform triangulation.
struct Torus8 {
  std::array<Vec3, kVertexCount> vertices = [] {
    std::array<Vec3, kVertexCount> v;
    v.fill(Vec3::Zero());
    return v;
  }();

  const Vec3& operator[](int j) const { return vertices[static_cast<size_t>(j)]; }
  Vec3& operator[](int j) { return vertices[static_cast<size_t>(j)]; }

  /// Max over j of |P_j - rho(P_{7-j})|.
  double rho_asymmetry() const;
  bool is_rho_symmetric(double tol) const { return rho_asymmetry() <= tol; }
  /// w_3 = w_4 = 0.
  bool is_normalized(double tol) const;
  /// Diameter of the axis-aligned bounding box; the length scale used by
  /// relative tolerances throughout.
  double scale() const;

  /// Overwrite vertices 4..7 with rho images of 3..0.
  void symmetrize();
  Torus8 scaled(double s) const;
  Torus8 transformed(const Eigen::Matrix3d& rotation, const Vec3& shift) const;
};

/// det(b - a, c - a, d - a): six times the signed tetrahedron volume.
double orient3d(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d);

/// [abcd] for the torus; labels must be distinct.
double tetra_det(const Torus8& p, int a, int b, int c, int d);
inline double tetra_det(const Torus8& p, const Quadruple& q) {
  return tetra_det(p, q[0], q[1], q[2], q[3]);
}

/// The 70 ascending quadruples of {0..7} in lexicographic order.
const std::array<Quadruple, kQuadrupleCount>& quadruples();

/// Position of an ascending quadruple in quadruples().
int quadruple_index(const Quadruple& ascending);

/// Sorts four distinct labels in place; returns the permutation parity (+1/-1).
int sort_with_parity(std::array<int, 4>& labels);

std::string to_string(const Quadruple& q);

}  // namespace papertorus
