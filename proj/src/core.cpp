#include "papertorus/core.hpp"

#include <algorithm>
#include <set>

namespace papertorus {

namespace {

Triangle ascending(int a, int b, int c) {
  Triangle t{a, b, c};
  std::sort(t.begin(), t.end());
  return t;
}

}  // namespace

Triangulation8 build_triangulation() {
  std::set<Triangle> tris;
  for (int a = 0; a < kVertexCount; ++a) {
    tris.insert(ascending(a, (a + 1) % 8, (a + 3) % 8));
    tris.insert(ascending(a, (a + 2) % 8, (a + 3) % 8));
  }
  std::set<Edge> edges;
  for (const auto& t : tris) {
    edges.insert({t[0], t[1]});
    edges.insert({t[0], t[2]});
    edges.insert({t[1], t[2]});
  }
  if (tris.size() != kTriangleCount || edges.size() != kEdgeCount) {
    throw std::logic_error("uniform triangulation construction is inconsistent");
  }

  Triangulation8 out;
  std::copy(tris.begin(), tris.end(), out.triangles.begin());
  std::copy(edges.begin(), edges.end(), out.edges.begin());
  for (int a = 0; a < 4; ++a) out.missing_edges[static_cast<size_t>(a)] = {a, a + 4};
  return out;
}

const Triangulation8& uniform_triangulation() {
  static const Triangulation8 tri = build_triangulation();
  return tri;
}

bool Triangulation8::has_edge(int a, int b) const {
  Edge e{std::min(a, b), std::max(a, b)};
  return std::find(edges.begin(), edges.end(), e) != edges.end();
}

int Triangulation8::degree(int v) const {
  return static_cast<int>(std::count_if(edges.begin(), edges.end(),
                                        [v](const Edge& e) { return e[0] == v || e[1] == v; }));
}

std::vector<int> Triangulation8::star(int v) const {
  std::vector<int> out;
  for (int i = 0; i < kTriangleCount; ++i) {
    const auto& t = triangles[static_cast<size_t>(i)];
    if (t[0] == v || t[1] == v || t[2] == v) out.push_back(i);
  }
  return out;
}

int Triangulation8::find_triangle(int a, int b, int c) const {
  const Triangle key = ascending(a, b, c);
  for (int i = 0; i < kTriangleCount; ++i) {
    if (triangles[static_cast<size_t>(i)] == key) return i;
  }
  return -1;
}

const char* to_string(PairKind kind) {
  switch (kind) {
    case PairKind::EdgeSharing: return "edge-sharing";
    case PairKind::VertexSharing: return "vertex-sharing";
    case PairKind::Disjoint: return "disjoint";
  }
  return "?";
}

std::vector<TrianglePairClass> classify_pairs(const Triangulation8& tri) {
  std::vector<TrianglePairClass> out;
  out.reserve(kTriangleCount * (kTriangleCount - 1) / 2);
  for (int i = 0; i < kTriangleCount; ++i) {
    for (int j = i + 1; j < kTriangleCount; ++j) {
      const auto& a = tri.triangles[static_cast<size_t>(i)];
      const auto& b = tri.triangles[static_cast<size_t>(j)];
      TrianglePairClass pc;
      pc.first = i;
      pc.second = j;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(pc.shared));
      switch (pc.shared.size()) {
        case 2: pc.kind = PairKind::EdgeSharing; break;
        case 1: pc.kind = PairKind::VertexSharing; break;
        case 0: pc.kind = PairKind::Disjoint; break;
        default: throw std::logic_error("two distinct triangles share three vertices");
      }
      out.push_back(std::move(pc));
    }
  }
  return out;
}

double Torus8::rho_asymmetry() const {
  double worst = 0.0;
  for (int j = 0; j < kVertexCount; ++j) {
    worst = std::max(worst, ((*this)[j] - rho((*this)[7 - j])).cwiseAbs().maxCoeff());
  }
  return worst;
}

bool Torus8::is_normalized(double tol) const {
  return std::abs((*this)[3].z()) <= tol && std::abs((*this)[4].z()) <= tol;
}

double Torus8::scale() const {
  Vec3 lo = vertices[0];
  Vec3 hi = vertices[0];
  for (const auto& p : vertices) {
    lo = lo.cwiseMin(p);
    hi = hi.cwiseMax(p);
  }
  return (hi - lo).norm();
}

void Torus8::symmetrize() {
  for (int j = 4; j < kVertexCount; ++j) (*this)[j] = rho((*this)[7 - j]);
}

Torus8 Torus8::scaled(double s) const {
  Torus8 out = *this;
  for (auto& p : out.vertices) p *= s;
  return out;
}

Torus8 Torus8::transformed(const Eigen::Matrix3d& rotation, const Vec3& shift) const {
  Torus8 out = *this;
  for (auto& p : out.vertices) p = rotation * p + shift;
  return out;
}

double orient3d(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d) {
  return (b - a).dot((c - a).cross(d - a));
}

double tetra_det(const Torus8& p, int a, int b, int c, int d) {
  return orient3d(p[a], p[b], p[c], p[d]);
}

const std::array<Quadruple, kQuadrupleCount>& quadruples() {
  static const auto table = [] {
    std::array<Quadruple, kQuadrupleCount> q{};
    size_t n = 0;
    for (int a = 0; a < 8; ++a)
      for (int b = a + 1; b < 8; ++b)
        for (int c = b + 1; c < 8; ++c)
          for (int d = c + 1; d < 8; ++d) q[n++] = {a, b, c, d};
    return q;
  }();
  return table;
}

int quadruple_index(const Quadruple& q) {
  const auto& all = quadruples();
  auto it = std::lower_bound(all.begin(), all.end(), q);
  if (it == all.end() || *it != q) {
    throw std::invalid_argument("not an ascending quadruple: " + to_string(q));
  }
  return static_cast<int>(it - all.begin());
}

int sort_with_parity(std::array<int, 4>& labels) {
  int parity = 1;
  for (size_t i = 0; i < labels.size(); ++i) {
    for (size_t j = 0; j + 1 < labels.size() - i; ++j) {
      if (labels[j] > labels[j + 1]) {
        std::swap(labels[j], labels[j + 1]);
        parity = -parity;
      }
    }
  }
  return parity;
}

std::string to_string(const Quadruple& q) {
  std::string s = "[";
  for (int v : q) s += static_cast<char>('0' + v);
  return s + "]";
}

}  // namespace papertorus
