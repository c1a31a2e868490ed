#pragma once

// Independent reference computations used only by the tests. None of these
// call into the library's geometry; they re-derive quantities from scratch
// with different formulas or arithmetic.

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <vector>

#include <boost/multiprecision/gmp.hpp>
#include <boost/rational.hpp>

#include "papertorus/core.hpp"

namespace oracle {

using papertorus::Torus8;
using papertorus::Vec3;
using Q = boost::rational<long long>;
using Exact = boost::multiprecision::mpq_rational;

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// The 16 faces written out by hand from the rule {a, a+1, a+3}, {a, a+2, a+3}.
inline const std::array<std::array<int, 3>, 16> kFaces{{{0, 1, 3}, {1, 2, 4}, {2, 3, 5}, {3, 4, 6},
                                                        {4, 5, 7}, {5, 6, 0}, {6, 7, 1}, {7, 0, 2},
                                                        {0, 2, 3}, {1, 3, 4}, {2, 4, 5}, {3, 5, 6},
                                                        {4, 6, 7}, {5, 7, 0}, {6, 0, 1}, {7, 1, 2}}};

// gamma_0..gamma_5 in exact rational arithmetic.
inline std::array<Q, 6> gammas(Q x, Q y) {
  const Q r2 = x * x + y * y;
  const Q g0 = 1 - 2 * x;
  const Q g3 = 2 * x + r2;
  return {g0, r2 - 2 * x, 2 * x - x * x + y * y, g3, 2 * x * g0 + (2 * x + 1) * r2,
          2 * x * x * g0 + (x * x + y * y) * g3};
}

inline double to_double(Q q) { return static_cast<double>(q.numerator()) / static_cast<double>(q.denominator()); }

// Angle at the apex from the law of cosines, in long double.
inline double corner(const Vec3& apex, const Vec3& b, const Vec3& c) {
  const long double ab = (b - apex).norm(), ac = (c - apex).norm(), bc = (c - b).norm();
  long double cosv = (ab * ab + ac * ac - bc * bc) / (2 * ab * ac);
  cosv = std::max(-1.0L, std::min(1.0L, cosv));
  return static_cast<double>(std::acos(cosv));
}

inline std::array<double, 8> cone_angles(const Torus8& p) {
  std::array<double, 8> th{};
  for (const auto& f : kFaces) {
    for (int k = 0; k < 3; ++k) {
      const int a = f[static_cast<size_t>(k)], b = f[static_cast<size_t>((k + 1) % 3)],
                c = f[static_cast<size_t>((k + 2) % 3)];
      th[static_cast<size_t>(a)] += corner(p[a], p[b], p[c]);
    }
  }
  return th;
}

inline double flatness(const Torus8& p) {
  const auto th = cone_angles(p);
  double m = 0.0;
  for (double t : th) m = std::max(m, std::abs(t - kTwoPi));
  return m;
}

// 4x4 determinant of homogeneous coordinates by cofactor expansion.
inline long double det4(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d) {
  const std::array<std::array<long double, 4>, 4> m{{{a.x(), a.y(), a.z(), 1},
                                                     {b.x(), b.y(), b.z(), 1},
                                                     {c.x(), c.y(), c.z(), 1},
                                                     {d.x(), d.y(), d.z(), 1}}};
  auto minor3 = [&](int skip) {
    std::array<std::array<long double, 3>, 3> s{};
    for (int r = 1; r < 4; ++r) {
      int cc = 0;
      for (int col = 0; col < 4; ++col) {
        if (col == skip) continue;
        s[static_cast<size_t>(r - 1)][static_cast<size_t>(cc++)] = m[static_cast<size_t>(r)][static_cast<size_t>(col)];
      }
    }
    return s[0][0] * (s[1][1] * s[2][2] - s[1][2] * s[2][1]) - s[0][1] * (s[1][0] * s[2][2] - s[1][2] * s[2][0]) +
           s[0][2] * (s[1][0] * s[2][1] - s[1][1] * s[2][0]);
  };
  long double det = 0;
  for (int col = 0; col < 4; ++col) {
    det += (col % 2 == 0 ? 1 : -1) * m[0][static_cast<size_t>(col)] * minor3(col);
  }
  // det[[a,1],[b,1],[c,1],[d,1]] = -det(b-a, c-a, d-a)
  return -det;
}

// d theta_i / d w_j for i, j in 0..2, moving (w_j, w_{7-j}) together, by
// Richardson-extrapolated central differences.
inline double jacobian_det(const Torus8& p, double h) {
  auto shifted = [&](int j, double s) {
    Torus8 q = p;
    q[j].z() += s;
    q[7 - j].z() += s;
    return cone_angles(q);
  };
  double m[3][3];
  for (int j = 0; j < 3; ++j) {
    const auto a1 = shifted(j, h), b1 = shifted(j, -h), a2 = shifted(j, h / 2), b2 = shifted(j, -h / 2);
    for (int i = 0; i < 3; ++i) {
      const double d1 = (a1[static_cast<size_t>(i)] - b1[static_cast<size_t>(i)]) / (2 * h);
      const double d2 = (a2[static_cast<size_t>(i)] - b2[static_cast<size_t>(i)]) / h;
      m[i][j] = (4 * d2 - d1) / 3;
    }
  }
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

struct ExactPoint {
  Exact x, y, z;
};

inline ExactPoint exact(const Vec3& v) { return {Exact(v.x()), Exact(v.y()), Exact(v.z())}; }

// Does the closed segment pq meet the closed triangle abc? Solved directly
// by Cramer's rule on p + s (q - p) = a + u (b - a) + v (c - a). Returns
// nullopt when the system is singular (segment parallel to the plane).
inline std::optional<bool> segment_hits_triangle(const ExactPoint& p, const ExactPoint& q, const ExactPoint& a,
                                                 const ExactPoint& b, const ExactPoint& c) {
  // columns: (b - a), (c - a), -(q - p); rhs: p - a
  const Exact m[3][3] = {{b.x - a.x, c.x - a.x, p.x - q.x},
                         {b.y - a.y, c.y - a.y, p.y - q.y},
                         {b.z - a.z, c.z - a.z, p.z - q.z}};
  const Exact r[3] = {p.x - a.x, p.y - a.y, p.z - a.z};
  auto det3 = [](const Exact (&k)[3][3]) {
    return k[0][0] * (k[1][1] * k[2][2] - k[1][2] * k[2][1]) - k[0][1] * (k[1][0] * k[2][2] - k[1][2] * k[2][0]) +
           k[0][2] * (k[1][0] * k[2][1] - k[1][1] * k[2][0]);
  };
  const Exact d = det3(m);
  if (d == 0) return std::nullopt;
  Exact sol[3];
  for (int col = 0; col < 3; ++col) {
    Exact k[3][3];
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) k[i][j] = j == col ? r[i] : m[i][j];
    sol[col] = det3(k) / d;
  }
  const Exact& u = sol[0];
  const Exact& v = sol[1];
  const Exact& s = sol[2];
  return s >= 0 && s <= 1 && u >= 0 && v >= 0 && u + v <= 1;
}

enum class Verdict { Embedded, NotEmbedded, Undecided };

// Embeddedness of a general-position torus: no edge meets a face it does
// not belong to, except at shared vertices. Built from the face list alone.
inline Verdict embedded(const Torus8& p) {
  std::array<ExactPoint, 8> e;
  for (int j = 0; j < 8; ++j) e[static_cast<size_t>(j)] = exact(p[j]);
  std::vector<std::array<int, 2>> edges;
  for (const auto& f : kFaces) {
    for (int k = 0; k < 3; ++k) {
      std::array<int, 2> ed{f[static_cast<size_t>(k)], f[static_cast<size_t>((k + 1) % 3)]};
      if (ed[0] > ed[1]) std::swap(ed[0], ed[1]);
      if (std::find(edges.begin(), edges.end(), ed) == edges.end()) edges.push_back(ed);
    }
  }
  for (const auto& ed : edges) {
    for (const auto& f : kFaces) {
      const int shared = (ed[0] == f[0] || ed[0] == f[1] || ed[0] == f[2]) + (ed[1] == f[0] || ed[1] == f[1] || ed[1] == f[2]);
      if (shared == 2) continue;
      const auto hit = segment_hits_triangle(e[static_cast<size_t>(ed[0])], e[static_cast<size_t>(ed[1])],
                                             e[static_cast<size_t>(f[0])], e[static_cast<size_t>(f[1])],
                                             e[static_cast<size_t>(f[2])]);
      if (!hit) return Verdict::Undecided;
      // An edge through a corner of a non-coplanar face meets its plane
      // only at that corner.
      if (shared == 1) continue;
      if (*hit) return Verdict::NotEmbedded;
    }
  }
  return Verdict::Embedded;
}

// Faces whose three vertices span a supporting plane of the vertex set.
inline std::vector<std::array<int, 3>> hull_faces(const Torus8& p, double rel_tol = 1e-12) {
  double scale = 0.0;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) scale = std::max(scale, (p[i] - p[j]).norm());
  std::vector<std::array<int, 3>> out;
  for (const auto& f : kFaces) {
    const Vec3 n = (p[f[1]] - p[f[0]]).cross(p[f[2]] - p[f[0]]);
    if (n.norm() <= 1e-14 * scale * scale) continue;
    bool pos = false, neg = false;
    for (int j = 0; j < 8; ++j) {
      const double s = n.normalized().dot(p[j] - p[f[0]]);
      pos = pos || s > rel_tol * scale;
      neg = neg || s < -rel_tol * scale;
    }
    if (!(pos && neg)) {
      std::array<int, 3> sorted = f;
      std::sort(sorted.begin(), sorted.end());
      out.push_back(sorted);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace oracle
