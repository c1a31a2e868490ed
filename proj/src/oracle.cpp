#include <algorithm>
#include <sstream>
#include <vector>

#include "papertorus/embedding.hpp"
#include "papertorus/exact.hpp"

namespace papertorus {

namespace {

using exact::Point;
using exact::Rational;
using exact::operator+;
using exact::operator-;
using exact::operator*;

using Polygon = std::vector<Point>;

void push_unique(Polygon& poly, const Point& p) {
  if (std::find(poly.begin(), poly.end(), p) == poly.end()) poly.push_back(p);
}

// Keep the part of a convex polygon (possibly a segment or a point) with
// dot(n, p) >= c.
Polygon clip(const Polygon& poly, const Point& n, const Rational& c) {
  Polygon out;
  const size_t m = poly.size();
  if (m == 0) return out;
  if (m == 1) {
    if (exact::dot(n, poly[0]) >= c) out.push_back(poly[0]);
    return out;
  }
  const size_t edges = m == 2 ? 1 : m;
  for (size_t i = 0; i < edges; ++i) {
    const Point& p = poly[i];
    const Point& q = poly[(i + 1) % m];
    const Rational dp = exact::dot(n, p) - c;
    const Rational dq = exact::dot(n, q) - c;
    if (dp >= 0) push_unique(out, p);
    if ((dp > 0 && dq < 0) || (dp < 0 && dq > 0)) {
      const Rational s = dp / (dp - dq);
      push_unique(out, p + s * (q - p));
    }
    if (m == 2 && dq >= 0) push_unique(out, q);
  }
  return out;
}

// Extreme points of the intersection of two closed, non-degenerate triangles.
Polygon intersect(const std::array<Point, 3>& a, const std::array<Point, 3>& b) {
  const Point na = exact::cross(a[1] - a[0], a[2] - a[0]);
  std::array<Rational, 3> side;
  int pos = 0, neg = 0;
  for (size_t i = 0; i < 3; ++i) {
    side[i] = exact::dot(na, b[i] - a[0]);
    pos += side[i] > 0 ? 1 : 0;
    neg += side[i] < 0 ? 1 : 0;
  }
  if (pos == 3 || neg == 3) return {};

  Polygon poly;
  if (pos == 0 && neg == 0) {
    poly.assign(b.begin(), b.end());
  } else {
    for (size_t i = 0; i < 3; ++i) {
      const size_t j = (i + 1) % 3;
      if (side[i] == 0) push_unique(poly, b[i]);
      if ((side[i] > 0 && side[j] < 0) || (side[i] < 0 && side[j] > 0)) {
        const Rational s = side[i] / (side[i] - side[j]);
        push_unique(poly, b[i] + s * (b[j] - b[i]));
      }
    }
  }
  for (size_t i = 0; i < 3 && !poly.empty(); ++i) {
    const Point inward = exact::cross(na, a[(i + 1) % 3] - a[i]);
    poly = clip(poly, inward, exact::dot(inward, a[i]));
  }
  return poly;
}

bool strictly_inside(const std::array<Point, 3>& t, const Point& p) {
  const Point n = exact::cross(t[1] - t[0], t[2] - t[0]);
  for (size_t i = 0; i < 3; ++i) {
    const Point inward = exact::cross(n, t[(i + 1) % 3] - t[i]);
    if (exact::dot(inward, p - t[i]) <= 0) return false;
  }
  return true;
}

bool in_shared_simplex(const std::vector<Point>& shared, const Point& p) {
  if (shared.size() == 1) return p == shared[0];
  if (shared.size() == 2) {
    const Point d = shared[1] - shared[0];
    const Point r = p - shared[0];
    if (!exact::is_zero(exact::cross(r, d))) return false;
    const Rational s = exact::dot(r, d);
    return s >= 0 && s <= exact::dot(d, d);
  }
  return false;
}

}  // namespace

const char* to_string(OracleVerdict v) {
  switch (v) {
    case OracleVerdict::Embedded: return "embedded";
    case OracleVerdict::NotEmbedded: return "not-embedded";
    case OracleVerdict::Touching: return "touching";
  }
  return "?";
}

OracleReport exact_intersection_oracle(const Torus8& p) {
  const auto pts = exact::to_exact(p);
  const auto& tri = uniform_triangulation();
  std::array<std::array<Point, 3>, kTriangleCount> corners;
  for (int i = 0; i < kTriangleCount; ++i) {
    const Triangle& t = tri.triangles[static_cast<size_t>(i)];
    for (size_t k = 0; k < 3; ++k) corners[static_cast<size_t>(i)][k] = pts[static_cast<size_t>(t[k])];
    const auto& c = corners[static_cast<size_t>(i)];
    if (exact::is_zero(exact::cross(c[1] - c[0], c[2] - c[0]))) {
      OracleReport r;
      r.verdict = OracleVerdict::NotEmbedded;
      r.first = r.second = i;
      r.detail = "triangle " + std::to_string(i) + " is collapsed";
      return r;
    }
  }

  OracleReport touching;
  for (const auto& pair : classify_pairs(tri)) {
    const auto& a = corners[static_cast<size_t>(pair.first)];
    const auto& b = corners[static_cast<size_t>(pair.second)];
    const Polygon inter = intersect(a, b);
    if (inter.empty()) continue;
    std::vector<Point> shared;
    for (int v : pair.shared) shared.push_back(pts[static_cast<size_t>(v)]);
    const bool proper = !shared.empty() && std::all_of(inter.begin(), inter.end(), [&](const Point& x) {
      return in_shared_simplex(shared, x);
    });
    if (proper) continue;

    Point centroid{0, 0, 0};
    for (const Point& x : inter) centroid = centroid + x;
    centroid = Rational(1, static_cast<long>(inter.size())) * centroid;
    std::ostringstream msg;
    msg << "triangles " << pair.first << " and " << pair.second << " ("
        << to_string(pair.kind) << ") meet in " << inter.size() << " extreme point(s)";
    if (strictly_inside(a, centroid) && strictly_inside(b, centroid)) {
      OracleReport r;
      r.verdict = OracleVerdict::NotEmbedded;
      r.first = pair.first;
      r.second = pair.second;
      r.detail = msg.str();
      return r;
    }
    if (touching.verdict == OracleVerdict::Embedded) {
      touching.verdict = OracleVerdict::Touching;
      touching.first = pair.first;
      touching.second = pair.second;
      touching.detail = msg.str();
    }
  }
  return touching;
}

}  // namespace papertorus
