#include "papertorus/exact.hpp"

namespace papertorus::exact {

Point to_exact(const Vec3& p) {
  return {Rational(p.x()), Rational(p.y()), Rational(p.z())};
}

std::array<Point, kVertexCount> to_exact(const Torus8& torus) {
  std::array<Point, kVertexCount> out;
  for (int j = 0; j < kVertexCount; ++j) out[static_cast<size_t>(j)] = to_exact(torus[j]);
  return out;
}

Point operator-(const Point& a, const Point& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
Point operator+(const Point& a, const Point& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
Point operator*(const Rational& s, const Point& a) { return {s * a[0], s * a[1], s * a[2]}; }

Rational dot(const Point& a, const Point& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Point cross(const Point& a, const Point& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

bool is_zero(const Point& a) { return a[0] == 0 && a[1] == 0 && a[2] == 0; }

Rational orient3d(const Point& a, const Point& b, const Point& c, const Point& d) {
  return dot(b - a, cross(c - a, d - a));
}

int orient3d_sign(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d) {
  return orient3d(to_exact(a), to_exact(b), to_exact(c), to_exact(d)).sign();
}

}  // namespace papertorus::exact
