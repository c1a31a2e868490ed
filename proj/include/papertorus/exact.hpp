#pragma once

// Exact rational arithmetic on double inputs. Every finite double is a
// dyadic rational, so conversion is lossless and predicates evaluated here
// have no rounding error.

#include <array>

#include <boost/multiprecision/gmp.hpp>

#include "papertorus/core.hpp"

namespace papertorus::exact {

using Rational = boost::multiprecision::mpq_rational;
using Point = std::array<Rational, 3>;

Point to_exact(const Vec3& p);
std::array<Point, kVertexCount> to_exact(const Torus8& torus);

Point operator-(const Point& a, const Point& b);
Point operator+(const Point& a, const Point& b);
Point operator*(const Rational& s, const Point& a);
Rational dot(const Point& a, const Point& b);
Point cross(const Point& a, const Point& b);
bool is_zero(const Point& a);

/// Exact det(b - a, c - a, d - a).
Rational orient3d(const Point& a, const Point& b, const Point& c, const Point& d);

/// Sign (-1, 0, +1) of the exact orientation determinant of four doubles.
int orient3d_sign(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d);

}  // namespace papertorus::exact
