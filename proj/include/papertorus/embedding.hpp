#pragma once

// Orientation sign lists, the polynomial structure of the 70 tetrahedral
// determinants along the special deformation, the sign-only embedding
// clause, and an exact-arithmetic intersection oracle to check it against.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "papertorus/core.hpp"
#include "papertorus/golden.hpp"

namespace papertorus {

enum class Sign : int { Negative = -1, Degenerate = 0, Positive = 1 };

inline int to_int(Sign s) { return static_cast<int>(s); }

/// Signs of [abcd] over the 70 ascending quadruples.
class SignList {
 public:
  SignList() { entries_.fill(Sign::Degenerate); }

  Sign operator[](int index) const { return entries_[static_cast<size_t>(index)]; }
  Sign& operator[](int index) { return entries_[static_cast<size_t>(index)]; }
  Sign at(const Quadruple& ascending) const { return (*this)[quadruple_index(ascending)]; }

  /// Orientation of four distinct labels in the given order: the stored
  /// sign times the parity of the sorting permutation.
  int orient(int a, int b, int c, int d) const;

  bool general_position() const;
  std::vector<Quadruple> degenerate_quadruples() const;
  int count(Sign s) const;

  /// '+', '-' or '0' per quadruple, in quadruples() order.
  std::string str() const;
  static SignList parse(const std::string& text);

  bool operator==(const SignList& other) const = default;

 private:
  std::array<Sign, kQuadrupleCount> entries_;
};

inline constexpr double kSignTolerance = 1e-12;

/// Entries with |det| below tau * scale^3 are marked degenerate.
SignList sign_list(const Torus8& p, double tau = kSignTolerance);

// --- determinant polynomials along P(z, t) ---------------------------------

enum class OrderCase { Order0, Order1, Order2, Higher };

const char* to_string(OrderCase c);

struct DetPolynomial {
  Quadruple quadruple{};
  std::array<double, 7> coeffs{};  // [abcd](t) = sum_k coeffs[k] t^k
  int leading_index = -1;
  OrderCase order = OrderCase::Higher;
  double holdout_residual = 0.0;

  double leading() const { return coeffs[static_cast<size_t>(leading_index)]; }
  double operator()(double t) const;
};

inline constexpr double kFitTolerance = 1e-8;
/// Coefficients below this (relative to scale^3) count as vanishing.
inline constexpr double kLeadingTolerance = 1e-9;

class FitError : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

/// Sample t_k = k/64 (k = 1..7), interpolate the degree-6 polynomial, check
/// it at t = 9/64 and 5/128, and classify by the first non-vanishing
/// coefficient. Requires an interior z; throws FitError on a bad holdout.
DetPolynomial det_polynomial(const ModularParameter& z, const Quadruple& q);

/// All 70 polynomials at once, for an explicit drift (x1, x2).
std::array<DetPolynomial, kQuadrupleCount> det_polynomials(const ModularParameter& z,
                                                           double drift1, double drift2);
std::array<DetPolynomial, kQuadrupleCount> det_polynomials(const ModularParameter& z);

/// The same coefficients by direct expansion: every coordinate of P(z, t)
/// is quadratic in t, so each determinant is a product of quadratics.
std::array<std::array<double, 7>, kQuadrupleCount> expanded_det_coefficients(
    const ModularParameter& z, double drift1, double drift2);

/// Lambda(z): the signs of the leading coefficients.
SignList leading_sign_list(const std::array<DetPolynomial, kQuadrupleCount>& polys);
SignList leading_sign_list(const ModularParameter& z);

// --- the embedding clause ------------------------------------------------------

enum class BlockResult { Satisfied, Violated, Degenerate };

/// Does the open segment (a, b) miss the closed triangle (c, d, e)?
/// Decided from the signs of [abcd], [abce], [abde], [acde], [bcde] alone.
BlockResult edge_triangle_disjoint(const SignList& signs, const Edge& edge, const Triangle& tri);
BlockResult edge_triangle_disjoint(const Torus8& p, const Edge& edge, const Triangle& tri);

struct Block {
  Edge edge{};
  Triangle triangle{};
  int first = 0;   // triangle pair (indices into the triangulation)
  int second = 0;
};

/// The 288 blocks: 6 per disjoint triangle pair (each edge of each
/// triangle against the other) and 2 per vertex-sharing pair (the edge
/// opposite the shared vertex against the other triangle).
const std::vector<Block>& embedding_blocks();

enum class Embedded { Yes, No, Degenerate };

const char* to_string(Embedded e);

struct EmbeddingVerdict {
  Embedded embedded = Embedded::Degenerate;
  std::optional<Block> failing_block;
  std::vector<Quadruple> degenerate_quadruples;
  SignList signs;
  int blocks_checked = 0;

  bool yes() const { return embedded == Embedded::Yes; }
};

/// A sign list is winning when this returns Yes.
EmbeddingVerdict embedding_clause(const SignList& signs);
EmbeddingVerdict embedding_clause(const Torus8& p, double tau = kSignTolerance);

// --- exact oracle ---------------------------------------------------------------

enum class OracleVerdict { Embedded, NotEmbedded, Touching };

const char* to_string(OracleVerdict v);

struct OracleReport {
  OracleVerdict verdict = OracleVerdict::Embedded;
  int first = -1;   // offending triangle pair, if any
  int second = -1;
  std::string detail;
};

/// Exhaustive exact triangle-triangle intersection over all 120 pairs.
/// Pairs must meet exactly in their shared vertex or edge. An improper
/// contact whose intersection reaches the relative interior of both
/// triangles is NotEmbedded; one confined to boundaries is Touching.
OracleReport exact_intersection_oracle(const Torus8& p);

// --- reference data -------------------------------------------------------------

/// The embedded pup tent coordinates as published (vertex rows 0..7).
Torus8 pup_torus();

/// Lambda_ref: the leading-coefficient sign list of the special
/// deformation, which is winning and constant over the interior.
const SignList& reference_sign_list();

/// Indices (into the triangulation) of the 6 triangles on the convex hull
/// boundary of an embedded pup tent on the deformation path.
const std::vector<int>& reference_hull_triangles();

/// Versioned JSON data files: {"version": 1, "entries": [[a,b,c,d,sign], ...]}
/// and {"version": 1, "triangles": [[a,b,c], ...]}.
std::string sign_list_json(const SignList& signs);
SignList parse_sign_list_json(const std::string& text);
std::string hull_pattern_json(const std::vector<int>& triangles);
std::vector<int> parse_hull_pattern_json(const std::string& text);

}  // namespace papertorus
