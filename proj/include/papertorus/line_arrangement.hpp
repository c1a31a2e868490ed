#pragma once

// The order-2 line arrangement in the drift plane: each quadruple whose
// t^2 determinant coefficient depends on the drift (x1, x2) contributes the
// zero line of that affine function. The drift is chosen inside a bounded
// cell of the arrangement whose sign pattern is winning.

#include <array>
#include <vector>

#include "papertorus/embedding.hpp"
#include "papertorus/golden.hpp"

namespace papertorus {

/// A line n . p + c = 0 with |n| = 1 and a canonical sign.
struct DriftLine {
  Eigen::Vector2d normal{0.0, 0.0};
  double offset = 0.0;
  std::vector<Quadruple> quadruples;  // coefficients sharing this zero line

  double eval(const Eigen::Vector2d& p) const { return normal.dot(p) + offset; }
};

/// Relative distance below which two normalized lines are the same.
inline constexpr double kLineTolerance = 1e-9;

class ClusteringError : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

struct CellReport {
  Eigen::Vector2d point{0.0, 0.0};
  std::vector<Eigen::Vector2d> polygon;  // the cell containing point
  bool bounded = false;
  bool strictly_inside = false;  // no drift-dependent coefficient vanishes at point
  double margin = 0.0;           // min distance from point to any line
  Eigen::Vector2d barycenter{0.0, 0.0};
  SignList signs;                // leading signs with the order-2 entries taken at point
  bool winning = false;
};

struct LineArrangement {
  ModularParameter z;
  /// Order-2 coefficient of each of the 70 determinants as
  /// base + gradient . (x1, x2). Lines come only from the quadruples whose
  /// order-0 and order-1 coefficients vanish.
  std::array<double, kQuadrupleCount> base{};
  std::array<Eigen::Vector2d, kQuadrupleCount> gradient{};
  std::vector<Quadruple> drift_dependent;
  std::vector<DriftLine> lines;

  /// Locate and audit the cell containing a drift point.
  CellReport cell(const Eigen::Vector2d& drift) const;
};

/// Probes the order-2 coefficients at three drift points and clusters the
/// resulting zero lines. Throws DomainError off the interior and
/// ClusteringError when two lines are nearly but not exactly equal.
LineArrangement order2_line_arrangement(const ModularParameter& z);

}  // namespace papertorus
