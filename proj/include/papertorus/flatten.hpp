#pragma once

// Newton correction of the three free heights that turns the nearly flat
// P(z, t) into an exactly flat P'(z, t), with order probes and sweeps.

#include <functional>
#include <string>
#include <vector>

#include "papertorus/embedding.hpp"
#include "papertorus/golden.hpp"

namespace papertorus {

struct SolveOptions {
  int max_iter = 50;
  double theta_tol = 1e-12;
  int max_halvings = 8;
  /// Finite-difference step for the Jacobian, relative to the torus scale.
  double jacobian_step = 1e-7;
};

enum class SolveStatus { Converged, NoConvergence, SingularJacobian };

const char* to_string(SolveStatus s);

struct NewtonStep {
  int iteration = 0;
  double theta = 0.0;        // defect before the step
  double step_scale = 1.0;   // damping factor finally accepted (0 if none)
  double jacobian_det = 0.0;
};

struct FlatSolveResult {
  ModularParameter z;
  double t = 0.0;
  Torus8 deformed;
  Torus8 corrected;
  Eigen::Vector3d delta = Eigen::Vector3d::Zero();  // corrected - deformed free heights
  double theta_initial = 0.0;
  double theta_final = 0.0;
  int iterations = 0;
  SolveStatus status = SolveStatus::NoConvergence;
  std::vector<NewtonStep> trace;
  Embedded embedded = Embedded::Degenerate;
  bool matches_reference = false;

  bool converged() const { return status == SolveStatus::Converged; }
  double delta_norm() const { return delta.cwiseAbs().maxCoeff(); }
};

/// Damped Newton on (theta_0, theta_1, theta_2) - 2 pi in (w_0, w_1, w_2)
/// starting from deform(z, t). Throws DomainError unless z is interior and
/// t > 0; solver failures are reported through status and trace.
FlatSolveResult solve_flat(const ModularParameter& z, double t, const SolveOptions& opts = {});

/// The same iteration from an arbitrary rho-symmetric normalized start.
FlatSolveResult solve_flat_from(const Torus8& start, const SolveOptions& opts = {});

struct ProbeRow {
  double t = 0.0;
  double theta_deformed = 0.0;
  double delta_norm = 0.0;
  int iterations = 0;
  bool converged = false;
  bool embedded = false;
  std::string error;
};

struct ProbeTable {
  ModularParameter z;
  std::vector<ProbeRow> rows;
  double theta_slope = 0.0;  // least-squares slope of log Theta vs log t
  double delta_slope = 0.0;  // same for the height correction
};

ProbeTable convergence_probe(const ModularParameter& z, const std::vector<double>& ts,
                             const SolveOptions& opts = {});

/// Least-squares slope of log(ys) against log(xs) over positive pairs.
double loglog_slope(const std::vector<double>& xs, const std::vector<double>& ys);

/// Deformation time as a function of the modular parameter.
using TSchedule = std::function<double(const ModularParameter&)>;

TSchedule constant_schedule(double t);
/// t(z) = min(1e-2, d(z, boundary)^2).
TSchedule default_schedule();

/// nx by ny interior grid: x in [x_lo, x_hi], y from the arc plus y_margin
/// up to y_hi.
std::vector<ModularParameter> interior_grid(int nx, int ny, double x_lo = 0.05, double x_hi = 0.45,
                                            double y_margin = 0.05, double y_hi = 2.0);

struct SweepPoint {
  FlatSolveResult result;
  std::string error;  // non-empty when the point could not be attempted
};

struct SweepSummary {
  std::vector<SweepPoint> points;
  int converged = 0;
  int embedded = 0;
  int matching = 0;
  double worst_theta = 0.0;
};

/// Solves every grid point, spread over `threads` workers (0 = hardware).
/// Results keep grid order.
SweepSummary sweep(const std::vector<ModularParameter>& grid, const TSchedule& schedule,
                   const SolveOptions& opts = {}, unsigned threads = 0);

}  // namespace papertorus
