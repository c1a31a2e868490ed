#include "papertorus/flatten.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include <Eigen/Dense>

#include "papertorus/angles.hpp"
#include "papertorus/deformation.hpp"

namespace papertorus {

const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Converged: return "converged";
    case SolveStatus::NoConvergence: return "no-convergence";
    case SolveStatus::SingularJacobian: return "singular-jacobian";
  }
  return "?";
}

FlatSolveResult solve_flat_from(const Torus8& start, const SolveOptions& opts) {
  FlatSolveResult r;
  r.deformed = start;
  r.corrected = start;
  r.theta_initial = flatness(start);
  const double h = opts.jacobian_step * start.scale();

  Torus8 p = start;
  Eigen::Vector3d g = angle_residual(p);
  double theta = g.cwiseAbs().maxCoeff();
  for (int it = 0; it < opts.max_iter && theta > opts.theta_tol; ++it) {
    NewtonStep step;
    step.iteration = it;
    step.theta = theta;
    const AngleJacobian jac = angle_jacobian(p, h);
    step.jacobian_det = jac.determinant();
    const double mscale = jac.m.cwiseAbs().maxCoeff();
    if (!(std::abs(step.jacobian_det) > 1e-14 * mscale * mscale * mscale)) {
      step.step_scale = 0.0;
      r.trace.push_back(step);
      r.status = SolveStatus::SingularJacobian;
      r.iterations = it + 1;
      r.corrected = p;
      r.theta_final = theta;
      r.delta = free_heights(p) - free_heights(start);
      return r;
    }
    const Eigen::Vector3d dw = jac.m.partialPivLu().solve(-g);
    const Eigen::Vector3d w = free_heights(p);

    bool accepted = false;
    double lambda = 1.0;
    for (int k = 0; k <= opts.max_halvings; ++k, lambda *= 0.5) {
      try {
        const Torus8 trial = with_free_heights(p, w + lambda * dw);
        const Eigen::Vector3d gt = angle_residual(trial);
        if (gt.norm() < g.norm()) {
          p = trial;
          g = gt;
          accepted = true;
          break;
        }
      } catch (const GeometryError&) {
        // collapsed edge: shrink the step
      }
    }
    step.step_scale = accepted ? lambda : 0.0;
    r.trace.push_back(step);
    r.iterations = it + 1;
    if (!accepted) break;
    theta = g.cwiseAbs().maxCoeff();
  }

  r.corrected = p;
  r.theta_final = theta;
  r.delta = free_heights(p) - free_heights(start);
  r.status = theta <= opts.theta_tol ? SolveStatus::Converged : SolveStatus::NoConvergence;
  const SignList signs = sign_list(p);
  r.embedded = embedding_clause(signs).embedded;
  r.matches_reference = signs == reference_sign_list();
  return r;
}

FlatSolveResult solve_flat(const ModularParameter& z, double t, const SolveOptions& opts) {
  if (!z.interior()) throw DomainError(std::string("solver requires an interior parameter, got ") + to_string(z.region));
  if (!(t > 0.0)) throw DomainError("solver requires t > 0");
  FlatSolveResult r = solve_flat_from(deform(z, t), opts);
  r.z = z;
  r.t = t;
  return r;
}

double loglog_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  for (size_t i = 0; i < std::min(xs.size(), ys.size()); ++i) {
    if (!(xs[i] > 0) || !(ys[i] > 0)) continue;
    const double lx = std::log(xs[i]);
    const double ly = std::log(ys[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++n;
  }
  if (n < 2) return std::nan("");
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

ProbeTable convergence_probe(const ModularParameter& z, const std::vector<double>& ts,
                             const SolveOptions& opts) {
  ProbeTable table;
  table.z = z;
  std::vector<double> good_t, thetas, deltas;
  for (double t : ts) {
    ProbeRow row;
    row.t = t;
    try {
      const FlatSolveResult r = solve_flat(z, t, opts);
      row.theta_deformed = r.theta_initial;
      row.delta_norm = r.delta_norm();
      row.iterations = r.iterations;
      row.converged = r.converged();
      row.embedded = r.converged() && r.embedded == Embedded::Yes;
      if (!r.converged()) row.error = to_string(r.status);
      if (r.converged()) {
        good_t.push_back(t);
        thetas.push_back(row.theta_deformed);
        deltas.push_back(row.delta_norm);
      }
    } catch (const std::exception& e) {
      row.error = e.what();
    }
    table.rows.push_back(row);
  }
  table.theta_slope = loglog_slope(good_t, thetas);
  table.delta_slope = loglog_slope(good_t, deltas);
  return table;
}

TSchedule constant_schedule(double t) {
  return [t](const ModularParameter&) { return t; };
}

TSchedule default_schedule() {
  return [](const ModularParameter& z) {
    const double d = boundary_distance(z.x, z.y);
    return std::min(1e-2, d * d);
  };
}

std::vector<ModularParameter> interior_grid(int nx, int ny, double x_lo, double x_hi,
                                            double y_margin, double y_hi) {
  std::vector<ModularParameter> out;
  for (int i = 0; i < nx; ++i) {
    const double x = nx == 1 ? x_lo : x_lo + (x_hi - x_lo) * i / (nx - 1);
    const double y_lo = std::sqrt(std::max(0.0, 2.0 * x - x * x)) + y_margin;
    for (int j = 0; j < ny; ++j) {
      const double y = ny == 1 ? y_lo : y_lo + (y_hi - y_lo) * j / (ny - 1);
      out.push_back(classify(x, y));
    }
  }
  return out;
}

SweepSummary sweep(const std::vector<ModularParameter>& grid, const TSchedule& schedule,
                   const SolveOptions& opts, unsigned threads) {
  SweepSummary s;
  s.points.resize(grid.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<size_t>(1, grid.size())));

  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next++; i < grid.size(); i = next++) {
      SweepPoint& pt = s.points[i];
      pt.result.z = grid[i];
      try {
        const double t = schedule(grid[i]);
        pt.result.t = t;
        pt.result = solve_flat(grid[i], t, opts);
      } catch (const std::exception& e) {
        pt.error = e.what();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned k = 0; k < threads; ++k) pool.emplace_back(worker);
  for (auto& th : pool) th.join();

  for (const SweepPoint& pt : s.points) {
    if (!pt.error.empty() || !pt.result.converged()) continue;
    ++s.converged;
    s.embedded += pt.result.embedded == Embedded::Yes ? 1 : 0;
    s.matching += pt.result.matches_reference ? 1 : 0;
    s.worst_theta = std::max(s.worst_theta, pt.result.theta_final);
  }
  return s;
}

}  // namespace papertorus
