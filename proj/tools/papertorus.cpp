// papertorus: command-line front end for golden pup tents, the special
// deformation, Newton correction, sweeps and the HTTP service.
//
// Exit status: 0 success, 1 computation error, 2 usage error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "papertorus/deformation.hpp"
#include "papertorus/invariants.hpp"
#include "papertorus/report.hpp"
#include "papertorus/service.hpp"

namespace pt = papertorus;

namespace {

constexpr int kExitComputation = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Params {
  double x = 0.25;
  double y = 1.0;
  double t = 0.0;
  bool json = false;
};

pt::ModularParameter parameter(const Params& p) {
  if (!(p.y > 0.0)) throw UsageError("y must be positive");
  const pt::ModularParameter z = pt::classify(p.x, p.y);
  if (!z.in_closed_domain()) {
    throw UsageError("(" + std::to_string(p.x) + ", " + std::to_string(p.y) + ") lies outside the domain");
  }
  return z;
}

void add_point(CLI::App* cmd, Params& p, bool with_t) {
  cmd->add_option("--x", p.x, "real part of the modulus")->required();
  cmd->add_option("--y", p.y, "imaginary part of the modulus")->required();
  if (with_t) cmd->add_option("--t", p.t, "deformation time")->required()->check(CLI::NonNegativeNumber);
  cmd->add_flag("--json", p.json, "print the full report as JSON");
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

void print_summary(const pt::TorusReport& r) {
  std::printf("z = %.17g + %.17gi (%s), t = %.17g, mode %s\n", r.z.x, r.z.y, pt::to_string(r.z.region), r.t,
              pt::to_string(r.mode));
  for (int j = 0; j < pt::kVertexCount; ++j) {
    const auto& v = r.torus[j];
    std::printf("  P%d = (% .17g, % .17g, % .17g)\n", j, v.x(), v.y(), v.z());
  }
  if (r.theta) std::printf("flatness defect %.3e\n", *r.theta);
  std::printf("embedded %s, reference signs %s, hull triangles", r.embedded.c_str(),
              r.matches_reference ? "match" : "differ");
  for (int k : r.hull.on_hull_triangles) std::printf(" %d", k);
  std::printf("%s\n", r.hull.planar ? " (planar hull)" : "");
  if (r.modulus) std::printf("modulus %.15g + %.15gi\n", r.modulus->tau.real(), r.modulus->tau.imag());
  if (r.solver) {
    std::printf("newton %s after %d iterations, |dW| = %.3e\n", r.solver->status.c_str(), r.solver->iterations,
                r.solver->delta.cwiseAbs().maxCoeff());
  }
  for (const auto& n : r.notes) std::printf("note: %s\n", n.c_str());
}

int report(const Params& p, pt::TorusMode mode) {
  const pt::TorusReport r = pt::make_report(parameter(p), p.t, mode);
  if (p.json) {
    std::cout << pt::dump(pt::to_json(r), 2) << "\n";
  } else {
    print_summary(r);
  }
  return 0;
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      out.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw UsageError("not a number: '" + item + "'");
    }
    if (!(out.back() > 0.0)) throw UsageError("times must be positive");
  }
  if (out.empty()) throw UsageError("empty time list");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Paper tori: golden pup tents, their deformations and flat corrections"};
  app.require_subcommand(1);

  Params p;

  auto* golden = app.add_subcommand("golden", "golden pup tent P(z)");
  add_point(golden, p, false);

  auto* deform = app.add_subcommand("deform", "special deformation P(z, t)");
  add_point(deform, p, true);

  auto* solve = app.add_subcommand("solve", "Newton-corrected flat torus P'(z, t)");
  add_point(solve, p, true);

  int nx = 10, ny = 10;
  unsigned threads = 0;
  std::optional<double> fixed_t;
  std::string out_path;
  auto* sweep = app.add_subcommand("sweep", "solve over an interior grid, one JSON line per point");
  sweep->add_option("--nx", nx, "grid columns")->check(CLI::PositiveNumber);
  sweep->add_option("--ny", ny, "grid rows")->check(CLI::PositiveNumber);
  sweep->add_option("--t", fixed_t, "constant deformation time (default min(1e-2, d^2))")
      ->check(CLI::PositiveNumber);
  sweep->add_option("--threads", threads, "worker threads (0 = all cores)");
  sweep->add_option("--out", out_path, "output file (default stdout)");

  std::string ts_text = "0.125,0.0625,0.03125,0.015625";
  auto* probe = app.add_subcommand("probe", "convergence-order table");
  add_point(probe, p, false);
  probe->add_option("--ts", ts_text, "comma-separated deformation times");

  std::string mode_text = "solved";
  auto* modulus = app.add_subcommand("modulus", "modulus of a flat torus and its distance to z");
  add_point(modulus, p, false);
  modulus->add_option("--t", p.t, "deformation time (0 = golden)")->check(CLI::NonNegativeNumber);
  modulus->add_option("--mode", mode_text, "golden | solved")->check(CLI::IsMember({"golden", "solved"}));

  pt::SuiteOptions suite;
  bool list = false;
  auto* verify = app.add_subcommand("verify", "run the invariant suite");
  verify->add_flag("--quick", suite.quick, "smaller grids and samples");
  verify->add_option("--seed", suite.seed, "random seed");
  verify->add_option("--only", suite.filter, "run checks whose name contains this text");
  verify->add_flag("--list", list, "list check names and exit");

  std::string format = "obj";
  std::string export_mode = "solved";
  auto* exp = app.add_subcommand("export", "write a mesh or reference data file");
  exp->add_option("--x", p.x, "real part of the modulus");
  exp->add_option("--y", p.y, "imaginary part of the modulus");
  exp->add_option("--t", p.t, "deformation time")->check(CLI::NonNegativeNumber);
  exp->add_option("--mode", export_mode, "golden | deformed | solved")
      ->check(CLI::IsMember({"golden", "deformed", "solved"}));
  exp->add_option("--format", format, "obj | json | sign-list | hull-pattern")
      ->check(CLI::IsMember({"obj", "json", "sign-list", "hull-pattern"}));
  exp->add_option("--out", out_path, "output file (default stdout)");

  std::string host = "127.0.0.1";
  int port = 8080;
  std::string static_dir;
  auto* serve = app.add_subcommand("serve", "HTTP JSON API");
  serve->add_option("--host", host, "bind address");
  serve->add_option("--port", port, "port")->check(CLI::Range(1, 65535));
  serve->add_option("--static", static_dir, "directory served at /")->check(CLI::ExistingDirectory);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*golden) return report(p, pt::TorusMode::Golden);
    if (*deform) return report(p, pt::TorusMode::Deformed);
    if (*solve) {
      if (p.t == 0.0) throw UsageError("solve needs t > 0");
      return report(p, pt::TorusMode::Solved);
    }

    if (*sweep) {
      const auto grid = pt::interior_grid(nx, ny);
      const pt::TSchedule schedule = fixed_t ? pt::constant_schedule(*fixed_t) : pt::default_schedule();
      const pt::SweepSummary s = pt::sweep(grid, schedule, {}, threads);
      write_output(out_path, pt::sweep_json_lines(s));
      std::fprintf(stderr, "%zu points: %d converged, %d embedded, %d match the reference signs, worst defect %.3e\n",
                   s.points.size(), s.converged, s.embedded, s.matching, s.worst_theta);
      return s.converged == static_cast<int>(s.points.size()) ? 0 : kExitComputation;
    }

    if (*probe) {
      const pt::ModularParameter z = parameter(p);
      if (!z.interior()) throw UsageError("probe needs an interior parameter");
      const pt::ProbeTable table = pt::convergence_probe(z, parse_list(ts_text));
      if (p.json) {
        std::cout << pt::dump(pt::to_json(table), 2) << "\n";
        return 0;
      }
      std::printf("%-12s %-12s %-12s %-5s %-5s %s\n", "t", "theta(P)", "|dW|", "iter", "conv", "embedded");
      for (const auto& r : table.rows) {
        std::printf("%-12.5g %-12.4e %-12.4e %-5d %-5s %s%s\n", r.t, r.theta_deformed, r.delta_norm, r.iterations,
                    r.converged ? "yes" : "no", r.embedded ? "yes" : "no", r.error.empty() ? "" : ("  " + r.error).c_str());
      }
      std::printf("slopes: theta %.4f, correction %.4f\n", table.theta_slope, table.delta_slope);
      return 0;
    }

    if (*modulus) {
      const pt::ModularParameter z = parameter(p);
      const bool golden_mode = mode_text == "golden" || p.t == 0.0;
      pt::Torus8 torus;
      if (golden_mode) {
        torus = pt::golden_torus(z);
      } else {
        const pt::FlatSolveResult r = pt::solve_flat(z, p.t);
        if (!r.converged()) throw pt::GeometryError(std::string("Newton correction failed: ") + pt::to_string(r.status));
        torus = r.corrected;
      }
      const pt::ModulusEstimate m = pt::modulus_of(torus);
      const double d = pt::modular_distance(m.tau, z.z());
      if (p.json) {
        nlohmann::json j{{"z", {z.x, z.y}},
                         {"t", golden_mode ? 0.0 : p.t},
                         {"tau", {m.tau.real(), m.tau.imag()}},
                         {"generators", {{m.generator1.real(), m.generator1.imag()}, {m.generator2.real(), m.generator2.imag()}}},
                         {"residual", m.residual},
                         {"modular_distance", d}};
        std::cout << pt::dump(j, 2) << "\n";
      } else {
        std::printf("tau = %.17g + %.17gi\ndistance to z = %.6e\nlayout residual = %.3e\n", m.tau.real(), m.tau.imag(),
                    d, m.residual);
      }
      return 0;
    }

    if (*verify) {
      if (list) {
        for (const auto& n : pt::invariant_names()) std::printf("%s\n", n.c_str());
        return 0;
      }
      int failed = 0;
      const auto results = pt::run_invariant_suite(suite, [&](const pt::CheckResult& r) {
        std::printf("%-4s %-34s %7.2fs  %s\n", r.passed ? "ok" : "FAIL", r.name.c_str(), r.seconds, r.detail.c_str());
        std::fflush(stdout);
        failed += r.passed ? 0 : 1;
      });
      if (results.empty()) throw UsageError("no check matches '" + suite.filter + "'");
      std::printf("%zu checks, %d failed\n", results.size(), failed);
      return failed == 0 ? 0 : kExitComputation;
    }

    if (*exp) {
      if (format == "sign-list") {
        write_output(out_path, pt::sign_list_json(pt::reference_sign_list()));
        return 0;
      }
      if (format == "hull-pattern") {
        write_output(out_path, pt::hull_pattern_json(pt::reference_hull_triangles()));
        return 0;
      }
      const pt::TorusReport r = pt::make_report(parameter(p), p.t, pt::parse_mode(export_mode));
      if (format == "obj") {
        std::ostringstream c;
        c << "papertorus " << pt::to_string(r.mode) << " z=" << r.z.x << "+" << r.z.y << "i t=" << r.t;
        write_output(out_path, pt::to_obj(r.torus, c.str()));
      } else {
        write_output(out_path, pt::dump(pt::to_json(r), 2) + "\n");
      }
      return 0;
    }

    if (*serve) {
      std::fprintf(stderr, "listening on http://%s:%d\n", host.c_str(), port);
      if (!pt::serve(host, port, static_dir)) {
        std::fprintf(stderr, "papertorus: cannot listen on %s:%d\n", host.c_str(), port);
        return kExitComputation;
      }
      return 0;
    }
  } catch (const UsageError& e) {
    std::fprintf(stderr, "papertorus: %s\n", e.what());
    return kExitUsage;
  } catch (const pt::DomainError& e) {
    std::fprintf(stderr, "papertorus: %s\n", e.what());
    return kExitUsage;
  } catch (const pt::SolveFailure& e) {
    std::fprintf(stderr, "papertorus: %s\n", e.what());
    for (const auto& s : e.result().trace) {
      std::fprintf(stderr, "  iteration %d: theta %.3e, step %.3g, det %.3e\n", s.iteration, s.theta, s.step_scale,
                   s.jacobian_det);
    }
    return kExitComputation;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "papertorus: %s\n", e.what());
    return kExitComputation;
  }
  return kExitUsage;
}
