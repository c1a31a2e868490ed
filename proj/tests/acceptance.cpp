// Acceptance run: one PASS/FAIL line per criterion, with the measured
// numbers behind each verdict. Exits 0 once every criterion has been
// evaluated; --strict makes any FAIL a nonzero exit.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "papertorus/angles.hpp"
#include "papertorus/deformation.hpp"
#include "papertorus/embedding.hpp"
#include "papertorus/flatten.hpp"
#include "papertorus/golden.hpp"
#include "papertorus/sampling.hpp"
#include "papertorus/shape.hpp"

using namespace papertorus;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& why) {
    if (!ok) {
      pass = false;
      detail << " [miss: " << why << "]";
    }
  }
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

std::string at(const ModularParameter& z) { return "(" + num(z.x) + "," + num(z.y) + ")"; }

std::vector<ModularParameter> five_points() {
  return {classify(0.25, 1.0), classify(0.1, 1.3), classify(0.4, 1.2), classify(0.05, 1.05), classify(0.3, 1.8)};
}

// 1
void golden_flatness(Outcome& o) {
  double worst_theta = 0.0, worst_oracle = 0.0, worst_edge = 0.0;
  int iso_ok = 0, n = 0;
  for (const auto& z : interior_grid(15, 15)) {
    const Torus8 p = golden_torus(z);
    worst_theta = std::max(worst_theta, flatness(p));
    worst_oracle = std::max(worst_oracle, oracle::flatness(p));
    const IsometryReport r = verify_isometry(z, 1e-12);
    iso_ok += r.passed ? 1 : 0;
    worst_edge = std::max(worst_edge, r.worst_error);
    ++n;
  }
  o.detail << n << " points, max Theta " << num(worst_theta) << " (law-of-cosines oracle " << num(worst_oracle)
           << "), isometry " << iso_ok << "/" << n << ", worst edge error " << num(worst_edge);
  o.require(worst_theta < 1e-12 && worst_oracle < 1e-12, "Theta >= 1e-12");
  o.require(iso_ok == n, "isometry failed");
}

// 2
void gauss_bonnet(Outcome& o) {
  Rng rng(2);
  double worst = 0.0, worst_oracle = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const Torus8 p = random_rho_symmetric_torus(rng);
    const ConeAngles a = cone_angles(p);
    worst = std::max(worst, std::abs(a[0] + a[1] + a[2] + a[3] - 4.0 * kTwoPi));
    const auto b = oracle::cone_angles(p);
    worst_oracle = std::max(worst_oracle, std::abs(b[0] + b[1] + b[2] + b[3] - 4.0 * kTwoPi));
  }
  o.detail << "1000 rho-symmetric tori, max |sum - 8 pi| " << num(worst) << " (oracle " << num(worst_oracle) << ")";
  o.require(worst <= 1e-10, "sum off by more than 1e-10");
}

// 3
void jacobian(Outcome& o) {
  Rng rng(3);
  double worst = 0.0, worst_oracle = 0.0;
  for (int k = 0; k < 20; ++k) {
    const ModularParameter z = random_interior_parameter(rng, 0.05);
    const double closed = jacobian_determinant_closed_form(z.x, z.y);
    const Torus8 p = golden_torus(z);
    worst = std::max(worst, std::abs(angle_jacobian(p).determinant() / closed - 1.0));
    worst_oracle = std::max(worst_oracle, std::abs(oracle::jacobian_det(p, 1e-4) / closed - 1.0));
  }
  const double v = jacobian_determinant_closed_form(0.25, 1.0);
  const double fd = angle_jacobian(golden_torus(classify(0.25, 1.0))).determinant();
  o.detail << "20 points, max relative error " << num(worst) << " (oracle FD " << num(worst_oracle)
           << "); closed form at 1/4+i " << std::to_string(v) << ", FD " << std::to_string(fd);
  o.require(worst <= 1e-6, "relative error above 1e-6");
  // Four printed decimals.
  o.require(std::abs(v + 1.7734) < 1e-4 && std::abs(fd + 1.7734) < 1e-4, "value at 1/4+i");
}

// 4
void cubic_flatness(Outcome& o) {
  const std::vector<double> ts{1.0 / 64, 1.0 / 128, 1.0 / 256};
  for (const auto& z : five_points()) {
    std::vector<double> th;
    for (double t : ts) th.push_back(oracle::flatness(deform(z, t)));
    const double s = loglog_slope(ts, th);
    o.detail << at(z) << " slope " << num(s) << "; ";
    o.require(std::abs(s - 3.0) <= 0.2, "slope at " + at(z));
  }
}

// 5
void order_structure(Outcome& o) {
  std::vector<int> first;
  for (const auto& z : five_points()) {
    const auto polys = det_polynomials(z);
    int counts[3] = {0, 0, 0};
    std::vector<int> lead;
    for (const auto& p : polys) {
      ++counts[static_cast<int>(p.order)];
      lead.push_back(p.leading_index);
    }
    o.detail << at(z) << " " << counts[0] << "/" << counts[1] << "/" << counts[2] << "; ";
    o.require(counts[0] == 45 && counts[1] == 6 && counts[2] == 19, "counts at " + at(z));
    if (first.empty()) first = lead;
    o.require(lead == first, "partition differs at " + at(z));
    o.require(leading_sign_list(polys) == reference_sign_list(), "leading signs differ at " + at(z));
  }
  o.detail << "partition and leading signs identical across the 5 points";
}

// 6
void certification(Outcome& o) {
  const Torus8 pup = pup_torus();
  const EmbeddingVerdict v = embedding_clause(pup);
  const OracleReport r = exact_intersection_oracle(pup);
  const oracle::Verdict ind = oracle::embedded(pup);
  const Hull h = convex_hull(pup);
  const double th = flatness(pup);
  o.detail << "pup: clause " << to_string(v.embedded) << ", Theta " << num(th) << ", oracle " << to_string(r.verdict)
           << ", independent oracle "
           << (ind == oracle::Verdict::Embedded ? "embedded" : ind == oracle::Verdict::NotEmbedded ? "not-embedded"
                                                                                                   : "undecided")
           << ", hull triangles " << h.on_hull_triangles.size();
  o.require(v.yes(), "pup clause not embedded");
  o.require(th < 1e-10, "pup Theta >= 1e-10");
  o.require(r.verdict == OracleVerdict::Embedded, "pup oracle not embedded");
  o.require(h.on_hull_triangles.size() == 6, "pup hull count");

  const Torus8 d = deform(classify(0.25, 1.0), 0.125);
  const bool dy = embedding_clause(d).yes();
  const bool dor = exact_intersection_oracle(d).verdict == OracleVerdict::Embedded;
  o.detail << "; deform(1/4+i, 1/8): clause " << (dy ? "yes" : "no") << ", oracle " << (dor ? "embedded" : "not");
  o.require(dy && dor, "deformed torus");

  int degenerate = 0, n = 0;
  for (const auto& z : interior_grid(5, 5)) {
    ++n;
    degenerate += embedding_clause(golden_torus(z)).embedded == Embedded::Degenerate ? 1 : 0;
  }
  o.detail << "; golden degenerate " << degenerate << "/" << n;
  o.require(degenerate == n, "golden verdict");
}

// 7
void clause_oracle(Outcome& o) {
  Rng rng(7);
  std::uniform_real_distribution<double> e(-6.0, -1.0);
  int tested = 0, disagree = 0, embedded = 0, skipped = 0, ind_disagree = 0;
  for (int k = 0; tested < 1000; ++k) {
    Torus8 p;
    if (k % 2 == 0) {
      p = random_rho_symmetric_torus(rng);
    } else {
      const ModularParameter z = random_interior_parameter(rng);
      p = jitter(deform(z, 0.125), std::pow(10.0, e(rng)), rng, k % 4 == 1);
    }
    const EmbeddingVerdict v = embedding_clause(p);
    const OracleReport r = exact_intersection_oracle(p);
    if (v.embedded == Embedded::Degenerate || r.verdict == OracleVerdict::Touching) {
      ++skipped;
      continue;
    }
    ++tested;
    embedded += v.yes() ? 1 : 0;
    disagree += v.yes() != (r.verdict == OracleVerdict::Embedded) ? 1 : 0;
    const oracle::Verdict ind = oracle::embedded(p);
    if (ind != oracle::Verdict::Undecided) ind_disagree += v.yes() != (ind == oracle::Verdict::Embedded) ? 1 : 0;
  }
  o.detail << tested << " tori (" << embedded << " embedded, " << skipped << " degenerate skipped), disagreements "
           << disagree << "; independent oracle disagreements " << ind_disagree;
  o.require(disagree == 0, "clause and oracle disagree");
}

// 8
void newton(Outcome& o) {
  const SweepSummary s = sweep(interior_grid(10, 10), constant_schedule(1e-2));
  const int n = static_cast<int>(s.points.size());
  int flat = 0, match = 0;
  std::string misses;
  for (const auto& pt : s.points) {
    const FlatSolveResult& r = pt.result;
    const bool ok = r.converged() && r.theta_final < 1e-12;
    flat += ok ? 1 : 0;
    match += ok && r.matches_reference ? 1 : 0;
    if (!ok || !r.matches_reference) misses += " " + at(r.z) + ":" + to_string(r.status);
  }
  const ModularParameter z = classify(0.25, 1.0);
  const double ratio = solve_flat(z, 1e-2).delta_norm() / solve_flat(z, 5e-3).delta_norm();
  o.detail << "10x10 grid at t=1e-2: flat " << flat << "/" << n << ", sign list = reference " << match << "/" << n
           << ", embedded " << s.embedded << "/" << n << "; correction ratio t/(t/2) at 1/4+i " << num(ratio);
  if (!misses.empty()) o.detail << "; misses" << misses;
  o.require(flat == n, "not all points flat");
  o.require(match == n, "not all sign lists match");
  o.require(ratio >= 7 && ratio <= 9, "correction ratio");
}

// 9
void robustness(Outcome& o) {
  const ModularParameter z = classify(0.25, 1.0);
  const double t = 1e-2;
  const Torus8 p = deform(z, t);
  const Eigen::Vector3d w = free_heights(p);
  Rng rng(9);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  int kept = 0;
  for (int k = 0; k < 100; ++k) {
    const Eigen::Vector3d d(u(rng), u(rng), u(rng));
    kept += embedding_clause(with_free_heights(p, w + 1e-3 * t * t * d)).yes() ? 1 : 0;
  }
  o.detail << kept << "/100 perturbations of size 1e-3 t^2 stay embedded";
  o.require(kept == 100, "verdict changed");
}

// 10
void modulus_drift(Outcome& o) {
  const ModularParameter z = classify(0.25, 1.0);
  const double d1 = modular_distance(modulus_of(solve_flat(z, 1e-2).corrected).tau, z.z());
  const double d2 = modular_distance(modulus_of(solve_flat(z, 5e-3).corrected).tau, z.z());
  o.detail << "distance at t=1e-2 " << num(d1) << ", at 5e-3 " << num(d2) << ", factor " << num(d1 / d2);
  o.require(d1 / d2 >= 1.8, "factor below 1.8");
}

// 11
void collapse(Outcome& o) {
  struct Run {
    const char* name;
    ModularParameter zeta;
    Vec3 inward;
  };
  const std::vector<Run> runs{
      {"arc", classify(0.25, std::sqrt(7.0) / 4), Vec3(-0.75, std::sqrt(7.0) / 4, 0).normalized()},
      {"hex", classify(0.5, std::sqrt(3.0) / 2), Vec3(-1, 1, 0).normalized()}};
  for (const Run& run : runs) {
    const GoodPolygon q = good_polygon(run.zeta);
    const TriangleSet target = filled_polygon(q);
    double last = 1e300;
    o.detail << run.name << ":";
    for (double d : {0.2, 0.1, 0.05, 0.025, 0.0125, 0.006, 0.003}) {
      const ModularParameter z = classify(run.zeta.x + d * run.inward.x(), run.zeta.y + d * run.inward.y());
      const FlatSolveResult r = solve_flat(z, 1e-3 * boundary_distance(z.x, z.y));
      if (!r.converged()) {
        o.detail << " d=" << num(d) << " no-solve";
        continue;
      }
      last = hausdorff(normalize_similarity(mesh_triangles(r.corrected), q), target, 40).distance;
      o.detail << " " << num(last);
    }
    o.detail << "; ";
    o.require(last < 0.05, std::string(run.name) + " run ends at " + num(last));
  }
}

// 12
void boundary(Outcome& o) {
  double rect = 0.0, arc = 0.0, hex = 0.0;
  for (double y : {0.9, 1.0, 1.5, 2.0}) {
    const Hull h = convex_hull(golden_torus(classify(0.0, y)));
    o.require(h.planar && h.polygon.size() == 4, "rectangle shape at y=" + num(y));
    for (const Vec3& w : {Vec3(y * y, y, 0), Vec3(-y * y, y, 0), Vec3(-y * y, -y, 0), Vec3(y * y, -y, 0)}) {
      double best = 1e300;
      for (const Vec3& v : h.polygon) best = std::min(best, (v - w).norm());
      rect = std::max(rect, best);
    }
  }
  for (double x : {0.05, 0.2, 0.35, 0.49}) {
    const Torus8 p = golden_torus(classify(x, std::sqrt(2 * x - x * x)));
    for (auto [a, b] : {std::pair{0, 1}, {7, 6}, {1, 6}}) arc = std::max(arc, std::abs((p[a] - p[b]).norm() - std::sqrt(8 * x)));
  }
  const Hull h = convex_hull(golden_torus(classify(0.5, std::sqrt(3.0) / 2)));
  o.require(h.planar && h.polygon.size() == 3, "hex hull shape");
  for (size_t k = 0; k < h.polygon.size(); ++k) {
    hex = std::max(hex, std::abs((h.polygon[k] - h.polygon[(k + 1) % h.polygon.size()]).norm() - 2.0));
  }
  o.detail << "rectangle corner error " << num(rect) << ", arc length error " << num(arc) << ", triangle side error "
           << num(hex);
  o.require(rect <= 1e-12 && arc <= 1e-12 && hex <= 1e-12, "error above 1e-12");
}

struct Criterion {
  int id;
  const char* name;
  std::function<void(Outcome&)> run;
};

}  // namespace

int main(int argc, char** argv) {
  const bool strict = argc > 1 && std::strcmp(argv[1], "--strict") == 0;
  const std::vector<Criterion> all{
      {1, "golden flatness and isometry", golden_flatness},
      {2, "Gauss-Bonnet", gauss_bonnet},
      {3, "Jacobian determinant", jacobian},
      {4, "cubic flatness of the good path", cubic_flatness},
      {5, "45/6/19 order structure", order_structure},
      {6, "embedding certification", certification},
      {7, "clause-oracle equivalence", clause_oracle},
      {8, "Newton correction on the sweep grid", newton},
      {9, "robust embedding", robustness},
      {10, "modulus drift", modulus_drift},
      {11, "collapse to good polygons", collapse},
      {12, "boundary geometry", boundary},
  };
  int failed = 0;
  for (const Criterion& c : all) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += o.pass ? 0 : 1;
    std::printf("%s criterion %d: %s | %s (%.2fs)\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.str().c_str(),
                secs);
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria pass\n", static_cast<int>(all.size()) - failed, all.size());
  return strict && failed > 0 ? 1 : 0;
}
