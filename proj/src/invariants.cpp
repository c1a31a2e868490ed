#include "papertorus/invariants.hpp"

#include <chrono>
#include <cmath>
#include <numbers>
#include <set>
#include <sstream>

#include "papertorus/angles.hpp"
#include "papertorus/deformation.hpp"
#include "papertorus/line_arrangement.hpp"
#include "papertorus/report.hpp"
#include "papertorus/sampling.hpp"
#include "papertorus/service.hpp"

namespace papertorus {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Accumulates failures; a check passes when none were recorded.
class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    ++count_;
    if (!ok && failures_.size() < 4) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  void note(const std::string& s) { notes_ += (notes_.empty() ? "" : "; ") + s; }

  CheckResult result(const std::string& name) const {
    CheckResult r;
    r.name = name;
    r.passed = failed_ == 0;
    std::ostringstream d;
    d << count_ - failed_ << "/" << count_ << " ok";
    if (!notes_.empty()) d << "; " << notes_;
    for (const auto& f : failures_) d << "; FAIL " << f;
    r.detail = d.str();
    return r;
  }

 private:
  int count_ = 0;
  int failed_ = 0;
  std::vector<std::string> failures_;
  std::string notes_;
};

std::string fmt(double v) {
  std::ostringstream s;
  s.precision(3);
  s << v;
  return s.str();
}

std::string at(const ModularParameter& z) { return "z=(" + fmt(z.x) + "," + fmt(z.y) + ")"; }

std::vector<ModularParameter> sample_points() {
  return {classify(0.25, 1.0), classify(0.1, 1.3), classify(0.4, 1.2), classify(0.05, 1.05),
          classify(0.3, 1.8)};
}

struct Context {
  const SuiteOptions& opts;
  Rng rng;
  int scaled(int full, int quick) const { return opts.quick ? quick : full; }
};

using CheckFn = CheckResult (*)(Context&);

CheckResult triangulation(Context&) {
  Tally t;
  const std::set<Triangle> hand{{0, 1, 3}, {0, 1, 6}, {0, 2, 3}, {0, 2, 7}, {0, 5, 6}, {0, 5, 7},
                                {1, 2, 4}, {1, 2, 7}, {1, 3, 4}, {1, 6, 7}, {2, 3, 5}, {2, 4, 5},
                                {3, 4, 6}, {3, 5, 6}, {4, 5, 7}, {4, 6, 7}};
  const auto& tri = uniform_triangulation();
  t.expect(std::set<Triangle>(tri.triangles.begin(), tri.triangles.end()) == hand, "triangle set");
  t.expect(build_triangulation().triangles == tri.triangles, "deterministic construction");
  int counts[3] = {0, 0, 0};
  for (const auto& p : classify_pairs(tri)) ++counts[static_cast<int>(p.kind)];
  t.expect(counts[0] == 24 && counts[1] == 72 && counts[2] == 24, "pair counts");
  for (int v = 0; v < kVertexCount; ++v) t.expect(tri.degree(v) == 6, "degree 6");
  t.expect(embedding_blocks().size() == 288, "288 blocks");
  return t.result("triangulation");
}

CheckResult determinants(Context& c) {
  Tally t;
  for (int k = 0; k < c.scaled(100, 20); ++k) {
    const Torus8 p = random_torus(c.rng);
    const Vec3 shift = random_torus(c.rng)[0] * 10.0;
    Torus8 moved = p;
    for (auto& v : moved.vertices) v += shift;
    for (const Quadruple& q : quadruples()) {
      const double d = tetra_det(p, q);
      t.expect(std::abs(tetra_det(p, q[0], q[2], q[1], q[3]) + d) <= 1e-14, "swap antisymmetry");
      t.expect(std::abs(tetra_det(moved, q) - d) <= 1e-12, "translation invariance");
    }
  }
  return t.result("tetra_det symmetries");
}

CheckResult golden_grid(Context& c) {
  Tally t;
  const int n = c.scaled(15, 6);
  double worst = 0.0;
  for (const auto& z : interior_grid(n, n)) {
    const Torus8 p = golden_torus(z);
    t.expect(p.rho_asymmetry() <= 1e-15, "rho symmetry at " + at(z));
    t.expect(flatness(p) < 1e-12, "flatness at " + at(z));
    const IsometryReport iso = verify_isometry(z, 1e-12);
    t.expect(iso.passed, "isometry at " + at(z) + ": " + iso.message);
    worst = std::max(worst, iso.worst_error);
  }
  t.note("worst edge error " + fmt(worst));
  return t.result("golden flatness and isometry");
}

CheckResult boundary_geometry(Context&) {
  Tally t;
  for (double y : {0.9, 1.0, 1.5, 2.0}) {
    const Hull h = convex_hull(golden_torus(classify(0.0, y)));
    std::vector<Vec3> want{{y * y, y, 0}, {-y * y, y, 0}, {-y * y, -y, 0}, {y * y, -y, 0}};
    bool ok = h.planar && h.polygon.size() == 4;
    for (const Vec3& w : want) {
      double best = 1e300;
      for (const Vec3& v : h.polygon) best = std::min(best, (v - w).norm());
      ok = ok && best <= 1e-12;
    }
    t.expect(ok, "rectangle at y=" + fmt(y));
  }
  for (double x : {0.05, 0.2, 0.35, 0.49}) {
    const Torus8 p = golden_torus(classify(x, std::sqrt(2 * x - x * x)));
    const double want = std::sqrt(8 * x);
    for (auto [a, b] : {std::pair{0, 1}, {7, 6}, {1, 6}}) {
      t.expect(std::abs((p[a] - p[b]).norm() - want) <= 1e-12, "arc length at x=" + fmt(x));
    }
  }
  const Hull hex = convex_hull(golden_torus(classify(0.5, std::sqrt(3.0) / 2)));
  bool tri = hex.planar && hex.polygon.size() == 3;
  for (size_t k = 0; tri && k < 3; ++k) {
    tri = std::abs((hex.polygon[k] - hex.polygon[(k + 1) % 3]).norm() - 2.0) <= 1e-12;
  }
  t.expect(tri, "hex vertex triangle");
  return t.result("boundary geometry");
}

CheckResult cone_angle_sums(Context& c) {
  Tally t;
  double worst = 0.0;
  for (int k = 0; k < c.scaled(1000, 200); ++k) {
    const Torus8 p = random_rho_symmetric_torus(c.rng);
    const double e = std::abs(cone_angles(p).half_sum() - 4.0 * kTwoPi);
    worst = std::max(worst, e);
    t.expect(e <= 1e-10, "half sum");
  }
  const Eigen::Matrix3d r = Eigen::AngleAxisd(0.7, Vec3(1, 2, 3).normalized()).toRotationMatrix();
  for (int k = 0; k < c.scaled(50, 10); ++k) {
    const Torus8 p = random_rho_symmetric_torus(c.rng);
    const ConeAngles a = cone_angles(p);
    const ConeAngles b = cone_angles(p.transformed(r, Vec3(3, -1, 2)).scaled(2.5));
    for (int j = 0; j < kVertexCount; ++j) t.expect(std::abs(a[j] - b[j]) <= 1e-12, "rigid invariance");
  }
  t.note("worst Gauss-Bonnet error " + fmt(worst));
  return t.result("cone angle sums");
}

CheckResult jacobian(Context& c) {
  Tally t;
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst = 0.0;
  for (int k = 0; k < c.scaled(20, 5); ++k) {
    const ModularParameter z = random_interior_parameter(c.rng, 0.05);
    const double want = jacobian_determinant_closed_form(z.x, z.y);
    const double got = angle_jacobian(golden_torus(z)).determinant();
    const double rel = std::abs(got / want - 1.0);
    worst = std::max(worst, rel);
    t.expect(rel <= 1e-6, "closed form at " + at(z));
  }
  const ModularParameter z = classify(0.25, 1.0);
  const Torus8 p = golden_torus(z);
  const double want = jacobian_determinant_closed_form(z.x, z.y);
  const double h = 1e-2 * p.scale();
  const double e1 = std::abs(angle_jacobian(p, h).determinant() - want);
  const double e2 = std::abs(angle_jacobian(p, h / 2).determinant() - want);
  const double order = std::log2(e1 / e2);
  t.expect(order >= 1.8, "finite-difference order " + fmt(order));
  t.note("worst relative error " + fmt(worst) + ", order " + fmt(order));
  return t.result("angle Jacobian");
}

CheckResult deformation(Context&) {
  Tally t;
  for (const auto& z : sample_points()) {
    const double r = flatness(deform(z, 1e-2)) / flatness(deform(z, 5e-3));
    const double r2 = flatness(deform(z, 5e-3)) / flatness(deform(z, 2.5e-3));
    t.expect(r >= 7 && r <= 9 && r2 >= 7 && r2 <= 9, "cubic ratio " + fmt(r) + "," + fmt(r2) + " at " + at(z));
    double prev = 1e300;
    for (double s : {1e-2, 1e-3, 1e-4}) {
      const double q = flatness(deform(z, s)) / (s * s);
      t.expect(q < prev, "theta/t^2 decreasing at " + at(z));
      prev = q;
    }
    const Torus8 p = deform(z, 0.05);
    const Torus8 g = golden_torus(z);
    t.expect(p.rho_asymmetry() <= 1e-15, "rho symmetry");
    t.expect(p[3] == g[3] && p[4] == g[4], "P3, P4 fixed");
    t.expect(deform(z, 0.0)[0] == g[0], "deform at t = 0");
  }
  return t.result("special deformation");
}

CheckResult order2(Context&) {
  Tally t;
  std::vector<int> first;
  for (const auto& z : sample_points()) {
    const auto polys = det_polynomials(z);
    std::vector<int> lead;
    int counts[4] = {0, 0, 0, 0};
    for (const auto& p : polys) {
      lead.push_back(p.leading_index);
      ++counts[static_cast<int>(p.order)];
    }
    t.expect(counts[0] == 45 && counts[1] == 6 && counts[2] == 19, "45/6/19 at " + at(z));
    if (first.empty()) first = lead;
    t.expect(lead == first, "partition at " + at(z));
    t.expect(leading_sign_list(polys) == reference_sign_list(), "leading signs at " + at(z));
  }
  t.expect(embedding_clause(reference_sign_list()).yes(), "reference list is winning");
  return t.result("determinant order structure");
}

CheckResult arrangement(Context&) {
  Tally t;
  for (const auto& z : {classify(0.25, 1.0), classify(0.125, 1.375), classify(0.375, 1.375)}) {
    const LineArrangement a = order2_line_arrangement(z);
    const DeformationCoefficients d = deformation_coefficients(z);
    const CellReport cell = a.cell({d.x1, d.x2});
    t.expect(a.drift_dependent.size() == 19 && a.lines.size() == 7, "19 quadruples on 7 lines at " + at(z));
    t.expect(cell.bounded && cell.polygon.size() == 3, "triangular cell at " + at(z));
    t.expect(cell.strictly_inside && cell.winning, "winning interior at " + at(z));
  }
  return t.result("order-2 line arrangement");
}

CheckResult clause_vs_oracle(Context& c) {
  Tally t;
  int embedded = 0, skipped = 0;
  std::uniform_real_distribution<double> e(-6.0, -1.0);
  for (int k = 0; k < c.scaled(400, 100); ++k) {
    Torus8 p;
    if (k % 2 == 0) {
      p = random_rho_symmetric_torus(c.rng);
    } else {
      const ModularParameter z = random_interior_parameter(c.rng);
      p = jitter(deform(z, 0.125), std::pow(10.0, e(c.rng)), c.rng, k % 4 == 1);
    }
    const EmbeddingVerdict v = embedding_clause(p);
    const OracleReport o = exact_intersection_oracle(p);
    if (v.embedded == Embedded::Degenerate || o.verdict == OracleVerdict::Touching) {
      ++skipped;
      continue;
    }
    embedded += v.yes() ? 1 : 0;
    t.expect(v.yes() == (o.verdict == OracleVerdict::Embedded), "sample " + std::to_string(k) + ": " + o.detail);
  }
  t.note(std::to_string(embedded) + " embedded, " + std::to_string(skipped) + " degenerate skipped");
  return t.result("clause agrees with exact oracle");
}

CheckResult robustness(Context& c) {
  Tally t;
  const ModularParameter z = classify(0.25, 1.0);
  const double s = 1e-2;
  const Torus8 p = deform(z, s);
  const Eigen::Vector3d w = free_heights(p);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int k = 0; k < 100; ++k) {
    const Eigen::Vector3d d(u(c.rng), u(c.rng), u(c.rng));
    const Torus8 q = with_free_heights(p, w + 1e-3 * s * s * d);
    t.expect(embedding_clause(q).yes(), "perturbation " + std::to_string(k));
  }
  return t.result("robust embedding");
}

CheckResult newton(Context& c) {
  Tally t;
  std::vector<ModularParameter> pts = sample_points();
  for (int k = 0; k < c.scaled(10, 3); ++k) pts.push_back(random_interior_parameter(c.rng, 0.1));
  for (const auto& z : pts) {
    const FlatSolveResult r = solve_flat(z, 1e-2);
    t.expect(r.converged() && r.theta_final <= 1e-12, "convergence at " + at(z));
    const ConeAngles a = cone_angles(r.corrected);
    for (int j = 0; j < 4; ++j) t.expect(std::abs(a[j] - kTwoPi) <= 1e-12, "recomputed angle at " + at(z));
    t.expect(r.corrected.rho_asymmetry() <= 1e-15 && r.corrected.is_normalized(0.0), "symmetry at " + at(z));
    t.expect(sign_list(r.corrected) == sign_list(r.deformed), "sign list preserved at " + at(z));
    t.expect(r.matches_reference, "reference sign list at " + at(z));
  }
  const ModularParameter z = classify(0.25, 1.0);
  const double ratio = solve_flat(z, 1e-2).delta_norm() / solve_flat(z, 5e-3).delta_norm();
  t.expect(ratio >= 7 && ratio <= 9, "cubic correction ratio " + fmt(ratio));
  t.note("correction ratio " + fmt(ratio));
  return t.result("Newton correction");
}

CheckResult hull_pattern(Context& c) {
  Tally t;
  const int n = c.scaled(6, 3);
  const SweepSummary s = sweep(interior_grid(n, n), default_schedule());
  for (const auto& pt : s.points) {
    if (!pt.result.converged()) continue;
    const Hull h = convex_hull(pt.result.corrected);
    t.expect(h.on_hull_triangles == reference_hull_triangles(), "hull triangles at " + at(pt.result.z));
  }
  t.expect(s.converged == n * n, "sweep converged");
  return t.result("hull pattern");
}

CheckResult hausdorff_metric(Context& c) {
  Tally t;
  for (int k = 0; k < c.scaled(6, 2); ++k) {
    const TriangleSet a = mesh_triangles(random_torus(c.rng));
    const TriangleSet b = mesh_triangles(random_torus(c.rng));
    const TriangleSet d = mesh_triangles(random_torus(c.rng));
    const int n = 12;
    const double ab = hausdorff(a, b, n).distance;
    const double ba = hausdorff(b, a, n).distance;
    const double bd = hausdorff(b, d, n).distance;
    const double ad = hausdorff(a, d, n).distance;
    const double slack = 2.0 * 2.0 / n;  // sample spacing on unit-box triangles
    t.expect(std::abs(ab - ba) <= 1e-12, "symmetry");
    t.expect(ad <= ab + bd + slack, "triangle inequality");
    t.expect(hausdorff(a, a, n).distance <= 1e-12, "identity");
  }
  return t.result("Hausdorff metric");
}

CheckResult modulus(Context& c) {
  Tally t;
  double worst = 0.0;
  const int n = c.scaled(8, 4);
  for (const auto& z : interior_grid(n, n)) {
    const double d = modular_distance(modulus_of(golden_torus(z)).tau, z.z());
    worst = std::max(worst, d);
    t.expect(d <= 1e-10, "golden modulus at " + at(z));
  }
  t.note("worst distance " + fmt(worst));
  return t.result("modulus of golden tents");
}

CheckResult serialization(Context&) {
  Tally t;
  for (double s : {0.0, 1e-2}) {
    const TorusReport r = make_report(classify(0.25, 1.0), s);
    const std::string text = dump(to_json(r));
    const nlohmann::json back = nlohmann::json::parse(text);
    const Torus8 p = torus_from_json(back["vertices"]);
    bool exact = true;
    for (int j = 0; j < kVertexCount; ++j) exact = exact && p[j] == r.torus[j];
    t.expect(exact, "vertex round trip");
    t.expect(dump(back) == text, "text round trip");
  }
  const QueryParams q{{"x", "0.25"}, {"y", "1"}, {"t", "0.125"}};
  t.expect(handle_torus(q).body == handle_torus(q).body, "stateless torus endpoint");
  t.expect(handle_torus({{"x", "0.7"}, {"y", "1"}}).status == 400, "out of domain gives 400");
  return t.result("serialization and API");
}

struct Entry {
  const char* name;
  CheckFn fn;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> all{
      {"triangulation", triangulation},
      {"tetra_det symmetries", determinants},
      {"golden flatness and isometry", golden_grid},
      {"boundary geometry", boundary_geometry},
      {"cone angle sums", cone_angle_sums},
      {"angle Jacobian", jacobian},
      {"special deformation", deformation},
      {"determinant order structure", order2},
      {"order-2 line arrangement", arrangement},
      {"clause agrees with exact oracle", clause_vs_oracle},
      {"robust embedding", robustness},
      {"Newton correction", newton},
      {"hull pattern", hull_pattern},
      {"Hausdorff metric", hausdorff_metric},
      {"modulus of golden tents", modulus},
      {"serialization and API", serialization},
  };
  return all;
}

}  // namespace

std::vector<std::string> invariant_names() {
  std::vector<std::string> out;
  for (const auto& e : entries()) out.push_back(e.name);
  return out;
}

std::vector<CheckResult> run_invariant_suite(const SuiteOptions& opts,
                                             const std::function<void(const CheckResult&)>& on_result) {
  std::vector<CheckResult> out;
  Context ctx{opts, Rng(opts.seed)};
  for (const auto& e : entries()) {
    if (!opts.filter.empty() && std::string(e.name).find(opts.filter) == std::string::npos) continue;
    const auto start = std::chrono::steady_clock::now();
    CheckResult r;
    try {
      r = e.fn(ctx);
    } catch (const std::exception& ex) {
      r.name = e.name;
      r.passed = false;
      r.detail = std::string("exception: ") + ex.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (on_result) on_result(r);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace papertorus
