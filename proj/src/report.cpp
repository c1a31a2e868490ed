#include "papertorus/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "papertorus/angles.hpp"
#include "papertorus/deformation.hpp"

namespace papertorus {

const char* to_string(TorusMode m) {
  switch (m) {
    case TorusMode::Golden: return "golden";
    case TorusMode::Deformed: return "deformed";
    case TorusMode::Solved: return "solved";
  }
  return "?";
}

TorusMode parse_mode(const std::string& text) {
  if (text == "golden") return TorusMode::Golden;
  if (text == "deformed") return TorusMode::Deformed;
  if (text == "solved") return TorusMode::Solved;
  throw std::invalid_argument("mode must be golden, deformed or solved");
}

namespace {

void describe(TorusReport& r) {
  const Torus8& p = r.torus;
  const double s = std::max(p.scale(), 1e-300);
  for (int a = 0; a < kVertexCount; ++a)
    for (int b = a + 1; b < kVertexCount; ++b)
      if ((p[a] - p[b]).norm() <= 1e-12 * s) r.notes.push_back("P" + std::to_string(a) + " = P" + std::to_string(b));

  try {
    const ConeAngles angles = cone_angles(p);
    r.cone_angles = angles.theta;
    r.theta = flatness(p);
  } catch (const GeometryError& e) {
    r.notes.push_back(e.what());
  }
  const SignList signs = sign_list(p);
  r.sign_list = signs.str();
  r.embedded = to_string(embedding_clause(signs).embedded);
  r.matches_reference = signs == reference_sign_list();

  r.hull = convex_hull(p);
  if (!r.z.interior() && r.mode == TorusMode::Golden) {
    try {
      r.good_polygon = good_polygon(r.z);
    } catch (const DomainError&) {
    }
  }

  if (r.theta && *r.theta <= 1e-9) {
    try {
      r.modulus = modulus_of(p);
    } catch (const GeometryError& e) {
      r.notes.push_back(std::string("modulus unavailable: ") + e.what());
    }
  }
}

}  // namespace

TorusReport make_report(const ModularParameter& z, double t, TorusMode mode) {
  if (!z.in_closed_domain()) {
    throw DomainError(std::string("parameter lies outside the domain (") + to_string(z.region) + ")");
  }
  if (!(t >= 0.0)) throw DomainError("t must be >= 0");
  if (t == 0.0) mode = TorusMode::Golden;

  TorusReport r;
  r.z = z;
  r.t = mode == TorusMode::Golden ? 0.0 : t;
  r.mode = mode;
  switch (mode) {
    case TorusMode::Golden:
      r.torus = golden_torus(z);
      break;
    case TorusMode::Deformed:
      if (!z.interior()) throw DomainError(std::string("deformation needs an interior parameter, got ") + to_string(z.region));
      r.torus = deform(z, t);
      break;
    case TorusMode::Solved: {
      FlatSolveResult s = solve_flat(z, t);
      if (!s.converged()) {
        throw SolveFailure(std::string("Newton correction failed: ") + to_string(s.status), std::move(s));
      }
      r.torus = s.corrected;
      r.solver = SolverInfo{to_string(s.status), s.iterations, s.delta, s.theta_initial, s.trace};
      break;
    }
  }
  describe(r);
  return r;
}

TorusReport make_report(const ModularParameter& z, double t) {
  return make_report(z, t, t == 0.0 ? TorusMode::Golden : TorusMode::Solved);
}

nlohmann::json to_json(const Torus8& p) {
  nlohmann::json v = nlohmann::json::array();
  for (const auto& q : p.vertices) v.push_back({q.x(), q.y(), q.z()});
  return v;
}

namespace {

nlohmann::json point(const Vec3& v) { return {v.x(), v.y(), v.z()}; }

}  // namespace

nlohmann::json to_json(const Hull& h) {
  nlohmann::json j{{"planar", h.planar}, {"triangles", h.on_hull_triangles}};
  nlohmann::json facets = nlohmann::json::array();
  for (const HullFacet& f : h.facets) {
    facets.push_back({{"normal", point(f.normal)}, {"offset", f.offset}, {"points", f.points}});
  }
  j["facets"] = facets;
  nlohmann::json polygon = nlohmann::json::array();
  for (const Vec3& v : h.polygon) polygon.push_back(point(v));
  j["polygon"] = polygon;
  j["plane_normal"] = h.planar ? point(h.plane_normal) : nlohmann::json(nullptr);
  return j;
}

nlohmann::json to_json(const GoodPolygon& q) {
  nlohmann::json verts = nlohmann::json::array();
  for (const Vec3& v : q.vertices) verts.push_back(point(v));
  return {{"kind", to_string(q.kind)}, {"vertices", verts}, {"sides", q.sides()}};
}

Torus8 torus_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != kVertexCount) throw std::invalid_argument("torus needs 8 vertices");
  Torus8 p;
  for (int k = 0; k < kVertexCount; ++k) {
    const auto& row = j.at(static_cast<size_t>(k));
    p[k] = {row.at(0).get<double>(), row.at(1).get<double>(), row.at(2).get<double>()};
  }
  return p;
}

nlohmann::json to_json(const std::vector<NewtonStep>& trace) {
  nlohmann::json out = nlohmann::json::array();
  for (const NewtonStep& s : trace) {
    out.push_back({{"iteration", s.iteration}, {"theta", s.theta}, {"step_scale", s.step_scale},
                   {"jacobian_det", s.jacobian_det}});
  }
  return out;
}

nlohmann::json to_json(const TorusReport& r) {
  nlohmann::json j;
  j["z"] = {{"x", r.z.x}, {"y", r.z.y}, {"region", to_string(r.z.region)}};
  j["t"] = r.t;
  j["mode"] = to_string(r.mode);
  j["vertices"] = to_json(r.torus);
  nlohmann::json tris = nlohmann::json::array();
  for (const Triangle& t : uniform_triangulation().triangles) tris.push_back({t[0], t[1], t[2]});
  j["triangles"] = tris;
  j["cone_angles"] = r.cone_angles ? nlohmann::json(*r.cone_angles) : nlohmann::json(nullptr);
  j["theta"] = r.theta ? nlohmann::json(*r.theta) : nlohmann::json(nullptr);
  j["embedded"] = r.embedded;
  j["sign_list"] = r.sign_list;
  j["matches_reference"] = r.matches_reference;
  j["hull"] = to_json(r.hull);
  j["good_polygon"] = r.good_polygon ? to_json(*r.good_polygon) : nlohmann::json(nullptr);
  if (r.modulus) {
    j["modulus"] = {{"tau", {r.modulus->tau.real(), r.modulus->tau.imag()}},
                    {"generator1", {r.modulus->generator1.real(), r.modulus->generator1.imag()}},
                    {"generator2", {r.modulus->generator2.real(), r.modulus->generator2.imag()}},
                    {"residual", r.modulus->residual},
                    {"convention", "SL2(Z) reduced; comparisons also allow tau -> -conj(tau)"}};
  } else {
    j["modulus"] = nullptr;
  }
  if (r.solver) {
    j["solver"] = {{"status", r.solver->status},
                   {"iterations", r.solver->iterations},
                   {"delta", {r.solver->delta(0), r.solver->delta(1), r.solver->delta(2)}},
                   {"theta_initial", r.solver->theta_initial},
                   {"trace", to_json(r.solver->trace)}};
  } else {
    j["solver"] = nullptr;
  }
  j["notes"] = r.notes;
  return j;
}

nlohmann::json to_json(const FlatSolveResult& r) {
  return {{"z", {{"x", r.z.x}, {"y", r.z.y}, {"region", to_string(r.z.region)}}},
          {"t", r.t},
          {"status", to_string(r.status)},
          {"iterations", r.iterations},
          {"theta_initial", r.theta_initial},
          {"theta_final", r.theta_final},
          {"delta", {r.delta(0), r.delta(1), r.delta(2)}},
          {"embedded", to_string(r.embedded)},
          {"matches_reference", r.matches_reference},
          {"vertices", to_json(r.corrected)},
          {"trace", to_json(r.trace)}};
}

nlohmann::json to_json(const ProbeTable& table) {
  nlohmann::json rows = nlohmann::json::array();
  for (const ProbeRow& row : table.rows) {
    rows.push_back({{"t", row.t},
                    {"theta_deformed", row.theta_deformed},
                    {"delta_norm", row.delta_norm},
                    {"iterations", row.iterations},
                    {"converged", row.converged},
                    {"embedded", row.embedded},
                    {"error", row.error}});
  }
  auto num = [](double v) { return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr); };
  return {{"z", {{"x", table.z.x}, {"y", table.z.y}, {"region", to_string(table.z.region)}}},
          {"rows", rows},
          {"theta_slope", num(table.theta_slope)},
          {"delta_slope", num(table.delta_slope)}};
}

namespace {

std::string format_double(double v) {
  if (!std::isfinite(v)) return "null";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%#.17g", v);
  return buf;
}

void emit(std::ostringstream& out, const nlohmann::json& j, int indent, int depth) {
  const bool pretty = indent >= 0;
  auto newline = [&](int d) {
    if (pretty) out << '\n' << std::string(static_cast<size_t>(indent * d), ' ');
  };
  switch (j.type()) {
    case nlohmann::json::value_t::object: {
      if (j.empty()) {
        out << "{}";
        return;
      }
      out << '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out << ',';
        first = false;
        newline(depth + 1);
        out << nlohmann::json(it.key()).dump() << (pretty ? ": " : ":");
        emit(out, it.value(), indent, depth + 1);
      }
      newline(depth);
      out << '}';
      return;
    }
    case nlohmann::json::value_t::array: {
      if (j.empty()) {
        out << "[]";
        return;
      }
      out << '[';
      bool first = true;
      for (const auto& v : j) {
        if (!first) out << (pretty ? ", " : ",");
        first = false;
        emit(out, v, -1, depth + 1);  // arrays stay on one line
      }
      out << ']';
      return;
    }
    case nlohmann::json::value_t::number_float:
      out << format_double(j.get<double>());
      return;
    default:
      out << j.dump();
  }
}

}  // namespace

std::string dump(const nlohmann::json& j, int indent) {
  std::ostringstream out;
  emit(out, j, indent, 0);
  return out.str();
}

std::string to_obj(const Torus8& p, const std::string& comment) {
  std::ostringstream out;
  if (!comment.empty()) out << "# " << comment << '\n';
  for (const auto& v : p.vertices) {
    out << "v " << format_double(v.x()) << ' ' << format_double(v.y()) << ' ' << format_double(v.z()) << '\n';
  }
  for (const Triangle& t : uniform_triangulation().triangles) {
    out << "f " << t[0] + 1 << ' ' << t[1] + 1 << ' ' << t[2] + 1 << '\n';
  }
  return out.str();
}

std::string sweep_json_lines(const SweepSummary& s) {
  std::ostringstream out;
  for (const SweepPoint& pt : s.points) {
    nlohmann::json j = to_json(pt.result);
    if (!pt.error.empty()) j["error"] = pt.error;
    out << dump(j) << '\n';
  }
  return out.str();
}

}  // namespace papertorus
