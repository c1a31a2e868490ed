#include <cmath>
#include <numbers>
#include <sstream>

#include "papertorus/report.hpp"
#include "papertorus/service.hpp"

#include <httplib.h>

namespace papertorus {

namespace {

class BadRequest : public std::invalid_argument {
 public:
  BadRequest(const std::string& what, nlohmann::json detail = nlohmann::json::object())
      : std::invalid_argument(what), detail(std::move(detail)) {}
  nlohmann::json detail;
};

double number(const QueryParams& q, const std::string& key, std::optional<double> fallback = std::nullopt) {
  auto it = q.find(key);
  if (it == q.end()) {
    if (fallback) return *fallback;
    throw BadRequest("missing parameter '" + key + "'");
  }
  try {
    size_t used = 0;
    const double v = std::stod(it->second, &used);
    if (used != it->second.size() || !std::isfinite(v)) throw std::invalid_argument(key);
    return v;
  } catch (const std::exception&) {
    throw BadRequest("parameter '" + key + "' is not a finite number");
  }
}

nlohmann::json region_diagnosis(double x, double y) {
  nlohmann::json d{{"x", x}, {"y", y}};
  if (!(y > 0.0)) {
    d["region"] = "invalid";
    d["violations"] = {"y > 0"};
    return d;
  }
  const ModularParameter z = classify(x, y);
  d["region"] = to_string(z.region);
  nlohmann::json violated = nlohmann::json::array();
  if (x < -kEdgeTolerance) violated.push_back("x >= 0");
  if (1.0 - 2.0 * x < -kEdgeTolerance) violated.push_back("1 - 2x >= 0");
  if (-2.0 * x + x * x + y * y < -kEdgeTolerance) violated.push_back("|z - 1| >= 1");
  d["violations"] = violated;
  return d;
}

ModularParameter parameter(const QueryParams& q) {
  const double x = number(q, "x");
  const double y = number(q, "y");
  if (!(y > 0.0)) throw BadRequest("y must be positive", region_diagnosis(x, y));
  const ModularParameter z = classify(x, y);
  if (!z.in_closed_domain()) throw BadRequest("parameter lies outside the domain", region_diagnosis(x, y));
  return z;
}

TorusReport report_for(const QueryParams& q) {
  const ModularParameter z = parameter(q);
  const double t = number(q, "t", 0.0);
  if (t < 0.0) throw BadRequest("t must be >= 0");
  auto it = q.find("mode");
  try {
    if (it == q.end()) return make_report(z, t);
    return make_report(z, t, parse_mode(it->second));
  } catch (const DomainError& e) {
    throw BadRequest(e.what(), region_diagnosis(z.x, z.y));
  } catch (const std::invalid_argument& e) {
    throw BadRequest(e.what());
  }
}

template <class F>
HttpResponse guarded(F&& body) {
  try {
    return {200, dump(body(), 1)};
  } catch (const BadRequest& e) {
    nlohmann::json j{{"error", e.what()}};
    if (!e.detail.empty()) j["diagnosis"] = e.detail;
    return {400, dump(j, 1)};
  } catch (const SolveFailure& e) {
    const auto& r = e.result();
    nlohmann::json j{{"error", e.what()},
                     {"status", to_string(r.status)},
                     {"theta_initial", r.theta_initial},
                     {"theta_final", r.theta_final},
                     {"trace", to_json(r.trace)}};
    return {422, dump(j, 1)};
  } catch (const GeometryError& e) {
    return {422, dump(nlohmann::json{{"error", e.what()}, {"trace", nlohmann::json::array()}}, 1)};
  } catch (const std::invalid_argument& e) {
    return {400, dump(nlohmann::json{{"error", e.what()}}, 1)};
  }
}

}  // namespace

HttpResponse handle_domain() {
  return guarded([] {
    constexpr double y_max = 3.0;
    const double hex_y = std::sqrt(3.0) / 2.0;
    nlohmann::json arc = nlohmann::json::array();
    constexpr int n = 64;
    for (int k = 0; k <= n; ++k) {
      const double x = 0.5 * k / n;
      arc.push_back({x, std::sqrt(std::max(0.0, 2.0 * x - x * x))});
    }
    return nlohmann::json{
        {"left_edge", {{0.0, 0.0}, {0.0, y_max}}},
        {"right_edge", {{0.5, hex_y}, {0.5, y_max}}},
        {"arc", arc},
        {"hex_vertex", {0.5, hex_y}},
        {"square_point", {0.0, 1.0}},
        {"cusps", {"0", "infinity"}},
        {"y_max", y_max},
        {"interior", "x > 0, 1 - 2x > 0, x^2 + y^2 - 2x > 0"}};
  });
}

HttpResponse handle_torus(const QueryParams& q) {
  return guarded([&] { return to_json(report_for(q)); });
}

HttpResponse handle_slice(const QueryParams& q) {
  return guarded([&] {
    const TorusReport r = report_for(q);
    auto it = q.find("plane");
    SlicePlane plane = SlicePlane::XZ;
    if (it != q.end()) {
      try {
        plane = parse_plane(it->second);
      } catch (const std::invalid_argument& e) {
        throw BadRequest(e.what());
      }
    }
    const double offset = number(q, "offset", 0.0);
    nlohmann::json segs = nlohmann::json::array();
    for (const SliceSegment& s : slice(r.torus, plane, offset)) {
      segs.push_back({{"triangle", s.triangle},
                      {"a", {s.a.x(), s.a.y(), s.a.z()}},
                      {"b", {s.b.x(), s.b.y(), s.b.z()}}});
    }
    return nlohmann::json{{"z", {{"x", r.z.x}, {"y", r.z.y}, {"region", to_string(r.z.region)}}},
                          {"t", r.t},
                          {"mode", to_string(r.mode)},
                          {"plane", to_string(plane)},
                          {"offset", offset},
                          {"segments", segs}};
  });
}

HttpResponse handle_probe(const QueryParams& q) {
  return guarded([&] {
    const ModularParameter z = parameter(q);
    if (!z.interior()) throw BadRequest("probe needs an interior parameter", region_diagnosis(z.x, z.y));
    std::vector<double> ts{1.0 / 8, 1.0 / 16, 1.0 / 32, 1.0 / 64};
    if (auto it = q.find("ts"); it != q.end()) {
      ts.clear();
      std::stringstream in(it->second);
      std::string item;
      while (std::getline(in, item, ',')) {
        const double t = number({{"ts", item}}, "ts");
        if (!(t > 0.0)) throw BadRequest("probe times must be positive");
        ts.push_back(t);
      }
      if (ts.empty() || ts.size() > 32) throw BadRequest("ts must list 1 to 32 times");
    }
    return to_json(convergence_probe(z, ts));
  });
}

bool serve(const std::string& host, int port, const std::string& static_dir) {
  httplib::Server server;
  auto bind = [&](const std::string& path, auto handler) {
    server.Get(path, [handler](const httplib::Request& req, httplib::Response& res) {
      QueryParams q;
      for (const auto& [k, v] : req.params) q[k] = v;
      const HttpResponse r = handler(q);
      res.status = r.status;
      res.set_header("Cache-Control", "public, max-age=3600");
      res.set_content(r.body, "application/json");
    });
  };
  bind("/api/domain", [](const QueryParams&) { return handle_domain(); });
  bind("/api/torus", handle_torus);
  bind("/api/slice", handle_slice);
  bind("/api/probe", handle_probe);
  if (!static_dir.empty() && !server.set_mount_point("/", static_dir)) return false;
  return server.listen(host, port);
}

}  // namespace papertorus
