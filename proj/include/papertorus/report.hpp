#pragma once

// TorusReport: everything the CLI and HTTP service say about one torus,
// with a JSON form whose floats survive a round trip bit for bit.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "papertorus/embedding.hpp"
#include "papertorus/flatten.hpp"
#include "papertorus/golden.hpp"
#include "papertorus/shape.hpp"

namespace papertorus {

enum class TorusMode { Golden, Deformed, Solved };

const char* to_string(TorusMode m);
/// "golden", "deformed" or "solved"; throws std::invalid_argument.
TorusMode parse_mode(const std::string& text);

struct SolverInfo {
  std::string status;
  int iterations = 0;
  Eigen::Vector3d delta = Eigen::Vector3d::Zero();
  double theta_initial = 0.0;
  std::vector<NewtonStep> trace;
};

struct TorusReport {
  ModularParameter z;
  double t = 0.0;
  TorusMode mode = TorusMode::Golden;
  Torus8 torus;
  std::optional<std::array<double, kVertexCount>> cone_angles;  // absent on collapsed edges
  std::optional<double> theta;
  std::string embedded;            // yes | no | degenerate
  std::string sign_list;           // '+', '-', '0' per quadruple
  bool matches_reference = false;
  Hull hull;
  std::optional<GoodPolygon> good_polygon;  // boundary parameters only
  std::optional<ModulusEstimate> modulus;
  std::optional<SolverInfo> solver;
  std::vector<std::string> notes;  // coincident vertices and similar flags
};

/// Thrown when the requested torus needs a Newton solve that fails.
class SolveFailure : public GeometryError {
 public:
  SolveFailure(const std::string& what, FlatSolveResult result)
      : GeometryError(what), result_(std::move(result)) {}
  const FlatSolveResult& result() const { return result_; }

 private:
  FlatSolveResult result_;
};

/// Builds the report for golden_torus (t = 0 or mode golden), deform, or
/// solve_flat. Throws DomainError on out-of-domain input and SolveFailure
/// when Newton does not converge.
TorusReport make_report(const ModularParameter& z, double t, TorusMode mode);
TorusReport make_report(const ModularParameter& z, double t);  // golden if t = 0, else solved

nlohmann::json to_json(const TorusReport& r);
nlohmann::json to_json(const FlatSolveResult& r);
nlohmann::json to_json(const ProbeTable& table);
nlohmann::json to_json(const std::vector<NewtonStep>& trace);
nlohmann::json to_json(const Torus8& p);
nlohmann::json to_json(const Hull& h);
nlohmann::json to_json(const GoodPolygon& q);
Torus8 torus_from_json(const nlohmann::json& j);

/// JSON text with every float printed to 17 significant digits (so a parse
/// reproduces it exactly). indent < 0 gives one line.
std::string dump(const nlohmann::json& j, int indent = -1);

/// Wavefront OBJ with 17-digit coordinates and 1-based faces.
std::string to_obj(const Torus8& p, const std::string& comment = "");

/// One line per sweep point.
std::string sweep_json_lines(const SweepSummary& s);

}  // namespace papertorus
