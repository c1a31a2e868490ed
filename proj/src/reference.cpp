#include <algorithm>

#include <json.hpp>

#include "papertorus/embedding.hpp"

namespace papertorus {

Torus8 pup_torus() {
  // Heights carry 32 digits in the source table; doubles keep 17 of them.
  constexpr double z1 = 0.02066632666984436159899233718861;
  constexpr double z2 = 0.00485312770651928720409074796169;
  constexpr double z3 = 0.00822752145561371645579125478661;
  Torus8 p;
  p[0] = {+0.64, -0.20, 0.0};
  p[1] = {-1.09, +0.38, z1};
  p[2] = {-0.25, +0.51, z2};
  p[3] = {+0.78, +0.62, z3};
  p[4] = {-0.78, -0.62, z3};
  p[5] = {+0.25, -0.51, z2};
  p[6] = {+1.09, -0.38, z1};
  p[7] = {-0.64, +0.20, 0.0};
  return p;
}

const SignList& reference_sign_list() {
  // Leading signs of the special deformation at z = 1/4 + i, in quadruples()
  // order. data/lambda_ref.json carries the same list.
  static const SignList table = SignList::parse(
      "++++-+++---+-+++++---+-++--+-++----+++-------------+++++-----+++++++++");
  return table;
}

const std::vector<int>& reference_hull_triangles() {
  // (0,5,6) (1,2,4) (1,2,7) (2,3,5) (2,4,5) (3,5,6): closed under j -> 7 - j.
  static const std::vector<int> hull{4, 6, 7, 10, 11, 13};
  return hull;
}

namespace {

// {"version": 1, "<key>": [...]} with one compact row per line.
std::string rows_document(const std::string& key, const nlohmann::json& rows) {
  std::string out = "{\n \"version\": 1,\n \"" + key + "\": [\n";
  for (size_t i = 0; i < rows.size(); ++i) {
    out += "  " + rows[i].dump() + (i + 1 < rows.size() ? ",\n" : "\n");
  }
  return out + " ]\n}\n";
}

}  // namespace

std::string sign_list_json(const SignList& signs) {
  nlohmann::json entries = nlohmann::json::array();
  for (int i = 0; i < kQuadrupleCount; ++i) {
    const Quadruple& q = quadruples()[static_cast<size_t>(i)];
    entries.push_back({q[0], q[1], q[2], q[3], to_int(signs[i])});
  }
  return rows_document("entries", entries);
}

SignList parse_sign_list_json(const std::string& text) {
  const auto doc = nlohmann::json::parse(text);
  if (doc.at("version").get<int>() != 1) throw std::invalid_argument("unsupported sign list version");
  const auto& entries = doc.at("entries");
  if (entries.size() != kQuadrupleCount) throw std::invalid_argument("sign list needs 70 entries");
  SignList out;
  for (const auto& e : entries) {
    const Quadruple q{e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<int>(), e.at(3).get<int>()};
    const int s = e.at(4).get<int>();
    if (s < -1 || s > 1) throw std::invalid_argument("sign must be -1, 0 or 1");
    out[quadruple_index(q)] = static_cast<Sign>(s);
  }
  return out;
}

std::string hull_pattern_json(const std::vector<int>& triangles) {
  nlohmann::json list = nlohmann::json::array();
  for (int i : triangles) {
    const Triangle& t = uniform_triangulation().triangles.at(static_cast<size_t>(i));
    list.push_back({t[0], t[1], t[2]});
  }
  return rows_document("triangles", list);
}

std::vector<int> parse_hull_pattern_json(const std::string& text) {
  const auto doc = nlohmann::json::parse(text);
  if (doc.at("version").get<int>() != 1) throw std::invalid_argument("unsupported hull pattern version");
  std::vector<int> out;
  for (const auto& t : doc.at("triangles")) {
    const int idx = uniform_triangulation().find_triangle(t.at(0).get<int>(), t.at(1).get<int>(),
                                                          t.at(2).get<int>());
    if (idx < 0) throw std::invalid_argument("hull pattern names a non-triangle");
    out.push_back(idx);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace papertorus
