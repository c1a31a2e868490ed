#include <algorithm>

#include "papertorus/service.hpp"

namespace papertorus {

SlicePlane parse_plane(const std::string& text) {
  if (text == "XY") return SlicePlane::XY;
  if (text == "XZ") return SlicePlane::XZ;
  if (text == "YZ") return SlicePlane::YZ;
  throw std::invalid_argument("plane must be XY, XZ or YZ");
}

const char* to_string(SlicePlane p) {
  switch (p) {
    case SlicePlane::XY: return "XY";
    case SlicePlane::XZ: return "XZ";
    case SlicePlane::YZ: return "YZ";
  }
  return "?";
}

std::vector<SliceSegment> slice(const Torus8& p, SlicePlane plane, double offset) {
  const int axis = plane == SlicePlane::XY ? 2 : plane == SlicePlane::XZ ? 1 : 0;
  const auto& tri = uniform_triangulation();
  std::vector<SliceSegment> out;
  for (int i = 0; i < kTriangleCount; ++i) {
    const Triangle& t = tri.triangles[static_cast<size_t>(i)];
    std::array<Vec3, 3> v{p[t[0]], p[t[1]], p[t[2]]};
    std::array<double, 3> d;
    for (size_t k = 0; k < 3; ++k) d[k] = v[k](axis) - offset;

    if (d[0] == 0.0 && d[1] == 0.0 && d[2] == 0.0) {
      for (size_t k = 0; k < 3; ++k) out.push_back({i, v[k], v[(k + 1) % 3]});
      continue;
    }
    std::vector<Vec3> hits;
    auto add = [&](const Vec3& q) {
      if (std::find(hits.begin(), hits.end(), q) == hits.end()) hits.push_back(q);
    };
    for (size_t k = 0; k < 3; ++k) {
      const size_t n = (k + 1) % 3;
      if (d[k] == 0.0) add(v[k]);
      if ((d[k] < 0.0 && d[n] > 0.0) || (d[k] > 0.0 && d[n] < 0.0)) {
        Vec3 q = v[k] + (d[k] / (d[k] - d[n])) * (v[n] - v[k]);
        q(axis) = offset;
        add(q);
      }
    }
    if (hits.size() == 2) out.push_back({i, hits[0], hits[1]});
  }
  return out;
}

}  // namespace papertorus
