#pragma once

// Plane slices of the mesh and the stateless HTTP/JSON API.

#include <map>
#include <string>
#include <vector>

#include "papertorus/core.hpp"

namespace papertorus {

enum class SlicePlane { XY, XZ, YZ };

/// "XY", "XZ" or "YZ"; throws std::invalid_argument.
SlicePlane parse_plane(const std::string& text);
const char* to_string(SlicePlane p);

struct SliceSegment {
  int triangle = -1;
  Vec3 a = Vec3::Zero();
  Vec3 b = Vec3::Zero();
};

/// Each triangle clipped against the plane on its own; triangles lying in
/// the plane contribute their three edges. Segments are unordered.
std::vector<SliceSegment> slice(const Torus8& p, SlicePlane plane, double offset);

struct HttpResponse {
  int status = 200;
  std::string body;  // JSON
};

using QueryParams = std::map<std::string, std::string>;

HttpResponse handle_domain();
HttpResponse handle_torus(const QueryParams& q);
HttpResponse handle_slice(const QueryParams& q);
HttpResponse handle_probe(const QueryParams& q);

/// Blocks serving the API (and static files from static_dir when given).
/// Returns false if the port could not be bound.
bool serve(const std::string& host, int port, const std::string& static_dir = "");

}  // namespace papertorus
