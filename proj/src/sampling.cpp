#include "papertorus/sampling.hpp"

namespace papertorus {

namespace {

Vec3 uniform_point(Rng& rng, double a) {
  std::uniform_real_distribution<double> u(-a, a);
  const double x = u(rng), y = u(rng), z = u(rng);
  return {x, y, z};
}

}  // namespace

Torus8 random_rho_symmetric_torus(Rng& rng) {
  Torus8 p;
  for (int j = 0; j < 4; ++j) p[j] = uniform_point(rng, 1.0);
  p.symmetrize();
  return p;
}

Torus8 random_torus(Rng& rng) {
  Torus8 p;
  for (int j = 0; j < kVertexCount; ++j) p[j] = uniform_point(rng, 1.0);
  return p;
}

ModularParameter random_interior_parameter(Rng& rng, double margin) {
  std::uniform_real_distribution<double> ux(0.0, 0.5), uy(0.85, 2.5);
  for (;;) {
    const double x = ux(rng), y = uy(rng);
    if (boundary_distance(x, y) >= margin) return classify(x, y);
  }
}

Torus8 jitter(const Torus8& p, double amplitude, Rng& rng, bool keep_symmetry) {
  Torus8 q = p;
  const int n = keep_symmetry ? 4 : kVertexCount;
  for (int j = 0; j < n; ++j) q[j] += uniform_point(rng, amplitude);
  if (keep_symmetry) q.symmetrize();
  return q;
}

}  // namespace papertorus
