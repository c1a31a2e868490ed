#pragma once

// Seeded random tori for property checks.

#include <random>

#include "papertorus/core.hpp"
#include "papertorus/golden.hpp"

namespace papertorus {

using Rng = std::mt19937_64;

/// rho-symmetric torus with vertices 0..3 uniform in [-1, 1]^3.
Torus8 random_rho_symmetric_torus(Rng& rng);

/// Unstructured torus with all 8 vertices uniform in [-1, 1]^3.
Torus8 random_torus(Rng& rng);

/// Uniform interior parameter with boundary distance at least margin.
ModularParameter random_interior_parameter(Rng& rng, double margin = 0.02);

/// Adds independent uniform noise in [-amplitude, amplitude] to every
/// coordinate, keeping rho symmetry when the input has it.
Torus8 jitter(const Torus8& p, double amplitude, Rng& rng, bool keep_symmetry = true);

}  // namespace papertorus
