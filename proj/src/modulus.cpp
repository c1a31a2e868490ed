#include <cmath>
#include <limits>
#include <map>
#include <optional>

#include "papertorus/angles.hpp"
#include "papertorus/shape.hpp"

namespace papertorus {

namespace {

// The universal cover of the triangulation is the integer lattice with
// vertex (i, j) labelled i + 2j mod 8. Cover triangles at p are
// (p, p+e1, p+e1+e2) and (p, p+e1+e2, p+e2), both counterclockwise.
// Deck translations are generated by (8, 0) and (-2, 1).
constexpr int kILo = -6, kIHi = 12, kJLo = -2, kJHi = 4;

int label(int i, int j) { return (((i + 2 * j) % 8) + 8) % 8; }

struct Cover {
  std::map<std::pair<int, int>, Complex> pos;

  std::optional<Complex> at(int i, int j) const {
    auto it = pos.find({i, j});
    if (it == pos.end()) return std::nullopt;
    return it->second;
  }
};

using CoverTriangle = std::array<std::pair<int, int>, 3>;

std::vector<CoverTriangle> cover_triangles() {
  std::vector<CoverTriangle> out;
  for (int i = kILo; i < kIHi; ++i) {
    for (int j = kJLo; j < kJHi; ++j) {
      out.push_back({{{i, j}, {i + 1, j}, {i + 1, j + 1}}});
      out.push_back({{{i, j}, {i + 1, j + 1}, {i, j + 1}}});
    }
  }
  return out;
}

}  // namespace

ModulusEstimate modulus_of(const Torus8& p, double tol) {
  const double theta = flatness(p);
  if (theta > tol) {
    throw NotFlatError("modulus needs a flat torus; flatness defect is " + std::to_string(theta));
  }
  auto length = [&](std::pair<int, int> a, std::pair<int, int> b) {
    return (p[label(a.first, a.second)] - p[label(b.first, b.second)]).norm();
  };

  Cover cover;
  cover.pos[{0, 0}] = 0.0;
  cover.pos[{1, 0}] = length({0, 0}, {1, 0});
  const auto tris = cover_triangles();
  for (bool progress = true; progress;) {
    progress = false;
    for (const CoverTriangle& t : tris) {
      int missing = -1, count = 0;
      for (int k = 0; k < 3; ++k) {
        if (cover.at(t[k].first, t[k].second)) ++count;
        else missing = k;
      }
      if (count != 2) continue;
      const auto v0 = t[static_cast<size_t>(missing)];
      const auto v1 = t[static_cast<size_t>((missing + 1) % 3)];
      const auto v2 = t[static_cast<size_t>((missing + 2) % 3)];
      const Complex a = *cover.at(v1.first, v1.second);
      const Complex b = *cover.at(v2.first, v2.second);
      const double base = std::abs(b - a);
      const double d1 = length(v1, v0);
      const double d2 = length(v2, v0);
      const double along = (d1 * d1 - d2 * d2 + base * base) / (2.0 * base);
      const double height = std::sqrt(std::max(0.0, d1 * d1 - along * along));
      const Complex u = (b - a) / base;
      cover.pos[v0] = a + along * u + height * Complex(0.0, 1.0) * u;
      progress = true;
    }
  }

  ModulusEstimate est;
  const Complex origin = *cover.at(0, 0);
  const auto g1 = cover.at(8, 0);
  const auto g2 = cover.at(-2, 1);
  if (!g1 || !g2) throw GeometryError("developing map did not reach the deck generators");
  est.generator1 = *g1 - origin;
  est.generator2 = *g2 - origin;

  double residual = 0.0;
  for (const CoverTriangle& t : tris) {
    std::array<Complex, 3> z;
    for (size_t k = 0; k < 3; ++k) z[k] = *cover.at(t[k].first, t[k].second);
    for (size_t k = 0; k < 3; ++k) {
      residual = std::max(residual, std::abs(std::abs(z[(k + 1) % 3] - z[k]) - length(t[k], t[(k + 1) % 3])));
    }
    if ((std::conj(z[1] - z[0]) * (z[2] - z[0])).imag() <= 0.0) residual = std::numeric_limits<double>::infinity();
  }
  for (const auto& [key, value] : cover.pos) {
    if (auto shifted = cover.at(key.first + 8, key.second)) {
      residual = std::max(residual, std::abs(*shifted - value - est.generator1));
    }
    if (auto shifted = cover.at(key.first - 2, key.second + 1)) {
      residual = std::max(residual, std::abs(*shifted - value - est.generator2));
    }
  }
  est.residual = residual;
  if (residual > std::sqrt(tol) * std::max(1.0, p.scale())) {
    throw GeometryError("developing map is inconsistent; residual " + std::to_string(residual));
  }
  est.tau = reduce_lattice(est.generator1, est.generator2);
  return est;
}

Complex reduce_lattice(Complex a, Complex b) {
  if (std::abs(a) == 0.0 || std::abs(b) == 0.0 || (std::conj(a) * b).imag() == 0.0) {
    throw GeometryError("lattice basis is degenerate");
  }
  for (int guard = 0; guard < 1000; ++guard) {
    if (std::abs(b) < std::abs(a)) std::swap(a, b);
    const double mu = std::round((std::conj(a) * b).real() / std::norm(a));
    if (mu == 0.0) break;
    b -= mu * a;
  }
  Complex tau = b / a;
  if (tau.imag() < 0.0) tau = -tau;
  return tau;
}

Complex reduce_modulus(Complex tau) { return reduce_lattice(1.0, tau); }

double hyperbolic_distance(Complex a, Complex b) {
  return 2.0 * std::asinh(std::abs(a - b) / (2.0 * std::sqrt(a.imag() * b.imag())));
}

double modular_distance(Complex a, Complex b) {
  const Complex ra = reduce_modulus(a);
  const Complex rb = reduce_modulus(b);
  double best = std::numeric_limits<double>::infinity();
  constexpr int n = 3;
  for (const Complex base : {rb, -std::conj(rb)}) {
    for (int p = -n; p <= n; ++p)
      for (int q = -n; q <= n; ++q)
        for (int r = -n; r <= n; ++r)
          for (int s = -n; s <= n; ++s) {
            if (p * s - q * r != 1) continue;
            const Complex image = (double(p) * base + double(q)) / (double(r) * base + double(s));
            best = std::min(best, hyperbolic_distance(ra, image));
          }
  }
  return best;
}

}  // namespace papertorus
