#include "papertorus/embedding.hpp"

#include <cmath>

#include <Eigen/Dense>

#include "papertorus/deformation.hpp"

namespace papertorus {

// --- SignList -----------------------------------------------------------------

int SignList::orient(int a, int b, int c, int d) const {
  std::array<int, 4> q{a, b, c, d};
  const int parity = sort_with_parity(q);
  return parity * to_int(at(q));
}

bool SignList::general_position() const { return count(Sign::Degenerate) == 0; }

std::vector<Quadruple> SignList::degenerate_quadruples() const {
  std::vector<Quadruple> out;
  for (int i = 0; i < kQuadrupleCount; ++i) {
    if ((*this)[i] == Sign::Degenerate) out.push_back(quadruples()[static_cast<size_t>(i)]);
  }
  return out;
}

int SignList::count(Sign s) const {
  int n = 0;
  for (Sign e : entries_) n += e == s ? 1 : 0;
  return n;
}

std::string SignList::str() const {
  std::string s;
  for (Sign e : entries_) s += e == Sign::Positive ? '+' : e == Sign::Negative ? '-' : '0';
  return s;
}

SignList SignList::parse(const std::string& text) {
  if (text.size() != kQuadrupleCount) throw std::invalid_argument("sign list needs 70 entries");
  SignList out;
  for (int i = 0; i < kQuadrupleCount; ++i) {
    switch (text[static_cast<size_t>(i)]) {
      case '+': out[i] = Sign::Positive; break;
      case '-': out[i] = Sign::Negative; break;
      case '0': out[i] = Sign::Degenerate; break;
      default: throw std::invalid_argument("bad sign character");
    }
  }
  return out;
}

SignList sign_list(const Torus8& p, double tau) {
  const double s = p.scale();
  const double cutoff = tau * s * s * s;
  SignList out;
  for (int i = 0; i < kQuadrupleCount; ++i) {
    const double d = tetra_det(p, quadruples()[static_cast<size_t>(i)]);
    out[i] = std::abs(d) < cutoff ? Sign::Degenerate : d > 0 ? Sign::Positive : Sign::Negative;
  }
  return out;
}

// --- determinant polynomials ---------------------------------------------------

const char* to_string(OrderCase c) {
  switch (c) {
    case OrderCase::Order0: return "order-0";
    case OrderCase::Order1: return "order-1";
    case OrderCase::Order2: return "order-2";
    case OrderCase::Higher: return "higher";
  }
  return "?";
}

double DetPolynomial::operator()(double t) const {
  double acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * t + *it;
  return acc;
}

namespace {

constexpr std::array<double, 7> kSampleTimes{1.0 / 64, 2.0 / 64, 3.0 / 64, 4.0 / 64,
                                             5.0 / 64, 6.0 / 64, 7.0 / 64};
constexpr std::array<double, 2> kHoldoutTimes{9.0 / 64, 5.0 / 128};

const Eigen::PartialPivLU<Eigen::Matrix<double, 7, 7>>& vandermonde_lu() {
  static const auto lu = [] {
    Eigen::Matrix<double, 7, 7> v;
    for (int i = 0; i < 7; ++i)
      for (int k = 0; k < 7; ++k) v(i, k) = std::pow(kSampleTimes[static_cast<size_t>(i)], k);
    return Eigen::PartialPivLU<Eigen::Matrix<double, 7, 7>>(v);
  }();
  return lu;
}

}  // namespace

std::array<DetPolynomial, kQuadrupleCount> det_polynomials(const ModularParameter& z,
                                                           double drift1, double drift2) {
  const DeformationCoefficients c = deformation_coefficients(z);
  const Torus8 golden = golden_torus(z);
  const double s = golden.scale();
  const double scale3 = s * s * s;

  Eigen::Matrix<double, 7, kQuadrupleCount> samples;
  for (int i = 0; i < 7; ++i) {
    const Torus8 p = deform(c, golden, kSampleTimes[static_cast<size_t>(i)], drift1, drift2);
    for (int q = 0; q < kQuadrupleCount; ++q) samples(i, q) = tetra_det(p, quadruples()[static_cast<size_t>(q)]);
  }
  const Eigen::Matrix<double, 7, kQuadrupleCount> fit = vandermonde_lu().solve(samples);

  std::array<Torus8, 2> holdout;
  for (size_t i = 0; i < 2; ++i) holdout[i] = deform(c, golden, kHoldoutTimes[i], drift1, drift2);

  std::array<DetPolynomial, kQuadrupleCount> out;
  for (int q = 0; q < kQuadrupleCount; ++q) {
    DetPolynomial& poly = out[static_cast<size_t>(q)];
    poly.quadruple = quadruples()[static_cast<size_t>(q)];
    for (int k = 0; k < 7; ++k) poly.coeffs[static_cast<size_t>(k)] = fit(k, q);
    for (size_t i = 0; i < 2; ++i) {
      const double err = std::abs(poly(kHoldoutTimes[i]) - tetra_det(holdout[i], poly.quadruple));
      poly.holdout_residual = std::max(poly.holdout_residual, err / scale3);
    }
    if (poly.holdout_residual > kFitTolerance) {
      throw FitError("polynomial fit of " + to_string(poly.quadruple) +
                     " misses its holdout samples by " + std::to_string(poly.holdout_residual));
    }
    for (int k = 0; k < 7; ++k) {
      if (std::abs(poly.coeffs[static_cast<size_t>(k)]) > kLeadingTolerance * scale3) {
        poly.leading_index = k;
        break;
      }
    }
    poly.order = poly.leading_index == 0   ? OrderCase::Order0
                 : poly.leading_index == 1 ? OrderCase::Order1
                 : poly.leading_index == 2 ? OrderCase::Order2
                                           : OrderCase::Higher;
  }
  return out;
}

std::array<DetPolynomial, kQuadrupleCount> det_polynomials(const ModularParameter& z) {
  const DeformationCoefficients c = deformation_coefficients(z);
  return det_polynomials(z, c.x1, c.x2);
}

DetPolynomial det_polynomial(const ModularParameter& z, const Quadruple& q) {
  return det_polynomials(z)[static_cast<size_t>(quadruple_index(q))];
}

namespace {

using Quadratic = std::array<double, 3>;
using Sextic = std::array<double, 7>;
using PolyVec = std::array<Quadratic, 3>;

Sextic triple_product(const PolyVec& a, const PolyVec& b, const PolyVec& c) {
  auto mul2 = [](const Quadratic& p, const Quadratic& q) {
    std::array<double, 5> r{};
    for (size_t i = 0; i < 3; ++i)
      for (size_t j = 0; j < 3; ++j) r[i + j] += p[i] * q[j];
    return r;
  };
  auto mul3 = [](const std::array<double, 5>& p, const Quadratic& q) {
    Sextic r{};
    for (size_t i = 0; i < 5; ++i)
      for (size_t j = 0; j < 3; ++j) r[i + j] += p[i] * q[j];
    return r;
  };
  Sextic out{};
  // a . (b x c) with the Levi-Civita sign of each (i, j, k).
  constexpr std::array<std::array<int, 4>, 6> terms{{
      {0, 1, 2, 1}, {1, 2, 0, 1}, {2, 0, 1, 1}, {0, 2, 1, -1}, {1, 0, 2, -1}, {2, 1, 0, -1}}};
  for (const auto& t : terms) {
    const Sextic r = mul3(mul2(a[static_cast<size_t>(t[0])], b[static_cast<size_t>(t[1])]), c[static_cast<size_t>(t[2])]);
    for (size_t k = 0; k < 7; ++k) out[k] += t[3] * r[k];
  }
  return out;
}

}  // namespace

std::array<std::array<double, 7>, kQuadrupleCount> expanded_det_coefficients(
    const ModularParameter& z, double drift1, double drift2) {
  const DeformationCoefficients c = deformation_coefficients(z);
  const Torus8 golden = golden_torus(z);
  const auto a = c.heights_for(drift1, drift2);
  // Vertex paths P_j(t) = P_j + t V_j + t^2 W_j for j = 0..3, rho images after.
  std::array<Vec3, kVertexCount> v, w;
  v.fill(Vec3::Zero());
  w.fill(Vec3::Zero());
  v[0] = {1.0, c.m, 0.0};
  w[0] = {0.0, 0.0, a[0]};
  w[1] = {drift1, drift2, a[1]};
  w[2] = {0.0, drift1, a[2]};
  for (int j = 4; j < kVertexCount; ++j) {
    v[static_cast<size_t>(j)] = rho(v[static_cast<size_t>(7 - j)]);
    w[static_cast<size_t>(j)] = rho(w[static_cast<size_t>(7 - j)]);
  }
  auto path = [&](int j) {
    PolyVec out;
    for (int k = 0; k < 3; ++k) {
      out[static_cast<size_t>(k)] = {golden[j](k), v[static_cast<size_t>(j)](k), w[static_cast<size_t>(j)](k)};
    }
    return out;
  };
  auto minus = [](const PolyVec& p, const PolyVec& q) {
    PolyVec out;
    for (size_t k = 0; k < 3; ++k)
      for (size_t d = 0; d < 3; ++d) out[k][d] = p[k][d] - q[k][d];
    return out;
  };
  std::array<Sextic, kQuadrupleCount> out;
  for (size_t i = 0; i < kQuadrupleCount; ++i) {
    const Quadruple& q = quadruples()[i];
    const PolyVec pa = path(q[0]);
    out[i] = triple_product(minus(path(q[1]), pa), minus(path(q[2]), pa), minus(path(q[3]), pa));
  }
  return out;
}

SignList leading_sign_list(const std::array<DetPolynomial, kQuadrupleCount>& polys) {
  SignList out;
  for (int i = 0; i < kQuadrupleCount; ++i) {
    const auto& p = polys[static_cast<size_t>(i)];
    if (p.leading_index < 0) continue;
    out[i] = p.leading() > 0 ? Sign::Positive : Sign::Negative;
  }
  return out;
}

SignList leading_sign_list(const ModularParameter& z) {
  return leading_sign_list(det_polynomials(z));
}

// --- clause ---------------------------------------------------------------------

BlockResult edge_triangle_disjoint(const SignList& signs, const Edge& edge, const Triangle& tri) {
  const int a = edge[0], b = edge[1];
  const int c = tri[0], d = tri[1], e = tri[2];
  // The segment crosses the triangle iff its endpoints straddle the
  // triangle's plane and the line (a, b) passes inside all three sides:
  //   -[cdea][cdeb] + [abcd][abde] + [abde][abec] = 3.
  // Each bracket is one of [abcd], [abce], [abde], [acde], [bcde] up to the
  // parity of the label permutation.
  const int s1 = signs.orient(c, d, e, a);
  const int s2 = signs.orient(c, d, e, b);
  if (s1 == 0 || s2 == 0) return BlockResult::Degenerate;
  if (s1 == s2) return BlockResult::Satisfied;
  const int o1 = signs.orient(a, b, c, d);
  const int o2 = signs.orient(a, b, d, e);
  const int o3 = signs.orient(a, b, e, c);
  if (o1 == 0 || o2 == 0 || o3 == 0) return BlockResult::Degenerate;
  const int block = -s1 * s2 + o1 * o2 + o2 * o3;
  return block < 3 ? BlockResult::Satisfied : BlockResult::Violated;
}

BlockResult edge_triangle_disjoint(const Torus8& p, const Edge& edge, const Triangle& tri) {
  return edge_triangle_disjoint(sign_list(p), edge, tri);
}

const std::vector<Block>& embedding_blocks() {
  static const std::vector<Block> blocks = [] {
    std::vector<Block> out;
    const auto& tri = uniform_triangulation();
    for (const auto& pair : classify_pairs(tri)) {
      const Triangle& t1 = tri.triangles[static_cast<size_t>(pair.first)];
      const Triangle& t2 = tri.triangles[static_cast<size_t>(pair.second)];
      auto add = [&](int a, int b, const Triangle& other) {
        out.push_back({{std::min(a, b), std::max(a, b)}, other, pair.first, pair.second});
      };
      if (pair.kind == PairKind::Disjoint) {
        for (size_t k = 0; k < 3; ++k) add(t1[k], t1[(k + 1) % 3], t2);
        for (size_t k = 0; k < 3; ++k) add(t2[k], t2[(k + 1) % 3], t1);
      } else if (pair.kind == PairKind::VertexSharing) {
        const int v = pair.shared[0];
        auto opposite = [v](const Triangle& t) {
          Edge e{};
          size_t n = 0;
          for (int u : t)
            if (u != v) e[n++] = u;
          return e;
        };
        const Edge e1 = opposite(t1);
        const Edge e2 = opposite(t2);
        add(e1[0], e1[1], t2);
        add(e2[0], e2[1], t1);
      }
    }
    return out;
  }();
  return blocks;
}

const char* to_string(Embedded e) {
  switch (e) {
    case Embedded::Yes: return "yes";
    case Embedded::No: return "no";
    case Embedded::Degenerate: return "degenerate";
  }
  return "?";
}

EmbeddingVerdict embedding_clause(const SignList& signs) {
  EmbeddingVerdict v;
  v.signs = signs;
  v.degenerate_quadruples = signs.degenerate_quadruples();
  if (!v.degenerate_quadruples.empty()) {
    v.embedded = Embedded::Degenerate;
    return v;
  }
  for (const Block& b : embedding_blocks()) {
    ++v.blocks_checked;
    if (edge_triangle_disjoint(signs, b.edge, b.triangle) != BlockResult::Satisfied) {
      v.embedded = Embedded::No;
      v.failing_block = b;
      return v;
    }
  }
  v.embedded = Embedded::Yes;
  return v;
}

EmbeddingVerdict embedding_clause(const Torus8& p, double tau) {
  return embedding_clause(sign_list(p, tau));
}

}  // namespace papertorus
