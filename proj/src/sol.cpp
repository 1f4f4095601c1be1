// SPDX-License-Identifier: Apache-2.0

#include "ttri/sol.hpp"

#include <algorithm>
#include <array>

namespace ttri {

namespace {

using Mat3 = std::array<std::array<double, 3>, 3>;

Mat3 mul(const Mat3& a, const Mat3& b) {
  Mat3 r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) r[i][j] += a[i][k] * b[k][j];
  return r;
}

// D4 = C4 rotations and their products with the reflection y <-> -y.
const std::array<Mat3, 8>& stabilizer_table() {
  static const std::array<Mat3, 8> table = [] {
    Mat3 id{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
    Mat3 refl{{{1, 0, 0}, {0, -1, 0}, {0, 0, 1}}};       // (1) y <-> -y
    Mat3 rot{{{0, 1, 0}, {-1, 0, 0}, {0, 0, -1}}};       // C4 generator
    std::array<Mat3, 8> t{};
    t[0] = id;
    for (int k = 1; k < 4; ++k) t[k] = mul(rot, t[k - 1]);
    for (int k = 0; k < 4; ++k) t[4 + k] = mul(refl, t[k]);
    return t;
  }();
  return table;
}

// (e^{wt} - 1)/w, continuous at w = 0.
double expm1_over(double w, double t) {
  return w != 0.0 ? std::expm1(w * t) / w : t;
}

constexpr double kPlanarTol = 1e-12;

}  // namespace

ModelPoint sol_translate(const ModelPoint& p, const ModelPoint& by) {
  return {by.x + p.x * std::exp(-by.z), by.y + p.y * std::exp(by.z),
          by.z + p.z};
}

ModelPoint sol_group_inverse(const ModelPoint& g) {
  return {-g.x * std::exp(g.z), -g.y * std::exp(-g.z), -g.z};
}

ModelPoint sol_stabilizer(int k, const ModelPoint& p) {
  if (k < 0 || k > 7) throw KernelError("sol_stabilizer: index out of range");
  const Mat3& m = stabilizer_table()[static_cast<size_t>(k)];
  return {m[0][0] * p.x + m[0][1] * p.y + m[0][2] * p.z,
          m[1][0] * p.x + m[1][1] * p.y + m[1][2] * p.z,
          m[2][0] * p.x + m[2][1] * p.y + m[2][2] * p.z};
}

ModelPoint sol_curve(const SolDirection& dir, double t) {
  TangentVector d = dir.tangent();
  // -(u/w)(e^{-wt}-1) = u (1-e^{-wt})/w, well defined as w -> 0
  return {d.u * expm1_over(-d.w, t), d.v * expm1_over(d.w, t), d.w * t};
}

SolCurveSolution sol_solve(const ModelPoint& target) {
  double x1 = target.x, y1 = target.y, z1 = target.z;
  if (x1 == 0.0 && y1 == 0.0 && z1 == 0.0)
    throw DegenerateTarget("sol_solve: target is the origin");
  SolDirection dir;
  double t;
  if (std::abs(z1) > kPlanarTol) {
    double p = x1 / -std::expm1(-z1);
    double q = y1 / std::expm1(z1);
    double w = (z1 > 0 ? 1.0 : -1.0) / std::sqrt(p * p + q * q + 1.0);
    double u = p * w, v = q * w;
    dir.theta = std::asin(std::clamp(w, -1.0, 1.0));
    dir.phi = (std::abs(u) + std::abs(v)) > 0.0 ? std::atan2(v, u) : 0.0;
    t = z1 / w;
  } else {
    dir.theta = 0.0;
    dir.phi = std::atan2(y1, x1);
    t = std::hypot(x1, y1);
  }
  return {dir, t};
}

double sol_distance(const ModelPoint& a, const ModelPoint& b) {
  ModelPoint rel = sol_translate(b, sol_group_inverse(a));
  if (rel.x == 0.0 && rel.y == 0.0 && rel.z == 0.0) return 0.0;
  return sol_solve(rel).t;
}

PlanarPoint sol_project_xz(const ModelPoint& p) { return {p.x, p.z}; }

HalfPlanePoint sol_map_m(const PlanarPoint& q) {
  return {q.a, std::exp(-q.b)};
}

SignedRatio sol_simple_ratio(const ModelPoint& a, const ModelPoint& p,
                             const ModelPoint& b, const Tolerances& tol) {
  ModelPoint inv = sol_group_inverse(a);
  ModelPoint rb = sol_translate(b, inv);
  ModelPoint rp = sol_translate(p, inv);
  SolCurveSolution sol = sol_solve(rb);
  TangentVector d = sol.dir.tangent();
  double tb = sol.t;
  double tp;
  if (std::abs(d.w) > kPlanarTol) {
    tp = rp.z / d.w;
  } else {
    tp = rp.x * d.u + rp.y * d.v;
  }
  ModelPoint on = sol_curve(sol.dir, tp);
  double scale = std::max(1.0, std::abs(tb) + std::abs(tp));
  if (distance_euclid(on, rp) > tol.eps_alg * scale * 100.0)
    throw NotOnCurve("sol_simple_ratio: P is not on the A->B translation curve");
  if (tp == tb)
    throw ZeroDenominator("sol_simple_ratio: P coincides with B");

  SignedRatio r;
  r.geometry = Geometry::Sol;
  r.between = tp > 0.0 && tp < tb;
  bool planar = std::abs(d.w) <= kPlanarTol;
  bool fibre = std::abs(d.u) <= kPlanarTol && std::abs(d.v) <= kPlanarTol;
  if (planar || fibre) {
    // [x,y]-plane curves and the z-axis: Euclidean parameter ratio
    r.value = tp / (tb - tp);
    return r;
  }
  double w = d.w;
  if (std::abs(d.u) <= kPlanarTol) {
    // [y,z]-plane curve: conjugate by the stabilizer x<->y, z<->-z, which
    // maps it into [x,z] with the theta sign flipped
    w = -w;
  }
  // (1 - e^{-tp w}) / (e^{-tp w} - e^{-tb w}); signed arc parameters make
  // this the signed Euclidean ratio of the m-images for exterior P too
  double num = -std::expm1(-tp * w);
  double den = std::exp(-tp * w) - std::exp(-tb * w);
  if (den == 0.0)
    throw ZeroDenominator("sol_simple_ratio: degenerate denominator");
  r.value = num / den;
  return r;
}

}  // namespace ttri
