// SPDX-License-Identifier: Apache-2.0

#include "ttri/nil.hpp"

#include <algorithm>

namespace ttri {

ModelPoint nil_translate(const ModelPoint& p, const ModelPoint& by) {
  // (1;a,b,c) -> (1; x+a, y+b, z+bx+c)
  return {by.x + p.x, by.y + p.y, by.z + p.y * by.x + p.z};
}

ModelPoint nil_inverse_translation(const ModelPoint& a) {
  // solve nil_translate(a, tau) = 0 componentwise
  return {-a.x, -a.y, a.x * a.y - a.z};
}

ModelPoint nil_rotation(double omega, const ModelPoint& p) {
  double c = std::cos(omega), s = std::sin(omega);
  double xb = p.x * c - p.y * s;
  double yb = p.x * s + p.y * c;
  double zb = p.z - 0.5 * p.x * p.y +
              0.25 * (p.x * p.x - p.y * p.y) * std::sin(2.0 * omega) +
              0.5 * p.x * p.y * std::cos(2.0 * omega);
  return {xb, yb, zb};
}

ModelPoint nil_curve(const NilDirection& dir, double t) {
  TangentVector d = dir.tangent();
  return {d.u * t, d.v * t, 0.5 * d.u * d.v * t * t + d.w * t};
}

NilCurveSolution nil_solve(const ModelPoint& target) {
  // (x, y, z - xy/2) = t (u, v, w) with (u,v,w) unit
  double zc = target.z - 0.5 * target.x * target.y;
  double t = std::sqrt(target.x * target.x + target.y * target.y + zc * zc);
  if (t == 0.0) throw DegenerateTarget("nil_solve: target is the origin");
  double u = target.x / t, v = target.y / t, w = zc / t;
  NilDirection dir;
  dir.theta = std::asin(std::clamp(w, -1.0, 1.0));
  double cu = std::hypot(u, v);
  dir.phi = cu > 0.0 ? std::atan2(v, u) : 0.0;  // phi immaterial on fibres
  return {dir, t};
}

double nil_distance(const ModelPoint& a, const ModelPoint& b) {
  ModelPoint tau = nil_inverse_translation(a);
  ModelPoint rel = nil_translate(b, tau);
  double zc = rel.z - 0.5 * rel.x * rel.y;
  return std::sqrt(rel.x * rel.x + rel.y * rel.y + zc * zc);
}

PlanarPoint nil_fibre_project(const ModelPoint& p) { return {p.x, p.y}; }

SignedRatio nil_simple_ratio(const ModelPoint& a, const ModelPoint& p,
                             const ModelPoint& b, const Tolerances& tol) {
  ModelPoint tau = nil_inverse_translation(a);
  ModelPoint br = nil_translate(b, tau);
  ModelPoint pr = nil_translate(p, tau);
  NilCurveSolution sol = nil_solve(br);
  TangentVector d = sol.dir.tangent();
  // t of the nearest curve point: (x, y, z - xy/2) = t (u,v,w) on the curve
  double zc = pr.z - 0.5 * pr.x * pr.y;
  double tp = pr.x * d.u + pr.y * d.v + zc * d.w;
  ModelPoint on = nil_curve(sol.dir, tp);
  double scale = std::max(1.0, std::abs(sol.t));
  if (distance_euclid(on, pr) > tol.eps_alg * scale * 100.0)
    throw NotOnCurve("nil_simple_ratio: P is not on the A->B translation curve");
  double tb = sol.t;
  if (std::abs(tb - tp) == 0.0)
    throw ZeroDenominator("nil_simple_ratio: P coincides with B");
  SignedRatio r;
  r.geometry = Geometry::Nil;
  r.value = tp / (tb - tp);
  r.between = tp > 0.0 && tp < tb;
  return r;
}

}  // namespace ttri
