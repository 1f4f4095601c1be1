// SPDX-License-Identifier: Apache-2.0

#include "ttri/slr.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace ttri {

namespace {

constexpr double kLightTol = 1e-13;  // relative |a^2-b^2-c^2| classifying light-like

double cross_norm(const ModelPoint& a, const ModelPoint& b) {
  double cx = a.y * b.z - a.z * b.y;
  double cy = a.z * b.x - a.x * b.z;
  double cz = a.x * b.y - a.y * b.x;
  return std::sqrt(cx * cx + cy * cy + cz * cz);
}

}  // namespace

Mat4 Mat4::identity() {
  Mat4 r;
  for (int i = 0; i < 4; ++i) r.m[i][i] = 1.0;
  return r;
}

Mat4 Mat4::operator*(const Mat4& o) const {
  Mat4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      double s = 0.0;
      for (int k = 0; k < 4; ++k) s += m[i][k] * o.m[k][j];
      r.m[i][j] = s;
    }
  return r;
}

std::array<double, 4> Mat4::apply_row(const std::array<double, 4>& r) const {
  std::array<double, 4> out{};
  for (int j = 0; j < 4; ++j)
    for (int i = 0; i < 4; ++i) out[j] += r[i] * m[i][j];
  return out;
}

Mat4 Mat4::inverse() const {
  // Gauss-Jordan with partial pivoting
  std::array<std::array<double, 8>, 4> a{};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) a[i][j] = m[i][j];
    a[i][4 + i] = 1.0;
  }
  for (int col = 0; col < 4; ++col) {
    int piv = col;
    for (int r = col + 1; r < 4; ++r)
      if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
    if (std::abs(a[piv][col]) < 1e-300)
      throw KernelError("Mat4::inverse: singular matrix");
    std::swap(a[piv], a[col]);
    double d = a[col][col];
    for (int j = 0; j < 8; ++j) a[col][j] /= d;
    for (int r = 0; r < 4; ++r) {
      if (r == col) continue;
      double f = a[r][col];
      if (f == 0.0) continue;
      for (int j = 0; j < 8; ++j) a[r][j] -= f * a[col][j];
    }
  }
  Mat4 out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out.m[i][j] = a[i][4 + j];
  return out;
}

bool slr_valid(const ModelPoint& p) {
  return p.y * p.y + p.z * p.z < 1.0 + p.x * p.x;
}

Mat4 slr_translation_to(const ModelPoint& x) {
  if (!slr_valid(x))
    throw InvalidPoint("slr_translation_to: point outside the model");
  double x0 = 1.0, x1 = x.x, x2 = x.y, x3 = x.z;
  Mat4 t;
  t.m = {{{x0, x1, x2, x3},
          {-x1, x0, x3, -x2},
          {x2, x3, x0, x1},
          {x3, -x2, -x1, x0}}};
  return t;
}

ModelPoint slr_curve(const SlrDirection& dir, double s) {
  TangentVector d = dir.tangent();
  double c2a = std::cos(2.0 * dir.alpha);
  double radius;
  if (dir.regime == SlrRegime::LightLike || std::abs(c2a) < kLightTol) {
    radius = s;
  } else if (c2a > 0.0) {
    double k = std::sqrt(c2a);
    radius = std::tanh(s * k) / k;
  } else {
    double k = std::sqrt(-c2a);
    if (std::abs(s) * k >= std::numbers::pi / 2.0)
      throw ChartOverflow("slr_curve: fibre-like curve leaves the chart");
    radius = std::tan(s * k) / k;
  }
  return {radius * d.u, radius * d.v, radius * d.w};
}

SlrCurveSolution slr_solve(const ModelPoint& target) {
  if (!slr_valid(target))
    throw InvalidPoint("slr_solve: target outside the model");
  double a = target.x, b = target.y, c = target.z;
  double r2 = a * a + b * b + c * c;
  if (r2 == 0.0) throw DegenerateTarget("slr_solve: target is the origin");
  double r = std::sqrt(r2);
  SlrDirection dir;
  double bc = std::hypot(b, c);
  dir.alpha = std::atan2(a, bc);  // bc = 0 gives +-pi/2
  dir.lambda = bc > 0.0 ? std::atan2(c, b) : 0.0;
  double disc = a * a - b * b - c * c;  // r^2 cos 2alpha has sign -disc
  double s;
  if (std::abs(disc) <= kLightTol * r2) {
    dir.regime = SlrRegime::LightLike;
    s = r;
  } else if (disc < 0.0) {
    dir.regime = SlrRegime::H2Like;
    double rk = std::sqrt(-disc);  // r * sqrt(cos 2alpha) < 1 inside the model
    s = std::atanh(rk) * r / rk;
  } else {
    dir.regime = SlrRegime::FibreLike;
    double rk = std::sqrt(disc);
    s = std::atan(rk) * r / rk;
  }
  return {dir, s};
}

double slr_distance(const ModelPoint& a, const ModelPoint& b) {
  Mat4 ti = slr_translation_to(a).inverse();
  std::array<double, 4> hb = ti.apply_row({1.0, b.x, b.y, b.z});
  if (hb[0] <= 0.0)
    throw ChartOverflow("slr_distance: image crosses the chart boundary");
  ModelPoint rel{hb[1] / hb[0], hb[2] / hb[0], hb[3] / hb[0]};
  if (rel.norm() == 0.0) return 0.0;
  return slr_solve(rel).s;
}

SignedRatio slr_simple_ratio(const ModelPoint& a, const ModelPoint& p,
                             const ModelPoint& b, const Tolerances& tol) {
  ModelPoint ab = b - a;
  ModelPoint ap = p - a;
  double len2 = ab.x * ab.x + ab.y * ab.y + ab.z * ab.z;
  if (len2 == 0.0) throw DegeneratePair("slr_simple_ratio: A equals B");
  if (cross_norm(ap, ab) > tol.eps_alg * std::max(1.0, std::sqrt(len2)) * 100.0)
    throw NotOnCurve("slr_simple_ratio: P is not on the line AB");
  double tau = (ap.x * ab.x + ap.y * ab.y + ap.z * ab.z) / len2;

  // regime and alpha of the A->B curve via the translate of B to the origin
  Mat4 ti = slr_translation_to(a).inverse();
  std::array<double, 4> hb = ti.apply_row({1.0, b.x, b.y, b.z});
  if (hb[0] <= 0.0)
    throw ChartOverflow("slr_simple_ratio: segment crosses the chart boundary");
  ModelPoint rb{hb[1] / hb[0], hb[2] / hb[0], hb[3] / hb[0]};
  SlrCurveSolution sol = slr_solve(rb);

  double dAP = slr_distance(a, p);
  double dPB = slr_distance(p, b);
  if (dPB == 0.0) throw ZeroDenominator("slr_simple_ratio: P coincides with B");
  double c2a = std::cos(2.0 * sol.dir.alpha);
  double mag;
  if (sol.dir.regime == SlrRegime::LightLike) {
    mag = dAP / dPB;
  } else if (sol.dir.regime == SlrRegime::H2Like) {
    double k = std::sqrt(c2a);
    mag = std::tanh(dAP * k) / std::tanh(dPB * k);
  } else {
    double k = std::sqrt(-c2a);
    mag = std::tan(dAP * k) / std::tan(dPB * k);
  }
  SignedRatio r;
  r.geometry = Geometry::Slr;
  r.between = tau > 0.0 && tau < 1.0;
  r.value = r.between ? mag : -mag;
  return r;
}

SignedRatio slr_euclid_ratio(const ModelPoint& a, const ModelPoint& p,
                             const ModelPoint& b, const Tolerances& tol) {
  ModelPoint ab = b - a;
  ModelPoint ap = p - a;
  double len2 = ab.x * ab.x + ab.y * ab.y + ab.z * ab.z;
  if (len2 == 0.0) throw DegeneratePair("slr_euclid_ratio: A equals B");
  double tau = (ap.x * ab.x + ap.y * ab.y + ap.z * ab.z) / len2;
  ModelPoint foot = a + tau * ab;
  if (distance_euclid(foot, p) > tol.eps_alg * std::max(1.0, std::sqrt(len2)) * 100.0)
    throw NotOnCurve("slr_euclid_ratio: P is not on the line AB");
  if (tau == 1.0) throw ZeroDenominator("slr_euclid_ratio: P coincides with B");
  SignedRatio r;
  r.geometry = Geometry::Slr;
  r.value = tau / (1.0 - tau);
  r.between = tau > 0.0 && tau < 1.0;
  return r;
}

}  // namespace ttri
