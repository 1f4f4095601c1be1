// SPDX-License-Identifier: Apache-2.0
//
// Planar Euclidean cevian/transversal constructions shared by the
// constant-curvature reference module and the reduction step of the
// Nil/Sol/SL2R~ harness. Everything here is affine-invariant, so it is
// valid in any affine chart of the reduced picture.

#ifndef TTRI_EUCLID2_HPP
#define TTRI_EUCLID2_HPP

#include <array>
#include <cmath>

#include "ttri/core.hpp"

namespace ttri {

struct P2 {
  double x = 0.0;
  double y = 0.0;

  friend P2 operator-(const P2& a, const P2& b) { return {a.x - b.x, a.y - b.y}; }
  friend P2 operator+(const P2& a, const P2& b) { return {a.x + b.x, a.y + b.y}; }
  friend P2 operator*(double s, const P2& p) { return {s * p.x, s * p.y}; }
};

inline double cross2(const P2& a, const P2& b) { return a.x * b.y - a.y * b.x; }
inline double dot2(const P2& a, const P2& b) { return a.x * b.x + a.y * b.y; }
inline double norm2(const P2& a) { return std::sqrt(dot2(a, a)); }

/// Intersection of lines (p, p+dp) and (q, q+dq); throws ParallelSide when
/// the directions are (nearly) parallel relative to their scale.
inline P2 line_intersect(const P2& p, const P2& dp, const P2& q, const P2& dq) {
  double den = cross2(dp, dq);
  double scale = norm2(dp) * norm2(dq);
  if (std::abs(den) < 1e-13 * scale)
    throw ParallelSide("line_intersect: lines are parallel");
  double t = cross2(q - p, dq) / den;
  return p + t * dp;
}

/// Affine parameter mu of point d along the segment a->b (mu may lie
/// outside [0,1] for exterior points).
inline double segment_param(const P2& a, const P2& b, const P2& d) {
  P2 ab = b - a;
  double len2 = dot2(ab, ab);
  if (len2 == 0.0) throw DegeneratePair("segment_param: zero-length segment");
  return dot2(d - a, ab) / len2;
}

/// Signed Euclidean simple ratio s(A,P,B) = mu/(1-mu) for P at parameter mu.
inline double euclid_ratio(double mu) {
  if (mu == 1.0) throw ZeroDenominator("euclid_ratio: P coincides with B");
  return mu / (1.0 - mu);
}

/// Division points of a Ceva configuration: interior point t given by
/// barycentric weights on triangle (a0, a1, a2). Returns the division
/// parameters (mu in (0,1)) of P on a0->a1, Q on a1->a2, R on a2->a0.
struct CevaDivision {
  std::array<P2, 3> point;  // P, Q, R
  std::array<double, 3> mu;
};

inline CevaDivision ceva_divide(const P2& a0, const P2& a1, const P2& a2,
                                double w0, double w1, double w2) {
  double ws = w0 + w1 + w2;
  if (!(w0 > 0 && w1 > 0 && w2 > 0))
    throw DegenerateConfiguration("ceva_divide: weights must be positive");
  P2 t = (w0 / ws) * a0 + (w1 / ws) * a1 + (w2 / ws) * a2;
  double area = cross2(a1 - a0, a2 - a0);
  if (std::abs(area) < 1e-12)
    throw DegenerateTriangle("ceva_divide: triangle is degenerate");
  CevaDivision d;
  d.point[0] = line_intersect(a2, t - a2, a0, a1 - a0);  // P = A2T x A0A1
  d.point[1] = line_intersect(a0, t - a0, a1, a2 - a1);  // Q = A0T x A1A2
  d.point[2] = line_intersect(a1, t - a1, a2, a0 - a2);  // R = A1T x A2A0
  d.mu[0] = segment_param(a0, a1, d.point[0]);
  d.mu[1] = segment_param(a1, a2, d.point[1]);
  d.mu[2] = segment_param(a2, a0, d.point[2]);
  return d;
}

/// Division points of a Menelaus configuration: transversal through the
/// points at parameters mu01 on side a0->a1 and mu12 on side a1->a2.
/// Parameters may land outside [0,1]; the third one always does when the
/// first two are interior.
struct MenelausDivision {
  std::array<P2, 3> point;  // P on a0a1, Q on a1a2, R on a2a0
  std::array<double, 3> mu;
};

inline MenelausDivision menelaus_divide(const P2& a0, const P2& a1,
                                        const P2& a2, double mu01,
                                        double mu12) {
  P2 p = a0 + mu01 * (a1 - a0);
  P2 q = a1 + mu12 * (a2 - a1);
  P2 dir = q - p;
  if (norm2(dir) < 1e-12)
    throw DegenerateConfiguration("menelaus_divide: transversal is degenerate");
  MenelausDivision d;
  d.point[0] = p;
  d.point[1] = q;
  d.point[2] = line_intersect(p, dir, a2, a0 - a2);
  d.mu[0] = mu01;
  d.mu[1] = mu12;
  d.mu[2] = segment_param(a2, a0, d.point[2]);
  return d;
}

}  // namespace ttri

#endif  // TTRI_EUCLID2_HPP
