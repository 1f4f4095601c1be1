// SPDX-License-Identifier: Apache-2.0
//
// Nil (Heisenberg) geometry: translation action, z-axis rotation,
// translation curves forward and inverse, translation distance, fibre
// projection and the signed simple ratio along translation curves.

#ifndef TTRI_NIL_HPP
#define TTRI_NIL_HPP

#include "ttri/core.hpp"

namespace ttri {

/// Geographic direction parameters of a unit initial tangent at the origin:
/// (u, v, w) = (cos θ cos φ, cos θ sin φ, sin θ).
struct NilDirection {
  double phi = 0.0;    // (-pi, pi]
  double theta = 0.0;  // [-pi/2, pi/2]

  TangentVector tangent() const {
    double ct = std::cos(theta);
    return {ct * std::cos(phi), ct * std::sin(phi), std::sin(theta)};
  }
};

/// Solution of the inverse problem: curve parameters reaching a target.
struct NilCurveSolution {
  NilDirection dir;
  double t = 0.0;  // translation arc length, >= 0
};

/// Right translation action: point p moved by the translation whose
/// parameters are `by`.
ModelPoint nil_translate(const ModelPoint& p, const ModelPoint& by);

/// Translation parameters carrying `a` to the origin (group inverse).
ModelPoint nil_inverse_translation(const ModelPoint& a);

/// Rotation by angle omega about the z-axis fixing the origin (an isometry,
/// quadratic in x, y on the z coordinate).
ModelPoint nil_rotation(double omega, const ModelPoint& p);

/// Translation curve from the origin: (ut, vt, uv t^2/2 + wt).
/// Negative t extends the curve beyond the origin.
ModelPoint nil_curve(const NilDirection& dir, double t);

/// Closed-form inverse problem: direction and t >= 0 with
/// nil_curve(dir, t) == target. Throws DegenerateTarget for the origin.
NilCurveSolution nil_solve(const ModelPoint& target);

/// Translation distance between two points.
double nil_distance(const ModelPoint& a, const ModelPoint& b);

/// Projection along fibres onto the [x,y] plane.
PlanarPoint nil_fibre_project(const ModelPoint& p);

/// Signed simple ratio of P against the translation curve segment A->B.
/// Throws NotOnCurve if p is not on the curve within tolerance.
SignedRatio nil_simple_ratio(const ModelPoint& a, const ModelPoint& p,
                             const ModelPoint& b,
                             const Tolerances& tol = {});

}  // namespace ttri

#endif  // TTRI_NIL_HPP
