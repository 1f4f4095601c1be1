// SPDX-License-Identifier: Apache-2.0
//
// Sol geometry: translation action and group inverse, the D4 stabilizer of
// the origin, translation curves forward and inverse, translation distance,
// the [x,z] projection with its half-plane map m, and the signed simple
// ratio along translation curves.

#ifndef TTRI_SOL_HPP
#define TTRI_SOL_HPP

#include "ttri/core.hpp"

namespace ttri {

struct SolDirection {
  double phi = 0.0;    // (-pi, pi]
  double theta = 0.0;  // [-pi/2, pi/2]

  TangentVector tangent() const {
    double ct = std::cos(theta);
    return {ct * std::cos(phi), ct * std::sin(phi), std::sin(theta)};
  }
};

struct SolCurveSolution {
  SolDirection dir;
  double t = 0.0;  // translation arc length, >= 0
};

/// Image of the Sol [x,z] plane in the hyperbolic upper half-plane,
/// (x1, x2) = (x, e^{-z}).
struct HalfPlanePoint {
  double x1 = 0.0;
  double x2 = 1.0;  // > 0
};

/// Right translation: point p moved by the translation with parameters `by`,
/// (x + a e^{-z}, y + b e^{z}, z + c).
ModelPoint sol_translate(const ModelPoint& p, const ModelPoint& by);

/// Group inverse: sol_translate(g, sol_group_inverse(g)) is the origin.
ModelPoint sol_group_inverse(const ModelPoint& g);

/// One of the eight D4 stabilizer isometries of the origin, k in 0..7.
/// k = 0 is the identity; 1..3 the C4 rotations; 4..7 their products with
/// the reflection y <-> -y.
ModelPoint sol_stabilizer(int k, const ModelPoint& p);

/// Translation curve from the origin. theta != 0:
/// (-(u/w)(e^{-wt}-1), (v/w)(e^{wt}-1), wt); theta = 0: (t cos phi, t sin phi, 0).
ModelPoint sol_curve(const SolDirection& dir, double t);

/// Closed-form inverse problem; throws DegenerateTarget for the origin.
SolCurveSolution sol_solve(const ModelPoint& target);

/// Translation distance between two points.
double sol_distance(const ModelPoint& a, const ModelPoint& b);

/// Euclidean orthogonal projection onto the [x,z] plane.
PlanarPoint sol_project_xz(const ModelPoint& p);

/// The half-plane map m: (x, z) -> (x, e^{-z}).
HalfPlanePoint sol_map_m(const PlanarPoint& q);

/// Signed simple ratio of P against the translation curve segment A->B.
/// General curves use the exponential ratio of Definition-style arc
/// parameters; [x,y]-plane and z-axis curves reduce to the Euclidean
/// parameter ratio; [y,z]-plane curves are conjugated by the stabilizer
/// generator x<->y, z<->-z first.
SignedRatio sol_simple_ratio(const ModelPoint& a, const ModelPoint& p,
                             const ModelPoint& b,
                             const Tolerances& tol = {});

}  // namespace ttri

#endif  // TTRI_SOL_HPP
