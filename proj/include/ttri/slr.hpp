// SPDX-License-Identifier: Apache-2.0
//
// SL2R~ geometry in the one-sheeted hyperboloid model: point validity,
// translation matrices, translation curves in the three direction regimes,
// inverse parameters, translation distance and the two simple ratios
// (arc-length weighted and Euclidean).

#ifndef TTRI_SLR_HPP
#define TTRI_SLR_HPP

#include <array>

#include "ttri/core.hpp"

namespace ttri {

enum class SlrRegime { H2Like, LightLike, FibreLike };

/// Initial unit tangent (sin α, cos α cos λ, cos α sin λ) at the origin.
/// The regime follows |α| against π/4; the Minkowski-type length square of
/// the tangent is -u² + v² + w² = cos 2α.
struct SlrDirection {
  double lambda = 0.0;  // (-pi, pi]
  double alpha = 0.0;   // [-pi/2, pi/2]
  SlrRegime regime = SlrRegime::H2Like;

  TangentVector tangent() const {
    double ca = std::cos(alpha);
    return {std::sin(alpha), ca * std::cos(lambda), ca * std::sin(lambda)};
  }
};

struct SlrCurveSolution {
  SlrDirection dir;
  double s = 0.0;  // translation arc length, >= 0
};

/// 4x4 matrix acting on homogeneous row vectors from the right.
struct Mat4 {
  std::array<std::array<double, 4>, 4> m{};

  static Mat4 identity();
  Mat4 operator*(const Mat4& o) const;
  std::array<double, 4> apply_row(const std::array<double, 4>& r) const;
  Mat4 inverse() const;  // throws KernelError if singular
};

/// True iff p lies in the model: y² + z² < 1 + x².
bool slr_valid(const ModelPoint& p);

/// Translation matrix carrying the origin E0 to x under right action.
Mat4 slr_translation_to(const ModelPoint& x);

/// Translation curve from the origin; a Euclidean straight ray with
/// regime-dependent radial speed. Throws ChartOverflow when a fibre-like
/// curve leaves the chart.
ModelPoint slr_curve(const SlrDirection& dir, double s);

/// Inverse problem: parameters of the translation curve from the origin to
/// the target, branching on the sign of a² - b² - c².
SlrCurveSolution slr_solve(const ModelPoint& target);

/// Translation distance between two valid points.
double slr_distance(const ModelPoint& a, const ModelPoint& b);

/// Simple ratio weighted by the curve regime: tanh / identity / tan of
/// arc length scaled by sqrt(|cos 2α|).
SignedRatio slr_simple_ratio(const ModelPoint& a, const ModelPoint& p,
                             const ModelPoint& b,
                             const Tolerances& tol = {});

/// Euclidean signed simple ratio of the three collinear model points.
SignedRatio slr_euclid_ratio(const ModelPoint& a, const ModelPoint& p,
                             const ModelPoint& b,
                             const Tolerances& tol = {});

}  // namespace ttri

#endif  // TTRI_SLR_HPP
