// SPDX-License-Identifier: Apache-2.0
//
// Ceva and Menelaus configurations in Nil, Sol and SL2R~: reduction to a
// planar Euclidean picture (fibre projection / m-map / model plane), the
// Euclidean construction there, the lift of the division points back onto
// the side translation curves, and theorem-product verification.

#ifndef TTRI_HARNESS_HPP
#define TTRI_HARNESS_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "ttri/report.hpp"
#include "ttri/surface.hpp"

namespace ttri {

/// A lifted division point on side i -> j of the triangle.
struct DivisionPoint {
  ModelPoint point;
  double t = 0.0;        // curve parameter from the side's first vertex
  double t_total = 0.0;  // parameter of the side's second vertex
  double mu = 0.0;       // affine parameter in the reduced picture
};

struct CevaConfig {
  TriangleSpec triangle;
  std::array<double, 3> weights{};       // barycentric descriptor of T
  std::array<DivisionPoint, 3> division; // P on A0A1, Q on A1A2, R on A2A0
  std::string trace;
};

struct MenelausConfig {
  TriangleSpec triangle;
  double mu01 = 0.0, mu12 = 0.0;  // transversal descriptor in the reduced picture
  std::array<DivisionPoint, 3> division;
  std::string trace;
};

/// Cevian configuration through the point with the given barycentric
/// weights (all positive). Throws DegenerateTriangle / LiftFailure.
CevaConfig build_ceva(const TriangleSpec& triangle,
                      const std::array<double, 3>& weights,
                      const Tolerances& tol = {});

/// Transversal configuration through the side points at parameters mu01 on
/// A0->A1 and mu12 on A1->A2 (reduced picture).
MenelausConfig build_menelaus(const TriangleSpec& triangle, double mu01,
                              double mu12, const Tolerances& tol = {});

TheoremReport verify(const CevaConfig& config, const Tolerances& tol = {});
TheoremReport verify(const MenelausConfig& config, const Tolerances& tol = {});

struct SuiteSummary {
  Geometry geometry = Geometry::Nil;
  int trials = 0;
  int resampled = 0;
  double max_ceva_deviation = 0.0;
  double mean_ceva_deviation = 0.0;
  double max_menelaus_deviation = 0.0;
  double mean_menelaus_deviation = 0.0;
  int failures = 0;  // reports with deviation > eps_theorem

  // SL2R~ arc-length-weighted ratio route, recorded side by side
  bool has_alt = false;
  double alt_max_ceva_deviation = 0.0;
  double alt_max_menelaus_deviation = 0.0;
  int alt_failures = 0;

  std::vector<TheoremReport> reports;
};

/// Seeded random triangles with a random interior cevian point and a random
/// transversal per trial; degenerate samples are resampled and counted.
SuiteSummary random_suite(Geometry geometry, int trials, uint64_t seed,
                          const Tolerances& tol = {});

}  // namespace ttri

#endif  // TTRI_HARNESS_HPP
