// SPDX-License-Identifier: Apache-2.0
//
// Translation-triangle surface: the locus where the tangents of the
// translation curves drawn from a point to the three vertices are coplanar.
// Implicit evaluation, mesh extraction by bracketed root finding along
// fibre/z lines (Nil/Sol) and the exact vertex plane (SL2R~), plus the
// Sol connecting-curve construction on the surface.

#ifndef TTRI_SURFACE_HPP
#define TTRI_SURFACE_HPP

#include <array>
#include <string>
#include <vector>

#include "ttri/core.hpp"

namespace ttri {

struct TriangleSpec {
  Geometry geometry = Geometry::Nil;  // Nil, Sol or Slr
  std::array<ModelPoint, 3> vertices{};
};

struct SurfaceSample {
  ModelPoint point;
  double residual = 0.0;  // coplanarity determinant at the point
};

struct Mesh {
  std::vector<ModelPoint> vertices;
  std::vector<double> residuals;
  std::vector<std::array<int, 3>> triangles;
  double coverage = 1.0;   // fraction of footprint grid nodes with a root
  int skipped = 0;         // footprint nodes without a bracketed root
  int multi_root_nodes = 0;  // nodes where several roots were found
};

/// Unit tangent at p of the translation curve from p toward a.
TangentVector tangent_toward(Geometry geometry, const ModelPoint& p,
                             const ModelPoint& a);

/// Coplanarity determinant of the three normalized tangents from p toward
/// the vertices; zero (within tolerance) iff p is on the surface.
double surface_value(const TriangleSpec& tri, const ModelPoint& p);

/// Extract the surface over an n x n footprint grid.
Mesh surface_mesh(const TriangleSpec& tri, int n);

/// Connecting curve of two surface points in a Sol translation triangle
/// (cylinder-over-m-segment intersection; coordinate-plane and vertical
/// fallbacks per the surface definition).
std::vector<ModelPoint> sol_connecting_curve(const TriangleSpec& tri,
                                             const ModelPoint& p1,
                                             const ModelPoint& p2, int n);

}  // namespace ttri

#endif  // TTRI_SURFACE_HPP
