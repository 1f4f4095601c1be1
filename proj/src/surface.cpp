// SPDX-License-Identifier: Apache-2.0

#include "ttri/surface.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ttri/nil.hpp"
#include "ttri/sol.hpp"

namespace ttri {

namespace {

constexpr double kVertexBall = 1e-9;
constexpr int kScanCells = 64;

struct P2d {
  double x, y;
};

ModelPoint plane_normal(const TriangleSpec& tri) {
  ModelPoint e1 = tri.vertices[1] - tri.vertices[0];
  ModelPoint e2 = tri.vertices[2] - tri.vertices[0];
  return {e1.y * e2.z - e1.z * e2.y, e1.z * e2.x - e1.x * e2.z,
          e1.x * e2.y - e1.y * e2.x};
}

double plane_offset(const TriangleSpec& tri, const ModelPoint& n,
                    const ModelPoint& p) {
  ModelPoint d = p - tri.vertices[0];
  return d.x * n.x + d.y * n.y + d.z * n.z;
}

bool point_in_triangle(const P2d& p, const P2d& a, const P2d& b, const P2d& c) {
  auto side = [](const P2d& p1, const P2d& p2, const P2d& q) {
    return (p2.x - p1.x) * (q.y - p1.y) - (p2.y - p1.y) * (q.x - p1.x);
  };
  double d1 = side(a, b, p), d2 = side(b, c, p), d3 = side(c, a, p);
  bool neg = d1 < 0 || d2 < 0 || d3 < 0;
  bool pos = d1 > 0 || d2 > 0 || d3 > 0;
  return !(neg && pos);
}

// All roots of f on [lo, hi] found by a fixed scan plus bisection.
std::vector<double> scan_roots(const std::function<double(double)>& f,
                               double lo, double hi, double tol) {
  std::vector<double> roots;
  double prev_x = lo, prev_f = f(lo);
  for (int i = 1; i <= kScanCells; ++i) {
    double x = lo + (hi - lo) * i / kScanCells;
    double fx = f(x);
    if (prev_f == 0.0) {
      roots.push_back(prev_x);
    } else if (prev_f * fx < 0.0) {
      roots.push_back(solve_bracketed_root(f, prev_x, x, tol));
    }
    prev_x = x;
    prev_f = fx;
  }
  if (prev_f == 0.0) roots.push_back(prev_x);
  return roots;
}

}  // namespace

TangentVector tangent_toward(Geometry geometry, const ModelPoint& p,
                             const ModelPoint& a) {
  if (distance_euclid(p, a) < kVertexBall)
    throw DegeneratePair("tangent_toward: coincident points");
  switch (geometry) {
    case Geometry::Nil: {
      ModelPoint rel = nil_translate(a, nil_inverse_translation(p));
      TangentVector t = nil_solve(rel).dir.tangent();
      // differential of the translation carrying the origin to p
      return TangentVector{t.u, t.v, t.w + t.v * p.x}.normalized();
    }
    case Geometry::Sol: {
      ModelPoint rel = sol_translate(a, sol_group_inverse(p));
      TangentVector t = sol_solve(rel).dir.tangent();
      return TangentVector{t.u * std::exp(-p.z), t.v * std::exp(p.z), t.w}
          .normalized();
    }
    case Geometry::Slr: {
      ModelPoint d = a - p;
      return TangentVector{d.x, d.y, d.z}.normalized();
    }
    default:
      throw KernelError("tangent_toward: unsupported geometry");
  }
}

double surface_value(const TriangleSpec& tri, const ModelPoint& p) {
  for (const ModelPoint& v : tri.vertices)
    if (distance_euclid(p, v) < kVertexBall)
      throw DegeneratePoint("surface_value: point coincides with a vertex");
  TangentVector t0 = tangent_toward(tri.geometry, p, tri.vertices[0]);
  TangentVector t1 = tangent_toward(tri.geometry, p, tri.vertices[1]);
  TangentVector t2 = tangent_toward(tri.geometry, p, tri.vertices[2]);
  return det3(t0, t1, t2);
}

Mesh surface_mesh(const TriangleSpec& tri, int n) {
  if (n < 2) throw KernelError("surface_mesh: resolution must be >= 2");
  Mesh mesh;

  if (tri.geometry == Geometry::Slr) {
    // exact plane through the vertices
    const ModelPoint &a0 = tri.vertices[0], &a1 = tri.vertices[1],
                     &a2 = tri.vertices[2];
    ModelPoint centroid = (1.0 / 3.0) * (a0 + a1 + a2);
    std::vector<std::vector<int>> index(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
      index[static_cast<size_t>(i)].assign(static_cast<size_t>(n) + 1, -1);
      for (int j = 0; j + i <= n; ++j) {
        double s = double(i) / n, t = double(j) / n;
        ModelPoint p = a0 + s * (a1 - a0) + t * (a2 - a0);
        // nudge corner samples off the vertices, where tangents degenerate
        if (distance_euclid(p, a0) < 1e-7 || distance_euclid(p, a1) < 1e-7 ||
            distance_euclid(p, a2) < 1e-7)
          p = p + 1e-6 * (centroid - p);
        index[static_cast<size_t>(i)][static_cast<size_t>(j)] =
            static_cast<int>(mesh.vertices.size());
        mesh.vertices.push_back(p);
        mesh.residuals.push_back(surface_value(tri, p));
      }
    }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j + i < n; ++j) {
        int v00 = index[i][j], v10 = index[i + 1][j], v01 = index[i][j + 1];
        mesh.triangles.push_back({v00, v10, v01});
        if (j + i + 1 < n) {
          int v11 = index[i + 1][j + 1];
          mesh.triangles.push_back({v10, v11, v01});
        }
      }
    mesh.coverage = 1.0;
    return mesh;
  }

  // Nil / Sol: root search along fibre (z) lines over the projected footprint
  P2d f0{tri.vertices[0].x, tri.vertices[0].y};
  P2d f1{tri.vertices[1].x, tri.vertices[1].y};
  P2d f2{tri.vertices[2].x, tri.vertices[2].y};
  double area = std::abs((f1.x - f0.x) * (f2.y - f0.y) -
                         (f1.y - f0.y) * (f2.x - f0.x));
  if (area < 1e-12) {
    // fibre-type footprint collapses; the surface is the vertex plane
    TriangleSpec planar = tri;
    planar.geometry = Geometry::Slr;
    Mesh m = surface_mesh(planar, n);
    for (size_t i = 0; i < m.vertices.size(); ++i)
      m.residuals[i] = surface_value(tri, m.vertices[i]);
    return m;
  }

  double zmin = std::min({tri.vertices[0].z, tri.vertices[1].z, tri.vertices[2].z});
  double zmax = std::max({tri.vertices[0].z, tri.vertices[1].z, tri.vertices[2].z});
  double spread = std::max(zmax - zmin, 0.5);
  double zlo = zmin - 2.0 * spread, zhi = zmax + 2.0 * spread;

  ModelPoint normal = plane_normal(tri);

  double xmin = std::min({f0.x, f1.x, f2.x}), xmax = std::max({f0.x, f1.x, f2.x});
  double ymin = std::min({f0.y, f1.y, f2.y}), ymax = std::max({f0.y, f1.y, f2.y});

  int inside = 0, found = 0;
  std::vector<std::vector<int>> index(static_cast<size_t>(n),
                                      std::vector<int>(static_cast<size_t>(n), -1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      P2d q{xmin + (xmax - xmin) * (i + 0.5) / n,
            ymin + (ymax - ymin) * (j + 0.5) / n};
      if (!point_in_triangle(q, f0, f1, f2)) continue;
      ++inside;
      auto f = [&](double z) {
        return surface_value(tri, ModelPoint{q.x, q.y, z});
      };
      std::vector<double> roots;
      try {
        roots = scan_roots(f, zlo, zhi, 1e-12);
      } catch (const KernelError&) {
        roots.clear();
      }
      if (roots.empty()) {
        ++mesh.skipped;
        continue;
      }
      if (roots.size() > 1) ++mesh.multi_root_nodes;
      // keep the root closest to the Euclidean plane of the vertices
      double best = roots[0], best_off = std::numeric_limits<double>::max();
      for (double z : roots) {
        double off = std::abs(plane_offset(tri, normal, ModelPoint{q.x, q.y, z}));
        if (off < best_off) {
          best_off = off;
          best = z;
        }
      }
      ModelPoint p{q.x, q.y, best};
      index[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          static_cast<int>(mesh.vertices.size());
      mesh.vertices.push_back(p);
      mesh.residuals.push_back(f(best));
      ++found;
    }
  }
  for (int i = 0; i + 1 < n; ++i)
    for (int j = 0; j + 1 < n; ++j) {
      int v00 = index[i][j], v10 = index[i + 1][j];
      int v01 = index[i][j + 1], v11 = index[i + 1][j + 1];
      if (v00 >= 0 && v10 >= 0 && v01 >= 0) mesh.triangles.push_back({v00, v10, v01});
      if (v10 >= 0 && v11 >= 0 && v01 >= 0) mesh.triangles.push_back({v10, v11, v01});
    }
  mesh.coverage = inside > 0 ? double(found) / inside : 0.0;
  return mesh;
}

std::vector<ModelPoint> sol_connecting_curve(const TriangleSpec& tri,
                                             const ModelPoint& p1,
                                             const ModelPoint& p2, int n) {
  if (tri.geometry != Geometry::Sol)
    throw KernelError("sol_connecting_curve: Sol triangles only");
  if (n < 2) n = 2;
  auto on_surface = [&](const ModelPoint& p) {
    try {
      return std::abs(surface_value(tri, p)) < 1e-7;
    } catch (const DegeneratePoint&) {
      return true;  // vertices belong to the surface boundary
    }
  };
  if (!on_surface(p1) || !on_surface(p2))
    throw NotOnSurface("sol_connecting_curve: endpoint is not on the surface");
  if (distance_euclid(p1, p2) < kVertexBall) return {p1};

  bool tri_in_xz = true, tri_in_yz = true;
  for (const ModelPoint& v : tri.vertices) {
    tri_in_xz = tri_in_xz && std::abs(v.y) < 1e-12;
    tri_in_yz = tri_in_yz && std::abs(v.x) < 1e-12;
  }
  if (tri_in_xz || tri_in_yz) {
    // planar triangle: the connecting curve is the translation curve itself
    ModelPoint rel = sol_translate(p2, sol_group_inverse(p1));
    SolCurveSolution sol = sol_solve(rel);
    std::vector<ModelPoint> out;
    out.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
      double t = sol.t * i / (n - 1);
      out.push_back(sol_translate(sol_curve(sol.dir, t), p1));
    }
    out.front() = p1;
    out.back() = p2;
    return out;
  }

  double ymin = std::min({tri.vertices[0].y, tri.vertices[1].y, tri.vertices[2].y,
                          p1.y, p2.y});
  double ymax = std::max({tri.vertices[0].y, tri.vertices[1].y, tri.vertices[2].y,
                          p1.y, p2.y});
  double yspread = std::max(ymax - ymin, 0.5);
  double ylo = ymin - 2.0 * yspread, yhi = ymax + 2.0 * yspread;

  std::vector<ModelPoint> out;
  out.reserve(static_cast<size_t>(n));
  out.push_back(p1);

  bool vertical = std::hypot(p1.x - p2.x, p1.z - p2.z) < 1e-12;
  for (int i = 1; i + 1 < n; ++i) {
    double mu = double(i) / (n - 1);
    double x, z;
    if (vertical) {
      // projections coincide: sweep the plane x = const parallel to [y,z]
      x = p1.x;
      z = p1.z + mu * (p2.z - p1.z);
    } else {
      HalfPlanePoint m1 = sol_map_m(sol_project_xz(p1));
      HalfPlanePoint m2 = sol_map_m(sol_project_xz(p2));
      double x1 = m1.x1 + mu * (m2.x1 - m1.x1);
      double x2 = m1.x2 + mu * (m2.x2 - m1.x2);
      if (x2 <= 0.0)
        throw NoIntersection("sol_connecting_curve: m-segment leaves the half-plane");
      x = x1;
      z = -std::log(x2);
    }
    auto f = [&](double y) { return surface_value(tri, ModelPoint{x, y, z}); };
    std::vector<double> roots;
    try {
      roots = scan_roots(f, ylo, yhi, 1e-12);
    } catch (const KernelError&) {
      roots.clear();
    }
    if (roots.empty())
      throw NoIntersection("sol_connecting_curve: no surface point on the y-line");
    // continuity: keep the root nearest the previous sample
    double prev_y = out.back().y;
    double best = roots[0];
    for (double y : roots)
      if (std::abs(y - prev_y) < std::abs(best - prev_y)) best = y;
    out.push_back({x, best, z});
  }
  out.push_back(p2);
  return out;
}

}  // namespace ttri
