// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ttri/nil.hpp"
#include "ttri/sol.hpp"
#include "ttri/surface.hpp"

using namespace ttri;

namespace {

const TriangleSpec kNilTri{Geometry::Nil,
                           {{{0, 0, 0}, {-1, 1, 1}, {0.5, 1, 0.5}}}};
const TriangleSpec kNilFibreTypeTri{Geometry::Nil,
                                    {{{0, 0, 0}, {2, 0, 3}, {-1, 0, 2}}}};
const TriangleSpec kSolTri{Geometry::Sol,
                           {{{0, 0, 0}, {1.25, 0.5, 1}, {0.2, 1, 0.5}}}};
const TriangleSpec kSlrTri{
    Geometry::Slr, {{{0, 0, 0}, {0.5, 0.75, 0}, {2.0 / 3.0, 0.25, -1.0 / 3.0}}}};

ModelPoint side_point(const TriangleSpec& tri, int side, double mu) {
  const ModelPoint& a = tri.vertices[side];
  const ModelPoint& b = tri.vertices[(side + 1) % 3];
  switch (tri.geometry) {
    case Geometry::Nil: {
      NilCurveSolution s = nil_solve(nil_translate(b, nil_inverse_translation(a)));
      return nil_translate(nil_curve(s.dir, mu * s.t), a);
    }
    case Geometry::Sol: {
      SolCurveSolution s = sol_solve(sol_translate(b, sol_group_inverse(a)));
      return sol_translate(sol_curve(s.dir, mu * s.t), a);
    }
    default:
      return a + mu * (b - a);
  }
}

}  // namespace

TEST_CASE("side curves lie on the surface") {
  for (const TriangleSpec* tri : {&kNilTri, &kSolTri}) {
    for (int side = 0; side < 3; ++side)
      for (double mu : {0.15, 0.35, 0.5, 0.72, 0.9}) {
        ModelPoint p = side_point(*tri, side, mu);
        CHECK(std::abs(surface_value(*tri, p)) < 1e-8);
      }
  }
}

TEST_CASE("SL2R~ surface is the vertex plane") {
  ModelPoint e1 = kSlrTri.vertices[1] - kSlrTri.vertices[0];
  ModelPoint e2 = kSlrTri.vertices[2] - kSlrTri.vertices[0];
  for (double s : {0.2, 0.5, 0.8})
    for (double t : {0.1, 0.3}) {
      ModelPoint p = kSlrTri.vertices[0] + s * e1 + t * e2;
      CHECK(std::abs(surface_value(kSlrTri, p)) < 1e-10);
    }
  // off-plane points are off the surface
  ModelPoint off = kSlrTri.vertices[0] + 0.3 * e1 + 0.3 * e2;
  off.z += 0.2;
  CHECK(std::abs(surface_value(kSlrTri, off)) > 1e-4);
}

TEST_CASE("fibre-type Nil triangle gives a planar surface") {
  Mesh m = surface_mesh(kNilFibreTypeTri, 16);
  REQUIRE(!m.vertices.empty());
  for (size_t i = 0; i < m.vertices.size(); ++i) {
    // surface plane is the [x,z] plane of the vertices: y stays 0
    CHECK(std::abs(m.vertices[i].y) < 1e-9);
    CHECK(std::abs(m.residuals[i]) < 1e-9);
  }
}

TEST_CASE("meshing covers the footprint") {
  for (const TriangleSpec* tri : {&kNilTri, &kSolTri}) {
    Mesh m = surface_mesh(*tri, 32);
    CHECK(m.coverage >= 0.95);
    double max_res = 0.0;
    for (double r : m.residuals) max_res = std::max(max_res, std::abs(r));
    CHECK(max_res < 1e-7);
    CHECK(!m.triangles.empty());
  }
  Mesh slr = surface_mesh(kSlrTri, 16);
  CHECK(slr.coverage == 1.0);
  for (double r : slr.residuals) CHECK(std::abs(r) < 1e-10);
}

TEST_CASE("surface_value rejects vertices") {
  CHECK_THROWS_AS(surface_value(kNilTri, kNilTri.vertices[1]), DegeneratePoint);
}

TEST_CASE("Sol connecting curve stays on the surface") {
  ModelPoint p1 = side_point(kSolTri, 0, 0.4);
  ModelPoint p2 = side_point(kSolTri, 1, 0.6);
  std::vector<ModelPoint> curve = sol_connecting_curve(kSolTri, p1, p2, 33);
  REQUIRE(curve.size() == 33);
  CHECK(distance_euclid(curve.front(), p1) < 1e-12);
  CHECK(distance_euclid(curve.back(), p2) < 1e-12);
  for (size_t i = 1; i + 1 < curve.size(); ++i)
    CHECK(std::abs(surface_value(kSolTri, curve[i])) < 1e-9);
}

TEST_CASE("Sol connecting curve rejects off-surface endpoints") {
  ModelPoint p1 = side_point(kSolTri, 0, 0.4);
  ModelPoint off{0.9, -0.9, 0.9};
  REQUIRE(std::abs(surface_value(kSolTri, off)) > 1e-3);
  CHECK_THROWS_AS(sol_connecting_curve(kSolTri, p1, off, 9), NotOnSurface);
}

TEST_CASE("planar Sol triangle: connecting curve is the translation curve") {
  TriangleSpec planar{Geometry::Sol, {{{0, 0, 0}, {1, 0, 0.8}, {-0.5, 0, 0.4}}}};
  ModelPoint p1 = side_point(planar, 0, 0.3);
  ModelPoint p2 = side_point(planar, 1, 0.7);
  std::vector<ModelPoint> curve = sol_connecting_curve(planar, p1, p2, 17);
  SolCurveSolution s = sol_solve(sol_translate(p2, sol_group_inverse(p1)));
  for (size_t i = 0; i < curve.size(); ++i) {
    double t = s.t * double(i) / (curve.size() - 1);
    ModelPoint expect = sol_translate(sol_curve(s.dir, t), p1);
    CHECK(distance_euclid(curve[i], expect) < 1e-10);
  }
}
