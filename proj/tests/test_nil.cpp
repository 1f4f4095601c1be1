// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "ttri/euclid2.hpp"
#include "ttri/nil.hpp"

using namespace ttri;

namespace {
std::mt19937_64 rng(20260823);
std::uniform_real_distribution<double> box(-2.0, 2.0);
ModelPoint random_point() { return {box(rng), box(rng), box(rng)}; }
}  // namespace

TEST_CASE("translation and its inverse") {
  ModelPoint a = random_point();
  ModelPoint tau = nil_inverse_translation(a);
  ModelPoint o = nil_translate(a, tau);
  CHECK(o.norm() < 1e-14);
  // translation composes points: moving the origin by a gives a
  ModelPoint back = nil_translate(ModelPoint{}, a);
  CHECK(distance_euclid(back, a) < 1e-14);
}

TEST_CASE("solve (1,1,1): direction (2/3,2/3,1/3) at t = 3/2") {
  NilCurveSolution s = nil_solve({1, 1, 1});
  TangentVector d = s.dir.tangent();
  CHECK(s.t == doctest::Approx(1.5));
  CHECK(d.u == doctest::Approx(2.0 / 3.0));
  CHECK(d.v == doctest::Approx(2.0 / 3.0));
  CHECK(d.w == doctest::Approx(1.0 / 3.0));
  CHECK(distance_euclid(nil_curve(s.dir, s.t), {1, 1, 1}) < 1e-14);
}

TEST_CASE("solve throws on the origin") {
  CHECK_THROWS_AS(nil_solve({0, 0, 0}), DegenerateTarget);
}

TEST_CASE("round trip over random targets") {
  for (int i = 0; i < 500; ++i) {
    ModelPoint target = random_point();
    if (target.norm() < 1e-6) continue;
    NilCurveSolution s = nil_solve(target);
    CHECK(distance_euclid(nil_curve(s.dir, s.t), target) < 1e-12);
    CHECK(s.t >= 0.0);
  }
}

TEST_CASE("curves are one-parameter subgroups") {
  std::uniform_real_distribution<double> ang(-1.5, 1.5);
  for (int i = 0; i < 200; ++i) {
    NilDirection d{ang(rng), ang(rng) / 1.1};
    double t1 = box(rng), t2 = box(rng);
    ModelPoint comp = nil_translate(nil_curve(d, t1), nil_curve(d, t2));
    CHECK(distance_euclid(comp, nil_curve(d, t1 + t2)) < 1e-12);
  }
}

TEST_CASE("rotation fixes the origin and preserves distance") {
  CHECK(distance_euclid(nil_rotation(0.7, {0, 0, 0}), {0, 0, 0}) == 0.0);
  // omega = 0 is the identity (the quadratic z terms cancel)
  ModelPoint p = random_point();
  CHECK(distance_euclid(nil_rotation(0.0, p), p) < 1e-14);
  for (int i = 0; i < 200; ++i) {
    ModelPoint a = random_point(), b = random_point();
    double omega = box(rng);
    double d0 = nil_distance(a, b);
    double d1 = nil_distance(nil_rotation(omega, a), nil_rotation(omega, b));
    CHECK(std::abs(d0 - d1) < 1e-10);
  }
}

TEST_CASE("distance is invariant under translations") {
  for (int i = 0; i < 200; ++i) {
    ModelPoint a = random_point(), b = random_point(), g = random_point();
    double d0 = nil_distance(a, b);
    double d1 = nil_distance(nil_translate(a, g), nil_translate(b, g));
    CHECK(std::abs(d0 - d1) < 1e-10);
  }
}

TEST_CASE("fibre projections of a non-fibre curve are collinear") {
  for (int i = 0; i < 50; ++i) {
    NilDirection d{box(rng), 1.2 * std::atan(box(rng))};
    PlanarPoint p0 = nil_fibre_project(nil_curve(d, 0.3));
    PlanarPoint p1 = nil_fibre_project(nil_curve(d, 1.1));
    PlanarPoint p2 = nil_fibre_project(nil_curve(d, 2.7));
    double cross = (p1.a - p0.a) * (p2.b - p0.b) - (p1.b - p0.b) * (p2.a - p0.a);
    CHECK(std::abs(cross) < 1e-12);
  }
}

TEST_CASE("simple ratio: fibre segment and projected-ratio reduction") {
  // fibre case is the plain parameter ratio
  SignedRatio r = nil_simple_ratio({0, 0, 0}, {0, 0, 1}, {0, 0, 3});
  CHECK(r.value == doctest::Approx(0.5));
  CHECK(r.between);

  // general case equals the Euclidean ratio of the fibre projections,
  // including exterior division points
  std::uniform_real_distribution<double> cut(-0.8, 1.8);
  for (int i = 0; i < 500; ++i) {
    ModelPoint a = random_point(), b = random_point();
    ModelPoint rel = nil_translate(b, nil_inverse_translation(a));
    if (std::hypot(rel.x, rel.y) < 1e-3) continue;  // skip fibre sides
    NilCurveSolution s = nil_solve(rel);
    double tp = cut(rng) * s.t;
    if (std::abs(tp - s.t) < 1e-6 || std::abs(tp) < 1e-9) continue;
    ModelPoint p = nil_translate(nil_curve(s.dir, tp), a);
    SignedRatio got = nil_simple_ratio(a, p, b);
    P2 pa{a.x, a.y}, pb{b.x, b.y}, pp{p.x, p.y};
    double mu = segment_param(pa, pb, pp);
    CHECK(std::abs(got.value - euclid_ratio(mu)) <
          1e-10 * std::max(1.0, std::abs(got.value)));
    CHECK(got.between == (mu > 0 && mu < 1));
  }
}

TEST_CASE("simple ratio rejects points off the curve") {
  CHECK_THROWS_AS(nil_simple_ratio({0, 0, 0}, {0.5, 0.7, 0.9}, {1, 1, 1}),
                  NotOnCurve);
}
