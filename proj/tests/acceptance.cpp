// SPDX-License-Identifier: Apache-2.0
//
// Acceptance gate: ten property-based criteria, one pass/fail line each.
// Run through ctest (the CLI determinism check needs TTRI_CLI pointing at
// the built binary).

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

#include "ttri/constcurv.hpp"
#include "ttri/euclid2.hpp"
#include "ttri/harness.hpp"
#include "ttri/nil.hpp"
#include "ttri/slr.hpp"
#include "ttri/sol.hpp"
#include "ttri/surface.hpp"

using namespace ttri;

namespace {

double now_seconds() {
  using clock = std::chrono::steady_clock;
  return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

void report(int criterion, bool ok, const std::string& detail) {
  std::printf("criterion %2d: %s — %s\n", criterion, ok ? "PASS" : "FAIL",
              detail.c_str());
  std::fflush(stdout);
  CHECK_MESSAGE(ok, "criterion ", criterion, ": ", detail);
}

std::mt19937_64 make_rng(uint64_t salt) { return std::mt19937_64(90210 + salt); }

const TriangleSpec kNilFig{Geometry::Nil,
                           {{{0, 0, 0}, {-1, 1, 1}, {0.5, 1, 0.5}}}};
const TriangleSpec kNilFibreFig{Geometry::Nil,
                                {{{0, 0, 0}, {2, 0, 3}, {-1, 0, 2}}}};
const TriangleSpec kSolFig{Geometry::Sol,
                           {{{0, 0, 0}, {1.25, 0.5, 1}, {0.2, 1, 0.5}}}};
const TriangleSpec kSlrFig{
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

TEST_CASE("criterion 1: round-trip inverse problems") {
  auto rng = make_rng(1);
  std::uniform_real_distribution<double> box(-2.0, 2.0);
  double max_res = 0.0;
  double worst_time = 0.0;

  auto timed = [&](auto&& body) {
    double t0 = now_seconds();
    body();
    worst_time = std::max(worst_time, now_seconds() - t0);
  };

  timed([&] {
    for (int i = 0; i < 1000; ++i) {
      ModelPoint target{box(rng), box(rng), box(rng)};
      if (target.norm() < 1e-6) continue;
      NilCurveSolution s = nil_solve(target);
      max_res = std::max(max_res, distance_euclid(nil_curve(s.dir, s.t), target));
    }
  });
  timed([&] {
    for (int i = 0; i < 1000; ++i) {
      ModelPoint target{box(rng), box(rng), box(rng)};
      if (target.norm() < 1e-6) continue;
      SolCurveSolution s = sol_solve(target);
      max_res = std::max(max_res, distance_euclid(sol_curve(s.dir, s.t), target));
    }
  });
  timed([&] {
    std::uniform_real_distribution<double> u01(0.05, 0.95);
    int done = 0;
    while (done < 1000) {
      // cycle the three regimes
      SlrDirection d;
      d.lambda = box(rng);
      int regime = done % 3;
      d.alpha = regime == 0   ? 0.3 * u01(rng)
                : regime == 1 ? std::numbers::pi / 4.0
                              : std::numbers::pi / 2.0 - 0.4 * u01(rng);
      d.regime = regime == 0   ? SlrRegime::H2Like
                 : regime == 1 ? SlrRegime::LightLike
                               : SlrRegime::FibreLike;
      ModelPoint target = slr_curve(d, u01(rng));
      if (!slr_valid(target)) continue;
      SlrCurveSolution s = slr_solve(target);
      max_res = std::max(max_res, distance_euclid(slr_curve(s.dir, s.s), target));
      ++done;
    }
  });

  std::ostringstream d;
  d << "max residual " << max_res << ", slowest geometry " << worst_time << " s";
  report(1, max_res < 1e-10 && worst_time < 1.0, d.str());
}

TEST_CASE("criterion 2: one-parameter subgroup / additivity") {
  auto rng = make_rng(2);
  std::uniform_real_distribution<double> ang(-1.4, 1.4);
  std::uniform_real_distribution<double> par(-1.5, 1.5);
  std::uniform_real_distribution<double> sd(0.05, 0.7);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    NilDirection nd{ang(rng), ang(rng)};
    double t1 = par(rng), t2 = par(rng);
    worst = std::max(worst,
                     distance_euclid(nil_translate(nil_curve(nd, t1), nil_curve(nd, t2)),
                                     nil_curve(nd, t1 + t2)));
    SolDirection sdir{ang(rng), ang(rng)};
    worst = std::max(worst,
                     distance_euclid(sol_translate(sol_curve(sdir, t1), sol_curve(sdir, t2)),
                                     sol_curve(sdir, t1 + t2)));
    double s1 = sd(rng), s2 = sd(rng);
    double add = slr_distance({std::tan(s1), 0, 0}, {std::tan(s1 + s2), 0, 0});
    worst = std::max(worst, std::abs(add - s2));
  }
  std::ostringstream d;
  d << "max residual " << worst << " over 1000 trials";
  report(2, worst < 1e-9, d.str());
}

TEST_CASE("criterion 3: projection lemmas") {
  auto rng = make_rng(3);
  std::uniform_real_distribution<double> ang(-1.2, 1.2);
  double worst = 0.0;
  int sampled = 0;
  while (sampled < 200) {
    NilDirection nd{ang(rng), ang(rng)};
    if (std::abs(std::cos(nd.theta)) < 0.05) continue;
    PlanarPoint p0 = nil_fibre_project(nil_curve(nd, 0.2));
    PlanarPoint p1 = nil_fibre_project(nil_curve(nd, 1.0));
    PlanarPoint p2 = nil_fibre_project(nil_curve(nd, 2.4));
    worst = std::max(worst, std::abs((p1.a - p0.a) * (p2.b - p0.b) -
                                     (p1.b - p0.b) * (p2.a - p0.a)));

    SolDirection sdir{ang(rng), ang(rng)};
    if (std::abs(std::cos(sdir.phi)) < 0.05 || std::abs(sdir.theta) < 0.05)
      continue;
    for (double t : {0.3, 1.0, 2.1}) {
      HalfPlanePoint m = sol_map_m(sol_project_xz(sol_curve(sdir, t)));
      // the projected curve maps onto the half-plane line
      // x2 = 1 - x1 tan(theta)/cos(phi)
      double line = 1.0 - m.x1 * std::tan(sdir.theta) / std::cos(sdir.phi);
      worst = std::max(worst, std::abs(m.x2 - line));
    }
    ++sampled;
  }
  std::ostringstream d;
  d << "max residual " << worst << " over 200 curves";
  report(3, worst < 1e-9, d.str());
}

TEST_CASE("criterion 4: ratio-reduction lemmas") {
  auto rng = make_rng(4);
  std::uniform_real_distribution<double> box(-1.5, 1.5);
  std::uniform_real_distribution<double> cut(-0.8, 1.8);
  double worst = 0.0;
  int done = 0;
  while (done < 1000) {
    ModelPoint a{box(rng), box(rng), box(rng)};
    ModelPoint b{box(rng), box(rng), box(rng)};
    double mu_cut = cut(rng);
    if (std::abs(mu_cut) < 1e-3 || std::abs(mu_cut - 1.0) < 1e-3) continue;

    // Nil: ratio equals the Euclidean ratio of the fibre projections
    {
      ModelPoint rel = nil_translate(b, nil_inverse_translation(a));
      if (std::hypot(rel.x, rel.y) < 1e-2) continue;
      NilCurveSolution s = nil_solve(rel);
      ModelPoint p = nil_translate(nil_curve(s.dir, mu_cut * s.t), a);
      double got = nil_simple_ratio(a, p, b).value;
      double mu = segment_param({a.x, a.y}, {b.x, b.y}, {p.x, p.y});
      worst = std::max(worst, std::abs(got - euclid_ratio(mu)) /
                                  std::max(1.0, std::abs(got)));
    }
    // Sol: ratio equals the Euclidean ratio of the half-plane images
    {
      ModelPoint rel = sol_translate(b, sol_group_inverse(a));
      if (rel.norm() < 1e-2) continue;
      SolCurveSolution s = sol_solve(rel);
      TangentVector dt = s.dir.tangent();
      if (std::abs(dt.u) < 1e-2 || std::abs(dt.w) < 1e-2) continue;
      ModelPoint p = sol_translate(sol_curve(s.dir, mu_cut * s.t), a);
      double got = sol_simple_ratio(a, p, b).value;
      auto m = [](const ModelPoint& q) {
        HalfPlanePoint h = sol_map_m(sol_project_xz(q));
        return P2{h.x1, h.x2};
      };
      double mu = segment_param(m(a), m(b), m(p));
      worst = std::max(worst, std::abs(got - euclid_ratio(mu)) /
                                  std::max(1.0, std::abs(got)));
    }
    ++done;
  }
  std::ostringstream d;
  d << "max relative residual " << worst << " over 1000 triples (interior and exterior)";
  report(4, worst < 1e-10, d.str());
}

TEST_CASE("criterion 5: Nil and Sol Ceva/Menelaus products") {
  bool ok = true;
  std::ostringstream d;
  for (Geometry g : {Geometry::Nil, Geometry::Sol}) {
    double t0 = now_seconds();
    SuiteSummary s = random_suite(g, 1000, 1789);
    double dt = now_seconds() - t0;
    ok = ok && s.failures == 0 && s.max_ceva_deviation < 1e-9 &&
         s.max_menelaus_deviation < 1e-9 && dt < 10.0;
    d << geometry_name(g) << ": ceva " << s.max_ceva_deviation << ", menelaus "
      << s.max_menelaus_deviation << ", " << dt << " s, resampled "
      << s.resampled << "; ";
  }
  report(5, ok, d.str());
}

TEST_CASE("criterion 6: SL2R~ ratio routes and verdict") {
  SuiteSummary s = random_suite(Geometry::Slr, 1000, 3111);
  bool euclid_ok =
      s.failures == 0 && s.max_ceva_deviation < 1e-12 && s.max_menelaus_deviation < 1e-12;
  bool alt_ok = s.alt_failures == 0 &&
                s.alt_max_ceva_deviation < 1e-9 &&
                s.alt_max_menelaus_deviation < 1e-9;
  std::ostringstream d;
  d << "euclidean route: max ceva " << s.max_ceva_deviation << ", menelaus "
    << s.max_menelaus_deviation << " (" << (euclid_ok ? "pass" : "fail")
    << "); arc-length-weighted route: max ceva " << s.alt_max_ceva_deviation
    << ", menelaus " << s.alt_max_menelaus_deviation << ", failures "
    << s.alt_failures << "/2000 (" << (alt_ok ? "pass" : "fail") << ")";
  report(6, euclid_ok, d.str());
  std::printf(
      "criterion  6 verdict: the Euclidean simple ratio satisfies Ceva/Menelaus "
      "to %0.2e; the arc-length-weighted ratio %s over the same %d "
      "configurations.\n",
      std::max(s.max_ceva_deviation, s.max_menelaus_deviation),
      alt_ok ? "also satisfies them" : "violates them", s.trials);
}

TEST_CASE("criterion 7: constant-curvature reference") {
  bool ok = true;
  std::ostringstream d;
  for (CCKind kind : {CCKind::Spherical, CCKind::Hyperbolic}) {
    std::vector<TheoremReport> reports = cc_verify_ceva_menelaus(kind, 555, 1000);
    double worst = 0.0;
    for (const TheoremReport& r : reports) worst = std::max(worst, r.deviation);
    ok = ok && worst < 1e-9;
    d << (kind == CCKind::Spherical ? "S" : "H") << ": max deviation " << worst
      << "; ";
  }
  report(7, ok, d.str());
}

TEST_CASE("criterion 8: translation-triangle surfaces") {
  bool ok = true;
  std::ostringstream d;

  double side_worst = 0.0;
  for (const TriangleSpec* tri : {&kNilFig, &kSolFig})
    for (int side = 0; side < 3; ++side)
      for (double mu : {0.1, 0.25, 0.5, 0.75, 0.9})
        side_worst = std::max(
            side_worst, std::abs(surface_value(*tri, side_point(*tri, side, mu))));
  ok = ok && side_worst < 1e-8;
  d << "side-sample |F| " << side_worst;

  double plane_worst = 0.0;
  ModelPoint e1 = kSlrFig.vertices[1] - kSlrFig.vertices[0];
  ModelPoint e2 = kSlrFig.vertices[2] - kSlrFig.vertices[0];
  for (double s : {0.2, 0.5, 0.7})
    for (double t : {0.1, 0.25})
      plane_worst = std::max(
          plane_worst,
          std::abs(surface_value(kSlrFig, kSlrFig.vertices[0] + s * e1 + t * e2)));
  ok = ok && plane_worst < 1e-10;
  d << "; SL2R~ plane residual " << plane_worst;

  Mesh fib = surface_mesh(kNilFibreFig, 16);
  double coplanar = 0.0;
  for (const ModelPoint& v : fib.vertices)
    coplanar = std::max(coplanar, std::abs(v.y));
  ok = ok && coplanar < 1e-9;
  d << "; fibre-type coplanarity " << coplanar;

  double t0 = now_seconds();
  Mesh nil_mesh = surface_mesh(kNilFig, 64);
  Mesh sol_mesh = surface_mesh(kSolFig, 64);
  double dt = now_seconds() - t0;
  double cov = std::min(nil_mesh.coverage, sol_mesh.coverage);
  ok = ok && cov >= 0.95 && dt < 30.0;
  d << "; 64x64 coverage " << cov << " in " << dt << " s";

  report(8, ok, d.str());
}

TEST_CASE("criterion 9: isometry invariance of distances") {
  auto rng = make_rng(9);
  std::uniform_real_distribution<double> box(-1.5, 1.5);
  std::uniform_int_distribution<int> d4(0, 7);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    ModelPoint a{box(rng), box(rng), box(rng)};
    ModelPoint b{box(rng), box(rng), box(rng)};
    ModelPoint g{box(rng), box(rng), box(rng)};
    double omega = box(rng);

    double dn = nil_distance(a, b);
    worst = std::max(worst, std::abs(dn - nil_distance(nil_translate(a, g),
                                                       nil_translate(b, g))));
    worst = std::max(worst, std::abs(dn - nil_distance(nil_rotation(omega, a),
                                                       nil_rotation(omega, b))));

    double ds = sol_distance(a, b);
    worst = std::max(worst, std::abs(ds - sol_distance(sol_translate(a, g),
                                                       sol_translate(b, g))));
    int k = d4(rng);
    worst = std::max(worst, std::abs(ds - sol_distance(sol_stabilizer(k, a),
                                                       sol_stabilizer(k, b))));
  }
  std::ostringstream d;
  d << "max deviation " << worst << " over 1000 trials";
  report(9, worst < 1e-9, d.str());
}

TEST_CASE("criterion 10: CLI determinism") {
  const char* cli = std::getenv("TTRI_CLI");
  if (!cli) {
    report(10, false, "TTRI_CLI not set; run through ctest");
    return;
  }
  auto run = [&](const std::string& out) {
    std::string cmd = std::string("\"") + cli +
                      "\" suite --geometry sol --trials 40 --seed 11 --output " + out;
    return std::system(cmd.c_str());
  };
  int rc1 = run("acceptance_cli_a.json");
  int rc2 = run("acceptance_cli_b.json");
  auto slurp = [](const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
  };
  std::string a = slurp("acceptance_cli_a.json");
  std::string b = slurp("acceptance_cli_b.json");
  bool ok = rc1 == 0 && rc2 == 0 && !a.empty() && a == b;
  std::ostringstream d;
  d << "two runs, " << a.size() << " bytes, byte-identical: " << (a == b ? "yes" : "no");
  report(10, ok, d.str());
}
