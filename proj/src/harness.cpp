// SPDX-License-Identifier: Apache-2.0

#include "ttri/harness.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "ttri/euclid2.hpp"
#include "ttri/nil.hpp"
#include "ttri/slr.hpp"
#include "ttri/sol.hpp"

namespace ttri {

namespace {

struct SideIndex {
  int from, to;
};
constexpr std::array<SideIndex, 3> kSides{{{0, 1}, {1, 2}, {2, 0}}};

// Reduced planar picture of a triangle plus the side lift back to the
// model. The reduction is affine-faithful per side: the reduced position
// of a side point is affine in the lift parameter used below.
struct Reduction {
  std::array<P2, 3> verts;
  bool nil_planar = false;     // Nil fibre-type triangle, in-plane picture
  int nil_plane_axis = 0;      // 0: [x,z] (coords (x,z)), 1: [y,z] (coords (y,z))
  ModelPoint nil_origin_shift; // translation applied before the planar picture
};

Reduction reduce(const TriangleSpec& tri, const Tolerances& tol) {
  Reduction red;
  switch (tri.geometry) {
    case Geometry::Nil: {
      for (int i = 0; i < 3; ++i) {
        PlanarPoint p = nil_fibre_project(tri.vertices[i]);
        red.verts[i] = {p.a, p.b};
      }
      double area = cross2(red.verts[1] - red.verts[0], red.verts[2] - red.verts[0]);
      if (std::abs(area) > 1e-9) return red;
      // fibre-type: bring A0 to the origin and use the coordinate plane
      ModelPoint shift = nil_inverse_translation(tri.vertices[0]);
      std::array<ModelPoint, 3> b;
      for (int i = 0; i < 3; ++i) b[i] = nil_translate(tri.vertices[i], shift);
      bool in_xz = std::abs(b[1].y) < tol.eps_alg && std::abs(b[2].y) < tol.eps_alg;
      bool in_yz = std::abs(b[1].x) < tol.eps_alg && std::abs(b[2].x) < tol.eps_alg;
      if (!in_xz && !in_yz)
        throw DegenerateTriangle(
            "reduce: Nil triangle has a degenerate fibre projection and is "
            "not of fibre type");
      red.nil_planar = true;
      red.nil_plane_axis = in_xz ? 0 : 1;
      red.nil_origin_shift = shift;
      for (int i = 0; i < 3; ++i)
        red.verts[i] = in_xz ? P2{b[i].x, b[i].z} : P2{b[i].y, b[i].z};
      double parea = cross2(red.verts[1] - red.verts[0], red.verts[2] - red.verts[0]);
      if (std::abs(parea) < 1e-9)
        throw DegenerateTriangle("reduce: Nil vertices lie on one translation curve");
      return red;
    }
    case Geometry::Sol: {
      for (int i = 0; i < 3; ++i) {
        HalfPlanePoint m = sol_map_m(sol_project_xz(tri.vertices[i]));
        red.verts[i] = {m.x1, m.x2};
      }
      double area = cross2(red.verts[1] - red.verts[0], red.verts[2] - red.verts[0]);
      if (std::abs(area) < 1e-9)
        throw DegenerateTriangle("reduce: Sol m-picture is degenerate");
      // general position: no side may lie in the [y,z] plane (its reduced
      // image would not carry the side's simple ratio)
      for (const SideIndex& s : kSides) {
        ModelPoint rel = sol_translate(tri.vertices[s.to],
                                       sol_group_inverse(tri.vertices[s.from]));
        SolCurveSolution sol = sol_solve(rel);
        TangentVector d = sol.dir.tangent();
        if (std::abs(d.u) < 1e-9 && std::abs(d.v) > 1e-9 && std::abs(d.w) > 1e-9)
          throw DegenerateTriangle("reduce: Sol side lies in the [y,z] plane");
      }
      return red;
    }
    case Geometry::Slr: {
      for (const ModelPoint& v : tri.vertices)
        if (!slr_valid(v))
          throw InvalidPoint("reduce: SL2R~ vertex outside the model");
      ModelPoint e1 = tri.vertices[1] - tri.vertices[0];
      ModelPoint e2 = tri.vertices[2] - tri.vertices[0];
      ModelPoint n{e1.y * e2.z - e1.z * e2.y, e1.z * e2.x - e1.x * e2.z,
                   e1.x * e2.y - e1.y * e2.x};
      if (n.norm() < 1e-9)
        throw DegenerateTriangle("reduce: SL2R~ vertices are collinear");
      red.verts = {P2{0, 0}, P2{1, 0}, P2{0, 1}};  // affine plane coordinates
      return red;
    }
    default:
      throw KernelError("reduce: unsupported geometry");
  }
}

// Lift the reduced division point at parameter mu on side (from -> to).
DivisionPoint lift_side_point(const TriangleSpec& tri, const Reduction& red,
                              int side, double mu) {
  const ModelPoint& a = tri.vertices[kSides[side].from];
  const ModelPoint& b = tri.vertices[kSides[side].to];
  DivisionPoint d;
  d.mu = mu;
  switch (tri.geometry) {
    case Geometry::Nil: {
      ModelPoint rel = nil_translate(b, nil_inverse_translation(a));
      NilCurveSolution sol = nil_solve(rel);
      d.t_total = sol.t;
      d.t = mu * sol.t;  // reduced coordinates are affine in t
      d.point = nil_translate(nil_curve(sol.dir, d.t), a);
      return d;
    }
    case Geometry::Sol: {
      ModelPoint rel = sol_translate(b, sol_group_inverse(a));
      SolCurveSolution sol = sol_solve(rel);
      d.t_total = sol.t;
      double w = std::sin(sol.dir.theta);
      if (std::abs(w) > 1e-12) {
        // m-image is affine in tau = e^{-w t}
        double tau_b = std::exp(-w * sol.t);
        double tau = 1.0 + mu * (tau_b - 1.0);
        if (tau <= 0.0)
          throw LiftFailure("lift: division point beyond the ideal point of the m-line");
        d.t = -std::log(tau) / w;
      } else {
        d.t = mu * sol.t;
      }
      d.point = sol_translate(sol_curve(sol.dir, d.t), a);
      return d;
    }
    case Geometry::Slr: {
      d.point = a + mu * (b - a);
      if (!slr_valid(d.point))
        throw LiftFailure("lift: SL2R~ division point outside the model");
      d.t_total = slr_distance(a, b);
      d.t = (mu >= 0.0 ? 1.0 : -1.0) * slr_distance(a, d.point);
      return d;
    }
    default:
      throw KernelError("lift: unsupported geometry");
  }
}

SignedRatio side_simple_ratio(const TriangleSpec& tri, int side,
                              const ModelPoint& p, const Tolerances& tol) {
  const ModelPoint& a = tri.vertices[kSides[side].from];
  const ModelPoint& b = tri.vertices[kSides[side].to];
  switch (tri.geometry) {
    case Geometry::Nil: return nil_simple_ratio(a, p, b, tol);
    case Geometry::Sol: return sol_simple_ratio(a, p, b, tol);
    case Geometry::Slr: return slr_euclid_ratio(a, p, b, tol);
    default: throw KernelError("side_simple_ratio: unsupported geometry");
  }
}

std::string trace_reduced(const Reduction& red,
                          const std::array<DivisionPoint, 3>& div) {
  std::ostringstream os;
  os << "reduced=[";
  for (int i = 0; i < 3; ++i)
    os << (i ? ";" : "") << "(" << red.verts[i].x << "," << red.verts[i].y << ")";
  os << "] mu=[" << div[0].mu << "," << div[1].mu << "," << div[2].mu
     << "] t=[" << div[0].t << "/" << div[0].t_total << "," << div[1].t << "/"
     << div[1].t_total << "," << div[2].t << "/" << div[2].t_total << "]";
  return os.str();
}

}  // namespace

CevaConfig build_ceva(const TriangleSpec& triangle,
                      const std::array<double, 3>& weights,
                      const Tolerances& tol) {
  Reduction red = reduce(triangle, tol);
  CevaDivision cd = ceva_divide(red.verts[0], red.verts[1], red.verts[2],
                                weights[0], weights[1], weights[2]);
  CevaConfig cfg;
  cfg.triangle = triangle;
  cfg.weights = weights;
  for (int i = 0; i < 3; ++i) {
    if (!(cd.mu[i] > 0.0 && cd.mu[i] < 1.0))
      throw DegenerateConfiguration("build_ceva: division point not interior");
    cfg.division[i] = lift_side_point(triangle, red, i, cd.mu[i]);
  }
  cfg.trace = trace_reduced(red, cfg.division);
  return cfg;
}

MenelausConfig build_menelaus(const TriangleSpec& triangle, double mu01,
                              double mu12, const Tolerances& tol) {
  Reduction red = reduce(triangle, tol);
  MenelausDivision md =
      menelaus_divide(red.verts[0], red.verts[1], red.verts[2], mu01, mu12);
  MenelausConfig cfg;
  cfg.triangle = triangle;
  cfg.mu01 = mu01;
  cfg.mu12 = mu12;
  int exterior = 0;
  for (int i = 0; i < 3; ++i) {
    if (!(md.mu[i] > 0.0 && md.mu[i] < 1.0)) ++exterior;
    cfg.division[i] = lift_side_point(triangle, red, i, md.mu[i]);
  }
  if (exterior != 1 && exterior != 3)
    throw DegenerateConfiguration("build_menelaus: exterior-point parity violated");
  cfg.trace = trace_reduced(red, cfg.division);
  return cfg;
}

namespace {

TheoremReport verify_impl(const TriangleSpec& tri,
                          const std::array<DivisionPoint, 3>& division,
                          ConfigKind kind, const std::string& trace,
                          const Tolerances& tol) {
  TheoremReport rep;
  rep.geometry = tri.geometry;
  rep.kind = kind;
  rep.trace = trace;
  for (int i = 0; i < 3; ++i)
    rep.ratios[i] = side_simple_ratio(tri, i, division[i].point, tol);
  if (tri.geometry == Geometry::Slr) {
    rep.has_alt = true;
    for (int i = 0; i < 3; ++i)
      rep.alt_ratios[i] =
          slr_simple_ratio(tri.vertices[kSides[i].from], division[i].point,
                           tri.vertices[kSides[i].to], tol);
  }
  finish_report(rep);
  return rep;
}

}  // namespace

TheoremReport verify(const CevaConfig& config, const Tolerances& tol) {
  return verify_impl(config.triangle, config.division, ConfigKind::Ceva,
                     config.trace, tol);
}

TheoremReport verify(const MenelausConfig& config, const Tolerances& tol) {
  return verify_impl(config.triangle, config.division, ConfigKind::Menelaus,
                     config.trace, tol);
}

SuiteSummary random_suite(Geometry geometry, int trials, uint64_t seed,
                          const Tolerances& tol) {
  SuiteSummary sum;
  sum.geometry = geometry;
  sum.trials = trials;
  if (trials < 1) return sum;

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(-1.2, 1.2);
  std::uniform_real_distribution<double> weight(0.15, 1.0);
  std::uniform_real_distribution<double> cut(0.2, 0.8);

  double ceva_sum = 0.0, men_sum = 0.0;
  for (int trial = 0; trial < trials; ++trial) {
    for (int attempt = 0;; ++attempt) {
      if (attempt > 1024)
        throw DegenerateConfiguration("random_suite: resampling did not converge");
      TriangleSpec tri;
      tri.geometry = geometry;
      for (ModelPoint& v : tri.vertices) v = {coord(rng), coord(rng), coord(rng)};
      if (geometry == Geometry::Sol) {
        // the reduction is stated from the origin
        ModelPoint g = sol_group_inverse(tri.vertices[0]);
        for (ModelPoint& v : tri.vertices) v = sol_translate(v, g);
      }
      if (geometry == Geometry::Slr) {
        bool valid = true;
        for (const ModelPoint& v : tri.vertices) valid = valid && slr_valid(v);
        if (!valid) {
          ++sum.resampled;
          continue;
        }
      }
      std::array<double, 3> w{weight(rng), weight(rng), weight(rng)};
      double mu01 = cut(rng), mu12 = cut(rng);
      try {
        // conditioning guard: reduced picture must not be a sliver
        Reduction red = reduce(tri, tol);
        double area = cross2(red.verts[1] - red.verts[0], red.verts[2] - red.verts[0]);
        double peri = norm2(red.verts[1] - red.verts[0]) +
                      norm2(red.verts[2] - red.verts[1]) +
                      norm2(red.verts[0] - red.verts[2]);
        if (std::abs(area) < 0.02 * peri * peri / 16.0 || std::abs(area) < 1e-4)
          throw DegenerateTriangle("random_suite: sliver triangle");

        CevaConfig ceva = build_ceva(tri, w, tol);
        MenelausConfig men = build_menelaus(tri, mu01, mu12, tol);
        TheoremReport cr = verify(ceva, tol);
        TheoremReport mr = verify(men, tol);

        sum.max_ceva_deviation = std::max(sum.max_ceva_deviation, cr.deviation);
        sum.max_menelaus_deviation =
            std::max(sum.max_menelaus_deviation, mr.deviation);
        ceva_sum += cr.deviation;
        men_sum += mr.deviation;
        if (cr.deviation > tol.eps_theorem) ++sum.failures;
        if (mr.deviation > tol.eps_theorem) ++sum.failures;
        if (geometry == Geometry::Slr) {
          sum.has_alt = true;
          sum.alt_max_ceva_deviation =
              std::max(sum.alt_max_ceva_deviation, cr.alt_deviation);
          sum.alt_max_menelaus_deviation =
              std::max(sum.alt_max_menelaus_deviation, mr.alt_deviation);
          if (cr.alt_deviation > tol.eps_theorem) ++sum.alt_failures;
          if (mr.alt_deviation > tol.eps_theorem) ++sum.alt_failures;
        }
        sum.reports.push_back(std::move(cr));
        sum.reports.push_back(std::move(mr));
        break;
      } catch (const KernelError&) {
        ++sum.resampled;
        continue;
      }
    }
  }
  sum.mean_ceva_deviation = ceva_sum / trials;
  sum.mean_menelaus_deviation = men_sum / trials;
  return sum;
}

}  // namespace ttri
