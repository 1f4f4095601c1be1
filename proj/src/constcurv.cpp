// SPDX-License-Identifier: Apache-2.0

#include "ttri/constcurv.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "ttri/euclid2.hpp"

namespace ttri {

namespace {

Geometry cc_geometry(CCKind kind) {
  switch (kind) {
    case CCKind::Euclidean: return Geometry::E3;
    case CCKind::Spherical: return Geometry::S3;
    case CCKind::Hyperbolic: return Geometry::H3;
  }
  return Geometry::E3;
}

// Distance between two chart points after lifting to the curved model.
double chart_distance(CCKind kind, const P2& a, const P2& b) {
  switch (kind) {
    case CCKind::Euclidean:
      return norm2(b - a);
    case CCKind::Spherical: {
      // gnomonic lift (x, y, 1)/sqrt(1 + x^2 + y^2)
      double na = std::sqrt(1.0 + dot2(a, a));
      double nb = std::sqrt(1.0 + dot2(b, b));
      double d = (dot2(a, b) + 1.0) / (na * nb);
      return std::acos(std::clamp(d, -1.0, 1.0));
    }
    case CCKind::Hyperbolic: {
      // Klein lift (1, x, y)/sqrt(1 - x^2 - y^2), Minkowski form
      double ma = std::sqrt(1.0 - dot2(a, a));
      double mb = std::sqrt(1.0 - dot2(b, b));
      double d = (1.0 - dot2(a, b)) / (ma * mb);
      return std::acosh(std::max(d, 1.0));
    }
  }
  return 0.0;
}

bool chart_ok(CCKind kind, const P2& p) {
  switch (kind) {
    case CCKind::Euclidean: return true;
    case CCKind::Spherical: return dot2(p, p) < 25.0;   // keeps arcs < pi
    case CCKind::Hyperbolic: return dot2(p, p) < 0.94;  // inside the disk
  }
  return false;
}

SignedRatio side_ratio(CCKind kind, const P2& a, const P2& d, const P2& b,
                       double mu) {
  return cc_simple_ratio(kind, chart_distance(kind, a, d),
                         chart_distance(kind, d, b), mu > 0.0 && mu < 1.0);
}

}  // namespace

SignedRatio cc_simple_ratio(CCKind kind, double dAP, double dPB, bool between) {
  if (dPB <= 0.0) throw ZeroDenominator("cc_simple_ratio: dPB must be positive");
  if (kind == CCKind::Spherical &&
      (dAP > std::numbers::pi || dPB > std::numbers::pi))
    throw DegenerateConfiguration("cc_simple_ratio: spherical arc exceeds pi");
  double num = dAP, den = dPB;
  if (kind == CCKind::Spherical) {
    num = std::sin(dAP);
    den = std::sin(dPB);
  } else if (kind == CCKind::Hyperbolic) {
    num = std::sinh(dAP);
    den = std::sinh(dPB);
  }
  if (den == 0.0) throw ZeroDenominator("cc_simple_ratio: zero weight");
  SignedRatio r;
  r.geometry = cc_geometry(kind);
  r.between = between;
  r.value = between ? num / den : -num / den;
  return r;
}

std::vector<TheoremReport> cc_verify_ceva_menelaus(CCKind kind, uint64_t seed,
                                                   int trials) {
  if (trials < 1)
    throw DegenerateConfiguration("cc_verify_ceva_menelaus: trials must be >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(-0.75, 0.75);
  std::uniform_real_distribution<double> weight(0.15, 1.0);
  std::uniform_real_distribution<double> cut(0.2, 0.8);

  std::vector<TheoremReport> out;
  out.reserve(static_cast<size_t>(trials) * 2);
  for (int trial = 0; trial < trials; ++trial) {
    for (int attempt = 0;; ++attempt) {
      if (attempt > 256)
        throw DegenerateConfiguration(
            "cc_verify_ceva_menelaus: resampling did not converge");
      P2 a0{coord(rng), coord(rng)};
      P2 a1{coord(rng), coord(rng)};
      P2 a2{coord(rng), coord(rng)};
      if (std::abs(cross2(a1 - a0, a2 - a0)) < 1e-6) continue;
      double w0 = weight(rng), w1 = weight(rng), w2 = weight(rng);
      double mu01 = cut(rng), mu12 = cut(rng);
      try {
        CevaDivision cd = ceva_divide(a0, a1, a2, w0, w1, w2);
        MenelausDivision md = menelaus_divide(a0, a1, a2, mu01, mu12);
        bool ok = true;
        for (const P2& p : {a0, a1, a2, cd.point[0], cd.point[1], cd.point[2],
                            md.point[0], md.point[1], md.point[2]})
          ok = ok && chart_ok(kind, p);
        if (!ok) continue;

        TheoremReport ceva;
        ceva.geometry = cc_geometry(kind);
        ceva.kind = ConfigKind::Ceva;
        ceva.ratios[0] = side_ratio(kind, a0, cd.point[0], a1, cd.mu[0]);
        ceva.ratios[1] = side_ratio(kind, a1, cd.point[1], a2, cd.mu[1]);
        ceva.ratios[2] = side_ratio(kind, a2, cd.point[2], a0, cd.mu[2]);
        finish_report(ceva);

        TheoremReport men;
        men.geometry = cc_geometry(kind);
        men.kind = ConfigKind::Menelaus;
        men.ratios[0] = side_ratio(kind, a0, md.point[0], a1, md.mu[0]);
        men.ratios[1] = side_ratio(kind, a1, md.point[1], a2, md.mu[1]);
        men.ratios[2] = side_ratio(kind, a2, md.point[2], a0, md.mu[2]);
        finish_report(men);

        std::ostringstream trace;
        trace << "trial=" << trial << " chart=[(" << a0.x << "," << a0.y
              << "),(" << a1.x << "," << a1.y << "),(" << a2.x << "," << a2.y
              << ")]";
        ceva.trace = trace.str();
        men.trace = ceva.trace;
        out.push_back(std::move(ceva));
        out.push_back(std::move(men));
        break;
      } catch (const KernelError&) {
        continue;  // resample degenerate constructions
      }
    }
  }
  return out;
}

}  // namespace ttri
