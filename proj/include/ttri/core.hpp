// SPDX-License-Identifier: Apache-2.0
//
// Shared numeric foundation for the translation-triangle kernel: model
// points, tangent vectors, tolerances, signed simple ratios, a 3x3
// determinant and a bracketed scalar root solver.

#ifndef TTRI_CORE_HPP
#define TTRI_CORE_HPP

#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

namespace ttri {

/// Geometry tag for ratios and reports.
enum class Geometry { E3, S3, H3, Nil, Sol, Slr };

inline const char* geometry_name(Geometry g) {
  switch (g) {
    case Geometry::E3: return "E3";
    case Geometry::S3: return "S3";
    case Geometry::H3: return "H3";
    case Geometry::Nil: return "Nil";
    case Geometry::Sol: return "Sol";
    case Geometry::Slr: return "SLR";
  }
  return "?";
}

/// Affine point (x, y, z) of the projective model, chart x0 = 1.
struct ModelPoint {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  friend ModelPoint operator-(const ModelPoint& a, const ModelPoint& b) {
    return {a.x - b.x, a.y - b.y, a.z - b.z};
  }
  friend ModelPoint operator+(const ModelPoint& a, const ModelPoint& b) {
    return {a.x + b.x, a.y + b.y, a.z + b.z};
  }
  friend ModelPoint operator*(double s, const ModelPoint& p) {
    return {s * p.x, s * p.y, s * p.z};
  }
  double norm() const { return std::sqrt(x * x + y * y + z * z); }
};

inline double distance_euclid(const ModelPoint& a, const ModelPoint& b) {
  return (a - b).norm();
}

/// Tangent direction components at a point.
struct TangentVector {
  double u = 0.0;
  double v = 0.0;
  double w = 0.0;

  double norm() const { return std::sqrt(u * u + v * v + w * w); }
  TangentVector normalized() const {
    double n = norm();
    return {u / n, v / n, w / n};
  }
};

/// Planar point, used for fibre/coordinate-plane projections.
struct PlanarPoint {
  double a = 0.0;
  double b = 0.0;
};

struct Tolerances {
  double eps_alg = 1e-10;      // algebraic identities
  double eps_root = 1e-12;     // root finding
  double eps_theorem = 1e-9;   // theorem product checks
};

/// Signed simple ratio s(A,P,B). `between` is true iff P lies strictly
/// between A and B along the connecting curve; the sign of `value`
/// agrees with it.
struct SignedRatio {
  double value = 0.0;
  bool between = false;
  Geometry geometry = Geometry::E3;
};

// Error types. Every precondition violation in the kernel throws one of
// these; messages carry enough context to diagnose a failing construction.
struct KernelError : std::runtime_error {
  explicit KernelError(const std::string& msg) : std::runtime_error(msg) {}
};
struct NoBracket : KernelError { using KernelError::KernelError; };
struct NotOnCurve : KernelError { using KernelError::KernelError; };
struct DegenerateTarget : KernelError { using KernelError::KernelError; };
struct InvalidPoint : KernelError { using KernelError::KernelError; };
struct ChartOverflow : KernelError { using KernelError::KernelError; };
struct DegeneratePair : KernelError { using KernelError::KernelError; };
struct DegeneratePoint : KernelError { using KernelError::KernelError; };
struct DegenerateTriangle : KernelError { using KernelError::KernelError; };
struct DegenerateConfiguration : KernelError { using KernelError::KernelError; };
struct ZeroDenominator : KernelError { using KernelError::KernelError; };
struct LiftFailure : KernelError { using KernelError::KernelError; };
struct NotOnSurface : KernelError { using KernelError::KernelError; };
struct NoIntersection : KernelError { using KernelError::KernelError; };
struct ParallelSide : KernelError { using KernelError::KernelError; };

/// Determinant of the 3x3 matrix with rows (a, b, c).
inline double det3(const TangentVector& a, const TangentVector& b,
                   const TangentVector& c) {
  return a.u * (b.v * c.w - b.w * c.v) - a.v * (b.u * c.w - b.w * c.u) +
         a.w * (b.u * c.v - b.v * c.u);
}

/// Bisection on [lo, hi]; requires a sign change. Converges to
/// |hi - lo| < tol and returns the midpoint of the final bracket.
inline double solve_bracketed_root(const std::function<double(double)>& f,
                                   double lo, double hi, double tol) {
  if (!(lo < hi)) throw NoBracket("solve_bracketed_root: lo >= hi");
  double flo = f(lo), fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if (flo * fhi > 0.0) throw NoBracket("solve_bracketed_root: no sign change");
  while (hi - lo > tol) {
    double mid = 0.5 * (lo + hi);
    double fm = f(mid);
    if (fm == 0.0) return mid;
    if (flo * fm < 0.0) {
      hi = mid;
    } else {
      lo = mid;
      flo = fm;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace ttri

#endif  // TTRI_CORE_HPP
