// SPDX-License-Identifier: Apache-2.0
//
// Reference simple ratios and Ceva/Menelaus verification in the constant
// curvature spaces: E3, S3 (verified on S2 desk models) and H3 (verified on
// the H2 hyperboloid desk model).

#ifndef TTRI_CONSTCURV_HPP
#define TTRI_CONSTCURV_HPP

#include <cstdint>
#include <vector>

#include "ttri/report.hpp"

namespace ttri {

enum class CCKind { Euclidean, Spherical, Hyperbolic };

/// Signed weighted simple ratio +-w(dAP)/w(dPB) with w = id / sin / sinh.
/// Spherical arcs must not exceed pi.
SignedRatio cc_simple_ratio(CCKind kind, double dAP, double dPB, bool between);

/// Random Ceva and Menelaus configurations (two reports per trial);
/// constructions run in a central-projection chart (gnomonic plane for S2,
/// Klein disk for H2) and lift to the curved model for the distances.
std::vector<TheoremReport> cc_verify_ceva_menelaus(CCKind kind, uint64_t seed,
                                                   int trials);

}  // namespace ttri

#endif  // TTRI_CONSTCURV_HPP
