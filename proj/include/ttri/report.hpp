// SPDX-License-Identifier: Apache-2.0
//
// Per-configuration record of a Ceva/Menelaus verification.

#ifndef TTRI_REPORT_HPP
#define TTRI_REPORT_HPP

#include <array>
#include <cmath>
#include <string>

#include "ttri/core.hpp"

namespace ttri {

enum class ConfigKind { Ceva, Menelaus };

inline const char* config_kind_name(ConfigKind k) {
  return k == ConfigKind::Ceva ? "ceva" : "menelaus";
}

/// Expected theorem product: +1 for Ceva, -1 for Menelaus.
inline double expected_product(ConfigKind k) {
  return k == ConfigKind::Ceva ? 1.0 : -1.0;
}

struct TheoremReport {
  Geometry geometry = Geometry::E3;
  ConfigKind kind = ConfigKind::Ceva;
  std::array<SignedRatio, 3> ratios{};
  double product = 0.0;
  double deviation = 0.0;  // |product - expected|, never clamped

  // Alternate ratio route (SL2R~ arc-length-weighted definition); unused
  // elsewhere.
  bool has_alt = false;
  std::array<SignedRatio, 3> alt_ratios{};
  double alt_product = 0.0;
  double alt_deviation = 0.0;

  std::string trace;  // reduced-picture coordinates and lift parameters
};

inline void finish_report(TheoremReport& r) {
  r.product = r.ratios[0].value * r.ratios[1].value * r.ratios[2].value;
  r.deviation = std::abs(r.product - expected_product(r.kind));
  if (r.has_alt) {
    r.alt_product =
        r.alt_ratios[0].value * r.alt_ratios[1].value * r.alt_ratios[2].value;
    r.alt_deviation = std::abs(r.alt_product - expected_product(r.kind));
  }
}

}  // namespace ttri

#endif  // TTRI_REPORT_HPP
