#pragma once

#include <string_view>

namespace kdiff {

enum class RegimeLabel { RamanNath, Bragg, Channeling };

std::string_view to_string(RegimeLabel label);

/// Pulse duration separating the Raman-Nath regime: 1 / (2 sqrt(2q)).
double raman_nath_boundary(double q);

/// RamanNath below the duration boundary; beyond it Bragg for q < 1, Channeling
/// otherwise. Points on a boundary fall on the longer/stronger side.
RegimeLabel classify_regime(double q, double tau_r);

}  // namespace kdiff
