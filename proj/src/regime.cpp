#include "kdiff/regime.hpp"

#include <cmath>
#include <stdexcept>

namespace kdiff {

std::string_view to_string(RegimeLabel label) {
  switch (label) {
    case RegimeLabel::RamanNath:
      return "RamanNath";
    case RegimeLabel::Bragg:
      return "Bragg";
    case RegimeLabel::Channeling:
      return "Channeling";
  }
  return "unknown";
}

double raman_nath_boundary(double q) { return 1.0 / (2.0 * std::sqrt(2.0 * q)); }

RegimeLabel classify_regime(double q, double tau_r) {
  if (!(q > 0.0) || !(tau_r > 0.0) || !std::isfinite(q) || !std::isfinite(tau_r))
    throw std::invalid_argument("classify_regime needs q > 0 and tau_r > 0");
  if (tau_r < raman_nath_boundary(q)) return RegimeLabel::RamanNath;
  return q < 1.0 ? RegimeLabel::Bragg : RegimeLabel::Channeling;
}

}  // namespace kdiff
