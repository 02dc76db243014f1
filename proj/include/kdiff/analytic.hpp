#pragma once

#include <stdexcept>
#include <string_view>
#include <vector>

#include "kdiff/core.hpp"

namespace kdiff {

/// Non-negative Bessel argument of the closed-form diffraction amplitude.
struct BesselArgument {
  double value = 0.0;
};

enum class AnalyticMethod { PlainRN, ModifiedRN };

std::string_view to_string(AnalyticMethod method);

/// Closed-form order populations for m in [-m_max, m_max].
struct AnalyticSpectrum {
  AnalyticMethod method = AnalyticMethod::PlainRN;
  int m_max = 0;
  std::vector<double> populations;  // index m + m_max
  /// Upper bound on the probability carried by orders |m| > m_max.
  double truncation_tail = 0.0;

  /// 0 for orders outside the stored range.
  double population(int m) const;
  /// Sum of the stored populations. Exactly 1 (up to the tail) for PlainRN;
  /// ModifiedRN is not normalized and the deviation is reported here.
  double total() const;
};

/// Thrown when m_max leaves more than the allowed tail outside the spectrum.
class TruncationError : public std::runtime_error {
public:
  TruncationError(int m_max, double tail);
  int m_max() const { return m_max_; }
  double tail() const { return tail_; }

private:
  int m_max_;
  double tail_;
};

inline constexpr double truncation_tolerance = 1e-10;

/// f(p) for momentum p (hbar k): the pulse-area Bessel argument suppressed by the
/// pulse's spectral weight at the Doppler frequency 4p. For the Gaussian pulse this
/// is 4 sqrt(2 pi) q tau_r exp(-2 p^2 tau_r^2).
BesselArgument rn_argument(const SimParams& params, double p_tilde);

/// Largest argument over all momenta; bounds every order's argument.
double peak_argument(const SimParams& params);

/// ceil(peak argument) + 40, capped at the Bessel engine's order limit.
int default_analytic_m_max(const SimParams& params);

/// |J_m(f(p0))|^2 with one shared argument.
AnalyticSpectrum raman_nath_spectrum(const SimParams& params, int m_max);

/// |J_m(f(p0 + m))|^2: each order sees the energy defect including its own
/// kinetic energy. Populations are reported raw, without renormalization.
AnalyticSpectrum modified_spectrum(const SimParams& params, int m_max);

}  // namespace kdiff
