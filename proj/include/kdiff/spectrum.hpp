#pragma once

#include <string_view>
#include <vector>

#include "kdiff/analytic.hpp"
#include "kdiff/core.hpp"
#include "kdiff/propagator.hpp"

namespace kdiff {

enum class SpectrumSource { Numeric, PlainRN, ModifiedRN };

std::string_view to_string(SpectrumSource source);

/// Probability density over the FFT momentum grid, in FFT bin order.
struct MomentumDensity {
  GridSpec grid;
  std::vector<double> density;

  double total() const;
  double mean() const;
  double rms_width() const;
};

/// Population of each diffraction order m (final momentum p0 + 2m) for |m| <= m_max.
struct DiffractionSpectrum {
  SpectrumSource source = SpectrumSource::Numeric;
  SimParams params;
  int m_max = 0;
  std::vector<double> populations;  // index m + m_max
  /// Probability outside every order bin (numeric) or the truncation tail (analytic).
  double off_comb = 0.0;

  double p0() const { return params.p0; }
  double p_final(int m) const { return params.p0 + 2.0 * m; }
  /// 0 for orders outside the stored range.
  double population(int m) const;
  double total() const;
};

struct ComparisonMetrics {
  double rms = 0.0;
  double tvd = 0.0;  // half the L1 distance
  double max_abs = 0.0;
  int m_range = 0;   // orders |m| <= m_range were compared
};

/// |FFT psi|^2 scaled so the density sums to the state norm.
MomentumDensity momentum_distribution(const Wavefunction& psi);

/// Sums the density over (p0 + 2m - 1, p0 + 2m + 1] for each |m| <= m_max. Throws
/// std::invalid_argument when a bin would leave the grid's momentum support.
DiffractionSpectrum bin_orders(const MomentumDensity& density, const SimParams& params, int m_max);

DiffractionSpectrum to_diffraction_spectrum(const AnalyticSpectrum& analytic, const SimParams& params);

/// Metrics over orders present in both spectra. Throws std::invalid_argument on
/// mismatched p0.
ComparisonMetrics compare(const DiffractionSpectrum& a, const DiffractionSpectrum& b);

}  // namespace kdiff
