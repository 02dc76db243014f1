#include "kdiff/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "kdiff/fft.hpp"

namespace kdiff {

std::string_view to_string(SpectrumSource source) {
  switch (source) {
    case SpectrumSource::Numeric:
      return "numeric";
    case SpectrumSource::PlainRN:
      return "plain_rn";
    case SpectrumSource::ModifiedRN:
      return "modified_rn";
  }
  return "unknown";
}

double MomentumDensity::total() const {
  return std::accumulate(density.begin(), density.end(), 0.0);
}

double MomentumDensity::mean() const {
  double m = 0.0;
  for (std::size_t j = 0; j < density.size(); ++j) m += grid.momentum(j) * density[j];
  return m / total();
}

double MomentumDensity::rms_width() const {
  const double mu = mean();
  double v = 0.0;
  for (std::size_t j = 0; j < density.size(); ++j) {
    const double d = grid.momentum(j) - mu;
    v += d * d * density[j];
  }
  return std::sqrt(v / total());
}

double DiffractionSpectrum::population(int m) const {
  if (std::abs(m) > m_max) return 0.0;
  return populations[static_cast<std::size_t>(m + m_max)];
}

double DiffractionSpectrum::total() const {
  return std::accumulate(populations.begin(), populations.end(), 0.0);
}

MomentumDensity momentum_distribution(const Wavefunction& psi) {
  const std::size_t n = psi.grid.size();
  Fft fft(n);
  std::copy(psi.amplitudes.begin(), psi.amplitudes.end(), fft.data().begin());
  fft.forward();
  MomentumDensity out{psi.grid, std::vector<double>(n)};
  const double scale = psi.grid.dz() / static_cast<double>(n);
  for (std::size_t j = 0; j < n; ++j) out.density[j] = std::norm(fft.data()[j]) * scale;
  return out;
}

DiffractionSpectrum bin_orders(const MomentumDensity& density, const SimParams& params, int m_max) {
  if (m_max < 0) throw std::invalid_argument("m_max must be >= 0");
  const int supported = density.grid.max_order(params.p0);
  if (m_max > supported) {
    std::ostringstream msg;
    msg << "order window |m| <= " << m_max << " around p0 = " << params.p0
        << " exceeds the grid momentum support +-" << density.grid.p_max() << " (max m = "
        << supported << ")";
    throw std::invalid_argument(msg.str());
  }
  DiffractionSpectrum out{SpectrumSource::Numeric, params, m_max,
                          std::vector<double>(static_cast<std::size_t>(2 * m_max + 1), 0.0), 0.0};
  for (std::size_t j = 0; j < density.density.size(); ++j) {
    // p lies in (p0 + 2m - 1, p0 + 2m + 1]  <=>  m = ceil((p - p0 - 1) / 2)
    const double p = density.grid.momentum(j);
    const auto m = static_cast<long>(std::ceil((p - params.p0 - 1.0) / 2.0));
    if (std::abs(m) <= m_max)
      out.populations[static_cast<std::size_t>(m + m_max)] += density.density[j];
    else
      out.off_comb += density.density[j];
  }
  return out;
}

DiffractionSpectrum to_diffraction_spectrum(const AnalyticSpectrum& analytic, const SimParams& params) {
  return {analytic.method == AnalyticMethod::PlainRN ? SpectrumSource::PlainRN
                                                      : SpectrumSource::ModifiedRN,
          params, analytic.m_max, analytic.populations, analytic.truncation_tail};
}

ComparisonMetrics compare(const DiffractionSpectrum& a, const DiffractionSpectrum& b) {
  if (a.p0() != b.p0()) {
    std::ostringstream msg;
    msg << "cannot compare spectra with different p0 (" << a.p0() << " vs " << b.p0() << ")";
    throw std::invalid_argument(msg.str());
  }
  ComparisonMetrics out;
  out.m_range = std::min(a.m_max, b.m_max);
  double sq = 0.0;
  double l1 = 0.0;
  for (int m = -out.m_range; m <= out.m_range; ++m) {
    const double d = std::abs(a.population(m) - b.population(m));
    sq += d * d;
    l1 += d;
    out.max_abs = std::max(out.max_abs, d);
  }
  out.rms = std::sqrt(sq / static_cast<double>(2 * out.m_range + 1));
  out.tvd = 0.5 * l1;
  return out;
}

}  // namespace kdiff
