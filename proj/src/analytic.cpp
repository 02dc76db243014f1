#include "kdiff/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "kdiff/bessel.hpp"

namespace kdiff {

namespace {

std::string truncation_message(int m_max, double tail) {
  std::ostringstream msg;
  msg << "m_max = " << m_max << " leaves an estimated tail of " << tail
      << " outside the spectrum (limit " << truncation_tolerance << ")";
  return msg.str();
}

// Sum of J_m(x)^2 over |m| > m_max. J_m(x) is increasing in x for m > x, so the
// tail at the largest argument bounds the tail of every order.
double tail_bound(double x, int m_max) {
  double tail = 0.0;
  for (int m = m_max + 1; m <= bessel_max_order; ++m) {
    const double j = bessel_j(m, std::min(x, bessel_max_argument));
    const double term = 2.0 * j * j;
    tail += term;
    if (m > x && term < 1e-30) break;
  }
  return tail;
}

void check_m_max(int m_max) {
  if (m_max < 1 || m_max > bessel_max_order)
    throw std::invalid_argument("m_max must lie in [1, 1000]");
}

}  // namespace

std::string_view to_string(AnalyticMethod method) {
  return method == AnalyticMethod::PlainRN ? "plain_rn" : "modified_rn";
}

double AnalyticSpectrum::population(int m) const {
  if (std::abs(m) > m_max) return 0.0;
  return populations[static_cast<std::size_t>(m + m_max)];
}

double AnalyticSpectrum::total() const {
  return std::accumulate(populations.begin(), populations.end(), 0.0);
}

TruncationError::TruncationError(int m_max, double tail)
    : std::runtime_error(truncation_message(m_max, tail)), m_max_(m_max), tail_(tail) {}

BesselArgument rn_argument(const SimParams& params, double p_tilde) {
  const double f = lattice_amplitude(params.q) * params.shape().fluence_spectrum(4.0 * p_tilde);
  return {std::abs(f)};
}

double peak_argument(const SimParams& params) {
  // The fluence spectrum of either shape peaks at zero frequency.
  return rn_argument(params, 0.0).value;
}

int default_analytic_m_max(const SimParams& params) {
  const double peak = std::min(peak_argument(params), bessel_max_argument);
  return std::min(static_cast<int>(std::ceil(peak)) + 40, bessel_max_order);
}

AnalyticSpectrum raman_nath_spectrum(const SimParams& params, int m_max) {
  validate(params);
  check_m_max(m_max);
  const double x = rn_argument(params, params.p0).value;
  AnalyticSpectrum out{AnalyticMethod::PlainRN, m_max, {}, 0.0};
  out.populations.reserve(static_cast<std::size_t>(2 * m_max + 1));
  for (int m = -m_max; m <= m_max; ++m) {
    const double j = bessel_j(m, x);
    out.populations.push_back(j * j);
  }
  out.truncation_tail = tail_bound(x, m_max);
  if (out.truncation_tail > truncation_tolerance) throw TruncationError(m_max, out.truncation_tail);
  return out;
}

AnalyticSpectrum modified_spectrum(const SimParams& params, int m_max) {
  validate(params);
  check_m_max(m_max);
  AnalyticSpectrum out{AnalyticMethod::ModifiedRN, m_max, {}, 0.0};
  out.populations.reserve(static_cast<std::size_t>(2 * m_max + 1));
  for (int m = -m_max; m <= m_max; ++m) {
    const double j = bessel_j(m, rn_argument(params, params.p0 + m).value);
    out.populations.push_back(j * j);
  }
  out.truncation_tail = tail_bound(peak_argument(params), m_max);
  if (out.truncation_tail > truncation_tolerance) throw TruncationError(m_max, out.truncation_tail);
  return out;
}

}  // namespace kdiff
