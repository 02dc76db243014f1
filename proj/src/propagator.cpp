#include "kdiff/propagator.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>

#include "kdiff/analytic.hpp"
#include "kdiff/fft.hpp"

namespace kdiff {

double GridSpec::position(std::size_t j) const {
  return (static_cast<double>(j) - static_cast<double>(size() / 2)) * dz();
}

double GridSpec::momentum(std::size_t j) const {
  const auto n = static_cast<long>(size());
  auto idx = static_cast<long>(j);
  if (idx >= n / 2) idx -= n;
  return static_cast<double>(idx) * dk();
}

int GridSpec::max_order(double p0) const {
  const double upper = (p_max() - 1.0 - p0) / 2.0;
  const double lower = (p_max() - 1.0 + p0) / 2.0;
  return static_cast<int>(std::floor(std::min(upper, lower)));
}

void validate(const GridSpec& grid) {
  std::ostringstream msg;
  if (grid.n_periods < 1 || grid.points_per_period < 2) {
    msg << "grid needs n_periods >= 1 and points_per_period >= 2";
  } else if (!std::has_single_bit(grid.size())) {
    msg << "grid size " << grid.size() << " (n_periods * points_per_period) is not a power of two";
  } else if (!(grid.sigma > 0.0)) {
    msg << "sigma must be positive";
  } else if (grid.length() < 8.0 * grid.sigma) {
    msg << "box length " << grid.length() << " is shorter than 8 sigma = " << 8.0 * grid.sigma;
  } else {
    return;
  }
  throw std::invalid_argument(msg.str());
}

GridSpec default_grid(const SimParams& params) {
  validate(params);
  const double p0 = std::abs(params.p0);
  // Impulse bound from the pulse area, and the energy bound for atoms bouncing in
  // a lattice of peak-to-peak depth 16q.
  const double impulse = p0 + 2.0 * peak_argument(params);
  const double energy = std::sqrt(p0 * p0 + 2.0 * lattice_amplitude(params.q));
  const double reach = std::min(impulse, energy) + 12.0;
  // Symmetric order window around p0 must extend to -reach and +reach.
  const double orders = std::ceil((reach + p0 + 1.0) / 2.0);
  const double needed = p0 + 2.0 * orders + 1.0;

  GridSpec grid;
  grid.points_per_period = static_cast<int>(std::bit_ceil(
      static_cast<unsigned>(std::max(32.0, std::ceil(needed)))));
  return grid;
}

double default_dt(const SimParams& params, const GridSpec& grid) {
  double dt = std::min(0.1 / (grid.p_max() * grid.p_max()), params.tau_r / 1000.0);
  if (params.q > 0.0) dt = std::min(dt, 0.1 / lattice_amplitude(params.q));
  return dt;
}

TimeWindow time_window(const SimParams& params) {
  const PulseShape shape = params.shape();
  const double half =
      shape.kind() == PulseKind::Gaussian ? 2.0 * params.tau_r : 1.1 * shape.half_width();
  return {-half, half};
}

double Wavefunction::norm() const {
  double sum = 0.0;
  for (const auto& a : amplitudes) sum += std::norm(a);
  return sum * grid.dz();
}

Wavefunction init_wavepacket(const GridSpec& grid, double p0) {
  return init_wavepacket(grid, p0, 0.0);
}

Wavefunction init_wavepacket(const GridSpec& grid, double p0, double shift) {
  validate(grid);
  Wavefunction psi{grid, 0.0, {}};
  psi.amplitudes.resize(grid.size());
  const double two_sigma2 = 2.0 * grid.sigma * grid.sigma;
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const double z = grid.position(j);
    const double u = z - shift;
    psi.amplitudes[j] = std::polar(std::exp(-u * u / two_sigma2), p0 * z);
  }
  const double scale = 1.0 / std::sqrt(psi.norm());
  for (auto& a : psi.amplitudes) a *= scale;
  return psi;
}

NumericalHealthError::NumericalHealthError(const std::string& what, double dt, long steps,
                                           double drift)
    : std::runtime_error(what), dt_(dt), steps_(steps), drift_(drift) {}

Wavefunction split_step_evolve(Wavefunction psi, const SimParams& params, double t_end, double dt,
                               EvolveStats* stats) {
  validate(params);
  validate(psi.grid);
  if (!(std::abs(dt) > 0.0) || !std::isfinite(dt))
    throw std::invalid_argument("dt must be finite and non-zero");
  if (lattice_amplitude(params.q) * std::abs(dt) > 0.1 * (1.0 + 1e-12)) {
    std::ostringstream msg;
    msg << "dt = " << std::abs(dt) << " advances the potential phase by more than 0.1 rad (8q dt = "
        << lattice_amplitude(params.q) * std::abs(dt) << ")";
    throw std::invalid_argument(msg.str());
  }

  const double span = t_end - psi.t;
  const long steps = static_cast<long>(std::ceil(std::abs(span) / std::abs(dt) - 1e-9));
  const GridSpec& grid = psi.grid;
  const std::size_t n = grid.size();
  const double initial_norm = psi.norm();
  if (steps == 0) {
    if (stats != nullptr) *stats = {0, 0.0, 0.0};
    return psi;
  }
  const double h = span / static_cast<double>(steps);

  // Kinetic factors carry the 1/N of the unnormalized inverse transform.
  const double inv_n = 1.0 / static_cast<double>(n);
  std::vector<std::complex<double>> half_kick(n);
  std::vector<std::complex<double>> full_kick(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double p = grid.momentum(j);
    half_kick[j] = std::polar(inv_n, -p * p * h / 2.0);
    full_kick[j] = std::polar(inv_n, -p * p * h);
  }

  // cos(2z) repeats every points_per_period samples, so per-step phases are only
  // needed for one lattice period.
  const auto period = static_cast<std::size_t>(grid.points_per_period);
  std::vector<double> lattice(period);
  for (std::size_t j = 0; j < period; ++j) lattice[j] = std::cos(2.0 * grid.position(j));
  std::vector<std::complex<double>> phase(period);

  const PulseShape shape = params.shape();
  const double depth = params.detuning_sign * lattice_amplitude(params.q);

  Fft fft(n);
  auto buf = fft.data();
  std::copy(psi.amplitudes.begin(), psi.amplitudes.end(), buf.begin());
  fft.forward();
  for (std::size_t j = 0; j < n; ++j) buf[j] *= half_kick[j];

  for (long s = 0; s < steps; ++s) {
    fft.backward();
    const double t_mid = psi.t + (static_cast<double>(s) + 0.5) * h;
    const double env = shape.envelope(t_mid);
    const double strength = depth * env * env * h;
    if (strength != 0.0) {
      for (std::size_t j = 0; j < period; ++j) phase[j] = std::polar(1.0, -strength * lattice[j]);
      for (std::size_t base = 0; base < n; base += period)
        for (std::size_t j = 0; j < period; ++j) buf[base + j] *= phase[j];
    }
    fft.forward();
    const auto& kick = (s + 1 == steps) ? half_kick : full_kick;
    for (std::size_t j = 0; j < n; ++j) buf[j] *= kick[j];
  }
  fft.backward();
  std::copy(buf.begin(), buf.end(), psi.amplitudes.begin());
  psi.t = t_end;

  const double drift = std::abs(psi.norm() - initial_norm);
  if (stats != nullptr) *stats = {steps, h, drift};
  if (drift > norm_drift_limit) {
    std::ostringstream msg;
    msg << "norm drift " << drift << " exceeds " << norm_drift_limit << " after " << steps
        << " steps of dt = " << h;
    throw NumericalHealthError(msg.str(), h, steps, drift);
  }
  return psi;
}

}  // namespace kdiff
