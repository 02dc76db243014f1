#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "kdiff/core.hpp"

namespace kdiff {

/// Periodic spatial grid spanning n_periods lattice periods.
///
/// The box length is n_periods * pi, the momentum spacing 2 / n_periods and the
/// momentum cutoff points_per_period (all reduced units).
struct GridSpec {
  int n_periods = 64;
  int points_per_period = 32;
  double sigma = 10.0;

  std::size_t size() const {
    return static_cast<std::size_t>(n_periods) * static_cast<std::size_t>(points_per_period);
  }
  double length() const { return n_periods * pi; }
  double dz() const { return pi / points_per_period; }
  double dk() const { return 2.0 / n_periods; }
  double p_max() const { return points_per_period; }

  double position(std::size_t j) const;
  /// Momentum of FFT bin j in standard FFT ordering.
  double momentum(std::size_t j) const;

  /// Largest m such that every bin (p0 + 2m' - 1, p0 + 2m' + 1], |m'| <= m,
  /// lies inside [-p_max, p_max]. Negative when not even m = 0 fits.
  int max_order(double p0) const;
};

/// Throws std::invalid_argument on a non power-of-two size or a box shorter than 8 sigma.
void validate(const GridSpec& grid);

/// n_periods = 64, sigma = 10 and the smallest power-of-two points_per_period
/// (at least 32) whose order window covers the momenta the pulse can reach.
GridSpec default_grid(const SimParams& params);

/// min(0.1 / p_max^2, 0.1 / (8q), tau_r / 1000).
double default_dt(const SimParams& params, const GridSpec& grid);

/// Propagation window: [-2 tau_r, 2 tau_r] for Gaussian pulses, the cos^2 support
/// padded by 10% otherwise.
struct TimeWindow {
  double start;
  double end;
};
TimeWindow time_window(const SimParams& params);

struct Wavefunction {
  GridSpec grid;
  double t = 0.0;
  std::vector<std::complex<double>> amplitudes;

  /// sum |psi_j|^2 dz
  double norm() const;
};

/// Normalized Gaussian packet of waist sigma centred in the box, carrier exp(i p0 z).
Wavefunction init_wavepacket(const GridSpec& grid, double p0);

/// Same packet displaced by `shift` (1/k) from the box centre.
Wavefunction init_wavepacket(const GridSpec& grid, double p0, double shift);

/// Diagnostics attached to a propagation that failed its health checks.
class NumericalHealthError : public std::runtime_error {
public:
  NumericalHealthError(const std::string& what, double dt, long steps, double drift);
  double dt() const { return dt_; }
  long steps() const { return steps_; }
  double drift() const { return drift_; }

private:
  double dt_;
  long steps_;
  double drift_;
};

inline constexpr double norm_drift_limit = 1e-8;

struct EvolveStats {
  long steps = 0;
  double dt = 0.0;       // step actually used (divides the interval exactly)
  double norm_drift = 0.0;
};

/// Strang-split evolution from psi.t to t_end in the lab frame: half kinetic step
/// in momentum space, potential step at the midpoint time, half kinetic step.
/// dt's magnitude is an upper bound; it is shrunk so the interval divides evenly.
/// Requires 8 q |dt| <= 0.1.
Wavefunction split_step_evolve(Wavefunction psi, const SimParams& params, double t_end, double dt,
                               EvolveStats* stats = nullptr);

}  // namespace kdiff
