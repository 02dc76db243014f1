#pragma once

// Reduced units used throughout:
//   length   1/k        (lattice period is pi)
//   momentum hbar*k
//   time     1/omega_r  with omega_r = hbar*k^2 / 2M
//   energy   hbar*omega_r  (kinetic energy of momentum p is p^2)

#include <stdexcept>
#include <string>
#include <string_view>

namespace kdiff {

inline constexpr double pi = 3.14159265358979323846;

enum class PulseKind { Gaussian, CosSquared };

std::string_view to_string(PulseKind kind);
PulseKind parse_pulse_kind(std::string_view name);

/// Single-beam field envelope, peak-normalized at t = 0.
///
/// Gaussian: exp(-t^2/tau^2). CosSquared: cos^2(alpha t) on |t| <= pi/(2 alpha),
/// with alpha fixed by requiring the same pulse fluence (time integral of the
/// squared envelope) as the Gaussian of equal tau.
class PulseShape {
public:
  PulseShape(PulseKind kind, double tau_r);

  PulseKind kind() const { return kind_; }
  double tau_r() const { return tau_r_; }

  /// Angular frequency of the cos^2 envelope; 0 for Gaussian pulses.
  double alpha() const { return alpha_; }

  double envelope(double t) const;

  /// Half-length of the support (CosSquared) or tau_r (Gaussian).
  double half_width() const;

  /// Integral over all t of envelope(t)^2.
  double fluence() const;

  /// Integral over all t of envelope(t)^2 * cos(omega t). This is the full
  /// Fourier transform since the envelope is even. May be negative for cos^2.
  double fluence_spectrum(double omega) const;

private:
  PulseKind kind_;
  double tau_r_;
  double alpha_ = 0.0;
};

double envelope(PulseKind kind, double t, double tau_r);

/// alpha for a cos^2 field envelope of equal fluence to exp(-t^2/tau^2).
double cos_squared_alpha(double tau_r);

struct SimParams {
  double q = 0.0;
  double tau_r = 1.0;
  double p0 = 0.0;
  PulseKind pulse = PulseKind::Gaussian;
  int detuning_sign = +1;

  PulseShape shape() const { return PulseShape(pulse, tau_r); }
};

/// Throws std::invalid_argument describing the first violated constraint.
void validate(const SimParams& params);

/// Standing-wave potential in hbar*omega_r at position z (1/k), time t (1/omega_r).
/// The spatially uniform AC-Stark shifts are omitted; they only add a global phase.
double lattice_potential(double z, double t, const SimParams& params);

/// Peak depth 8q of the cos(2z) modulation at t = 0.
inline double lattice_amplitude(double q) { return 8.0 * q; }

}  // namespace kdiff
