#include "kdiff/core.hpp"

#include <cmath>
#include <sstream>

namespace kdiff {

namespace {

// integral_{-T}^{T} cos(a t) cos(w t) dt
double cos_product_integral(double a, double w, double half) {
  auto sinc_term = [half](double k) {
    if (std::abs(k * half) < 1e-8) return half * (1.0 - (k * half) * (k * half) / 6.0);
    return std::sin(k * half) / k;
  };
  return sinc_term(a - w) + sinc_term(a + w);
}

}  // namespace

std::string_view to_string(PulseKind kind) {
  return kind == PulseKind::Gaussian ? "gaussian" : "cos2";
}

PulseKind parse_pulse_kind(std::string_view name) {
  if (name == "gaussian") return PulseKind::Gaussian;
  if (name == "cos2") return PulseKind::CosSquared;
  throw std::invalid_argument("unknown pulse shape '" + std::string(name) +
                              "' (expected gaussian|cos2)");
}

double cos_squared_alpha(double tau_r) {
  // integral of cos^4(alpha t) over the support is 3 pi / (8 alpha);
  // the Gaussian fluence is tau sqrt(pi/2).
  return 3.0 * pi / (8.0 * tau_r * std::sqrt(pi / 2.0));
}

PulseShape::PulseShape(PulseKind kind, double tau_r) : kind_(kind), tau_r_(tau_r) {
  if (!(tau_r > 0.0) || !std::isfinite(tau_r))
    throw std::invalid_argument("tau_r must be positive and finite");
  if (kind == PulseKind::CosSquared) alpha_ = cos_squared_alpha(tau_r);
}

double PulseShape::envelope(double t) const {
  if (kind_ == PulseKind::Gaussian) return std::exp(-(t * t) / (tau_r_ * tau_r_));
  if (std::abs(t) > half_width()) return 0.0;
  const double c = std::cos(alpha_ * t);
  return c * c;
}

double PulseShape::half_width() const {
  return kind_ == PulseKind::Gaussian ? tau_r_ : pi / (2.0 * alpha_);
}

double PulseShape::fluence() const {
  if (kind_ == PulseKind::Gaussian) return tau_r_ * std::sqrt(pi / 2.0);
  return 3.0 * pi / (8.0 * alpha_);
}

double PulseShape::fluence_spectrum(double omega) const {
  if (kind_ == PulseKind::Gaussian) {
    const double x = omega * tau_r_;
    return fluence() * std::exp(-x * x / 8.0);
  }
  // cos^4(u) = 3/8 + cos(2u)/2 + cos(4u)/8
  const double half = half_width();
  return 0.375 * cos_product_integral(0.0, omega, half) +
         0.5 * cos_product_integral(2.0 * alpha_, omega, half) +
         0.125 * cos_product_integral(4.0 * alpha_, omega, half);
}

double envelope(PulseKind kind, double t, double tau_r) {
  return PulseShape(kind, tau_r).envelope(t);
}

void validate(const SimParams& params) {
  std::ostringstream msg;
  if (!(params.q >= 0.0) || !std::isfinite(params.q)) {
    msg << "q must be finite and >= 0 (got " << params.q << ")";
  } else if (!(params.tau_r > 0.0) || !std::isfinite(params.tau_r)) {
    msg << "tau_r must be finite and > 0 (got " << params.tau_r << ")";
  } else if (!std::isfinite(params.p0)) {
    msg << "p0 must be finite";
  } else if (params.detuning_sign != 1 && params.detuning_sign != -1) {
    msg << "detuning_sign must be +1 or -1 (got " << params.detuning_sign << ")";
  } else {
    return;
  }
  throw std::invalid_argument(msg.str());
}

double lattice_potential(double z, double t, const SimParams& params) {
  const double env = params.shape().envelope(t);
  return params.detuning_sign * lattice_amplitude(params.q) * env * env * std::cos(2.0 * z);
}

}  // namespace kdiff
