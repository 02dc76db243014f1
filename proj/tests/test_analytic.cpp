#include <doctest.h>

#include <cmath>
#include <random>

#include "kdiff/analytic.hpp"
#include "kdiff/bessel.hpp"
#include "oracles/bessel_series.hpp"

using namespace kdiff;

namespace {

SimParams make(double q, double tau, double p0, PulseKind kind = PulseKind::Gaussian) {
  SimParams p;
  p.q = q;
  p.tau_r = tau;
  p.p0 = p0;
  p.pulse = kind;
  return p;
}

// Extent (in orders) of the region holding populations above `floor`.
int spread(const AnalyticSpectrum& s, double floor) {
  int extent = 0;
  for (int m = -s.m_max; m <= s.m_max; ++m)
    if (s.population(m) > floor) extent = std::max(extent, std::abs(m));
  return extent;
}

}  // namespace

TEST_CASE("rn_argument examples") {
  CHECK(rn_argument(make(0.0, 0.3, 4.0), 4.0).value == 0.0);
  CHECK(rn_argument(make(3.5, 0.5, 0.0), 0.0).value ==
        doctest::Approx(4.0 * std::sqrt(2.0 * pi) * 3.5 * 0.5).epsilon(1e-15));
  const double fig2 = rn_argument(make(52.9, 0.0375, 20.0), 20.0).value;
  CHECK(std::abs(fig2 - oracle::gaussian_rn_argument(52.9, 0.0375, 20.0)) < 1e-13);
  CHECK(fig2 == doctest::Approx(6.457).epsilon(2e-4));
}

TEST_CASE("rn_argument agrees with a dimensional evaluation") {
  // 87Rb on the D2 line; the detuning and field product are chosen to give q.
  const double hbar = 1.054571817e-34;
  const double mass = 1.443160648e-25;
  const double k = 2.0 * pi / 780.241e-9;
  const double omega_r = hbar * k * k / (2.0 * mass);
  const double delta = 2.0 * pi * 1.0e9;
  for (double q : {3.5, 52.9}) {
    for (double tau_r : {0.0375, 0.5}) {
      for (double p_tilde : {0.0, 1.0, 20.0}) {
        const double d2e1e2 = 4.0 * hbar * hbar * omega_r * delta * q;  // |d|^2 E1 E2
        const double tau = tau_r / omega_r;
        const double p = p_tilde * hbar * k;
        const double x = p * k * tau / mass;
        const double f = std::sqrt(2.0 * pi) * d2e1e2 * tau / (hbar * hbar * delta) * std::exp(-x * x / 2.0);
        const double reduced = rn_argument(make(q, tau_r, p_tilde), p_tilde).value;
        CHECK(reduced == doctest::Approx(f).epsilon(1e-10));
      }
    }
  }
}

TEST_CASE("plain Raman-Nath spectrum") {
  SUBCASE("vanishing pulse leaves the atom in order 0") {
    const auto s = raman_nath_spectrum(make(52.9, 1e-9, 20.0), 10);
    CHECK(s.population(0) == doctest::Approx(1.0).epsilon(1e-12));
    for (int m = 1; m <= 10; ++m) CHECK(s.population(m) < 1e-12);
    CHECK(s.method == AnalyticMethod::PlainRN);
  }
  SUBCASE("Fig. 2 point uses the single argument f(p0)") {
    const SimParams p = make(52.9, 0.0375, 20.0);
    const auto s = raman_nath_spectrum(p, default_analytic_m_max(p));
    const double x = oracle::gaussian_rn_argument(52.9, 0.0375, 20.0);
    for (int m = -8; m <= 8; ++m)
      CHECK(std::abs(s.population(m) - std::pow(oracle::bessel_series(m, x), 2)) < 1e-13);
    // J_0(6.45737)^2 from the series oracle
    CHECK(s.population(0) == doctest::Approx(0.06415059608949).epsilon(1e-10));
    CHECK(std::abs(s.total() - 1.0) < 1e-12);
  }
  SUBCASE("onion: diffraction opens then closes with duration") {
    std::vector<int> extents;
    for (double tau : {0.001, 0.01, 0.025, 0.05, 0.1, 0.3}) {
      const SimParams p = make(52.9, tau, 20.0);
      const auto s = raman_nath_spectrum(p, default_analytic_m_max(p));
      extents.push_back(spread(s, 1e-2));
      for (int m = 1; m <= s.m_max; ++m) CHECK(s.population(m) == s.population(-m));
    }
    CHECK(extents.front() <= 1);
    CHECK(extents.back() == 0);
    CHECK(extents == std::vector<int>{1, 6, 9, 4, 0, 0});
  }
  SUBCASE("too few orders is a truncation error") {
    CHECK_THROWS_AS(raman_nath_spectrum(make(52.9, 0.0375, 20.0), 3), TruncationError);
    CHECK_THROWS_AS(raman_nath_spectrum(make(52.9, 0.0375, 20.0), 0), std::invalid_argument);
  }
}

TEST_CASE("modified Raman-Nath spectrum") {
  SUBCASE("no light, no diffraction") {
    const auto s = modified_spectrum(make(0.0, 0.5, 1.0), 5);
    CHECK(s.population(0) == 1.0);
    for (int m = 1; m <= 5; ++m) CHECK(s.population(m) + s.population(-m) == 0.0);
  }
  SUBCASE("at rest the pattern is symmetric") {
    const SimParams p = make(3.5, 0.5, 0.0);
    const auto s = modified_spectrum(p, default_analytic_m_max(p));
    for (int m = 1; m <= 20; ++m) CHECK(s.population(m) == s.population(-m));
  }
  SUBCASE("Doppler asymmetry at q = 3.5, p0 = 1, tau = 0.5") {
    const SimParams p = make(3.5, 0.5, 1.0);
    const auto s = modified_spectrum(p, default_analytic_m_max(p));
    const double x_minus = oracle::gaussian_rn_argument(3.5, 0.5, 0.0);  // 4 sqrt(2pi) 3.5 0.5
    const double x_plus = oracle::gaussian_rn_argument(3.5, 0.5, 2.0);
    CHECK(std::abs(s.population(-1) - std::pow(oracle::bessel_series(1, x_minus), 2)) < 1e-13);
    CHECK(std::abs(s.population(1) - std::pow(oracle::bessel_series(1, x_plus), 2)) < 1e-13);
    CHECK(s.population(-1) != doctest::Approx(s.population(1)));
  }
  SUBCASE("populations are reported without renormalization") {
    const SimParams p = make(3.5, 1.0, 1.0);
    const auto s = modified_spectrum(p, default_analytic_m_max(p));
    CHECK(s.total() < 0.5);  // sum deviates strongly from 1 deep in the channeling regime
  }
}

TEST_CASE("analytic spectra are invariant under p0 -> -p0 with m -> -m") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> qs(0.1, 60.0), taus(0.001, 1.0), ps(-25.0, 25.0);
  for (int i = 0; i < 40; ++i) {
    const SimParams p = make(qs(rng), taus(rng), std::round(ps(rng)));
    SimParams mirrored = p;
    mirrored.p0 = -p.p0;
    const int m_max = default_analytic_m_max(p);
    const auto a = raman_nath_spectrum(p, m_max), b = raman_nath_spectrum(mirrored, m_max);
    const auto c = modified_spectrum(p, m_max), d = modified_spectrum(mirrored, m_max);
    for (int m = -m_max; m <= m_max; ++m) {
      CHECK(a.population(m) == doctest::Approx(b.population(-m)).epsilon(1e-12));
      CHECK(c.population(m) == doctest::Approx(d.population(-m)).epsilon(1e-12));
    }
  }
}

TEST_CASE("modified reduces to plain for short pulses at fixed pulse area") {
  const double area = 2.0;  // q * tau_r
  double previous = 1.0;
  for (double tau : {1e-2, 1e-3, 1e-4, 1e-5}) {
    const SimParams p = make(area / tau, tau, 5.0);
    const int m_max = default_analytic_m_max(p);
    const auto plain = raman_nath_spectrum(p, m_max);
    const auto modified = modified_spectrum(p, m_max);
    double worst = 0.0;
    for (int m = -m_max; m <= m_max; ++m)
      worst = std::max(worst, std::abs(plain.population(m) - modified.population(m)));
    CHECK(worst <= previous);
    previous = worst;
  }
  CHECK(previous < 1e-6);
}

TEST_CASE("long pulses suppress every nonzero order") {
  for (double p0 : {1.0, 20.0}) {
    const SimParams p = make(3.5, 10.0, p0);
    const auto plain = raman_nath_spectrum(p, 10);
    CHECK(plain.population(0) == doctest::Approx(1.0).epsilon(1e-12));
    const auto modified = modified_spectrum(p, default_analytic_m_max(p));
    for (int m = -modified.m_max; m <= modified.m_max; ++m) {
      if (m == 0 || p0 + m == 0.0) continue;  // p0 + m = 0 is the Bragg-resonant order
      CHECK(modified.population(m) < 1e-12);
    }
  }
}

TEST_CASE("cos2 pulse arguments follow the same construction") {
  const SimParams p = make(3.5, 0.5, 0.0, PulseKind::CosSquared);
  // at zero momentum only the fluence matters, which matches the gaussian
  CHECK(rn_argument(p, 0.0).value == doctest::Approx(rn_argument(make(3.5, 0.5, 0.0), 0.0).value));
  const auto s = raman_nath_spectrum(p, default_analytic_m_max(p));
  CHECK(std::abs(s.total() - 1.0) < 1e-12);
}
