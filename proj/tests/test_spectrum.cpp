#include <doctest.h>

#include <cmath>
#include <random>

#include "kdiff/analytic.hpp"
#include "kdiff/spectrum.hpp"

using namespace kdiff;

namespace {

GridSpec grid64() {
  GridSpec g;
  g.n_periods = 64;
  g.points_per_period = 32;
  return g;
}

SimParams at_p0(double p0) {
  SimParams p;
  p.q = 1.0;
  p.tau_r = 0.1;
  p.p0 = p0;
  return p;
}

DiffractionSpectrum spectrum_of(std::vector<double> pops, double p0, SpectrumSource src) {
  const int m_max = static_cast<int>(pops.size() / 2);
  return {src, at_p0(p0), m_max, std::move(pops), 0.0};
}

}  // namespace

TEST_CASE("momentum distribution of a Gaussian packet") {
  const Wavefunction psi = init_wavepacket(grid64(), 0.0);
  const MomentumDensity d = momentum_distribution(psi);
  CHECK(std::abs(d.total() - 1.0) < 1e-12);
  CHECK(std::abs(d.mean()) < 1e-12);
  // density ~ exp(-p^2 sigma^2): check the 1/e point at p = 1/sigma = 0.1
  const std::size_t j = static_cast<std::size_t>(std::lround(0.1 / d.grid.dk()));
  CHECK(d.density[j] / d.density[0] == doctest::Approx(std::exp(-std::pow(d.grid.momentum(j) * 10.0, 2))).epsilon(1e-9));
}

TEST_CASE("momentum distribution ignores where the packet sits") {
  const MomentumDensity centred = momentum_distribution(init_wavepacket(grid64(), 4.0));
  const MomentumDensity moved = momentum_distribution(init_wavepacket(grid64(), 4.0, 17.3));
  double worst = 0.0;
  for (std::size_t j = 0; j < centred.density.size(); ++j)
    worst = std::max(worst, std::abs(centred.density[j] - moved.density[j]));
  CHECK(worst < 1e-13);
}

TEST_CASE("Parseval for arbitrary normalized states") {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> gauss;
  Wavefunction psi = init_wavepacket(grid64(), 0.0);
  for (auto& a : psi.amplitudes) a = {gauss(rng), gauss(rng)};
  const double scale = 1.0 / std::sqrt(psi.norm());
  for (auto& a : psi.amplitudes) a *= scale;
  CHECK(std::abs(momentum_distribution(psi).total() - 1.0) < 1e-12);
}

TEST_CASE("bin_orders on the undiffracted packet") {
  for (double p0 : {0.0, 1.0, 20.0}) {
    const auto s = bin_orders(momentum_distribution(init_wavepacket(grid64(), p0)), at_p0(p0),
                              grid64().max_order(p0));
    CHECK(s.population(0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(s.off_comb < 1e-12);
    CHECK(std::abs(s.total() + s.off_comb - 1.0) < 1e-12);
    CHECK(s.p_final(1) == p0 + 2.0);
  }
}

TEST_CASE("half-tooth misalignment splits populations but keeps the sum rule") {
  // Packet centred on p = 0.5 binned against a comb anchored at -0.5: the bin edge
  // p = 0.5 runs through the packet centre, and the grid point on the edge belongs
  // to the lower bin (bins are half-open from below).
  const MomentumDensity d = momentum_distribution(init_wavepacket(grid64(), 0.5));
  const auto split = bin_orders(d, at_p0(-0.5), 10);
  double below = 0.0;
  for (std::size_t j = 0; j < d.density.size(); ++j)
    if (d.grid.momentum(j) <= 0.5) below += d.density[j];
  CHECK(split.population(0) == doctest::Approx(below).epsilon(1e-12));
  CHECK(split.population(0) > 0.5);
  CHECK(split.population(1) > 0.4);
  CHECK(std::abs(split.total() + split.off_comb - 1.0) < 1e-12);
}

TEST_CASE("order window beyond the momentum support is rejected") {
  const MomentumDensity d = momentum_distribution(init_wavepacket(grid64(), 0.0));
  CHECK_NOTHROW(bin_orders(d, at_p0(0.0), 15));
  CHECK_THROWS_AS(bin_orders(d, at_p0(0.0), 16), std::invalid_argument);
  CHECK_THROWS_AS(bin_orders(d, at_p0(20.0), 6), std::invalid_argument);
}

TEST_CASE("off-comb mass counts everything beyond the order window") {
  const MomentumDensity d = momentum_distribution(init_wavepacket(grid64(), 6.0));
  const auto s = bin_orders(d, at_p0(0.0), 2);  // packet sits at order 3
  CHECK(s.off_comb == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(s.total() < 1e-12);
}

TEST_CASE("compare metrics") {
  const auto a = spectrum_of({0.1, 0.2, 0.4, 0.2, 0.1}, 1.0, SpectrumSource::Numeric);
  const auto b = spectrum_of({0.0, 0.3, 0.5, 0.2}, 1.0, SpectrumSource::PlainRN);
  SUBCASE("identity") {
    const ComparisonMetrics m = compare(a, a);
    CHECK(m.rms == 0.0);
    CHECK(m.tvd == 0.0);
    CHECK(m.max_abs == 0.0);
    CHECK(m.m_range == 2);
  }
  SUBCASE("symmetric, over the common range") {
    const auto c = spectrum_of({0.3, 0.5, 0.2}, 1.0, SpectrumSource::PlainRN);
    const ComparisonMetrics ab = compare(a, c), ba = compare(c, a);
    CHECK(ab.m_range == 1);
    CHECK(ab.max_abs == doctest::Approx(0.1));
    CHECK(ab.tvd == doctest::Approx(0.5 * (0.1 + 0.1 + 0.0)));
    CHECK(ab.rms == doctest::Approx(std::sqrt((0.01 + 0.01) / 3.0)));
    CHECK(ab.rms == ba.rms);
    CHECK(ab.tvd == ba.tvd);
    CHECK(ab.max_abs == ba.max_abs);
  }
  SUBCASE("different p0 is rejected") {
    const auto d = spectrum_of({0.1, 0.2, 0.4, 0.2, 0.1}, 2.0, SpectrumSource::Numeric);
    CHECK_THROWS_AS(compare(a, d), std::invalid_argument);
  }
  (void)b;
}

TEST_CASE("analytic spectra compared with themselves give exact zeros") {
  SimParams p;
  p.q = 52.9;
  p.tau_r = 0.0375;
  p.p0 = 20.0;
  const int m_max = default_analytic_m_max(p);
  for (const auto& s : {to_diffraction_spectrum(raman_nath_spectrum(p, m_max), p),
                        to_diffraction_spectrum(modified_spectrum(p, m_max), p)}) {
    const ComparisonMetrics m = compare(s, s);
    CHECK(m.rms == 0.0);
    CHECK(m.max_abs == 0.0);
  }
  CHECK(to_diffraction_spectrum(modified_spectrum(p, m_max), p).source == SpectrumSource::ModifiedRN);
}

TEST_CASE("metric bounds on normalized spectra (property)") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  auto random_spectrum = [&](int m_max) {
    std::vector<double> pops(static_cast<std::size_t>(2 * m_max + 1));
    double sum = 0.0;
    for (auto& v : pops) sum += (v = std::pow(u(rng), 4));
    for (auto& v : pops) v /= sum;
    return spectrum_of(pops, 0.0, SpectrumSource::Numeric);
  };
  for (int i = 0; i < 200; ++i) {
    const auto a = random_spectrum(5), b = random_spectrum(5);
    const ComparisonMetrics m = compare(a, b);
    CHECK(m.tvd <= 1.0 + 1e-15);
    CHECK(m.rms >= 0.0);
    CHECK(m.max_abs <= 2.0 * m.tvd + 1e-15);
    CHECK(m.rms <= m.max_abs + 1e-15);
  }
}
