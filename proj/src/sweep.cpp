#include "kdiff/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <sstream>
#include <thread>

#include "kdiff/analytic.hpp"
#include "kdiff/simulation.hpp"

namespace kdiff {

namespace {

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point start) {
  return std::chrono::duration<double>(clock_type::now() - start).count();
}

void validate_tau_list(const std::vector<double>& taus) {
  for (std::size_t i = 0; i < taus.size(); ++i) {
    if (!(taus[i] > 0.0) || !std::isfinite(taus[i]))
      throw std::invalid_argument("tau list entries must be positive and finite");
    if (i > 0 && !(taus[i] > taus[i - 1]))
      throw std::invalid_argument("tau list must be strictly increasing");
  }
}

SimParams at_tau(SimParams params, double tau) {
  params.tau_r = tau;
  return params;
}

}  // namespace

std::vector<double> tau_linspace(double tau_max, int count) {
  if (count < 0 || (count > 0 && !(tau_max > 0.0)))
    throw std::invalid_argument("tau sweep needs tau_max > 0 and count >= 0");
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 1; i <= count; ++i) out.push_back(tau_max * i / count);
  return out;
}

GridSpec resolve_grid(const SweepConfig& config) {
  if (config.grid) {
    validate(*config.grid);
    return *config.grid;
  }
  GridSpec widest;
  for (double tau : config.tau_list) {
    const GridSpec g = default_grid(at_tau(config.base, tau));
    if (g.points_per_period > widest.points_per_period) widest = g;
  }
  return widest;
}

int resolve_m_max(const SweepConfig& config, const GridSpec& grid) {
  const int supported = grid.max_order(config.base.p0);
  if (!config.m_max) {
    if (supported < 1) throw std::invalid_argument("grid momentum support too small for p0");
    return supported;
  }
  if (*config.m_max < 1 || *config.m_max > supported) {
    std::ostringstream msg;
    msg << "m_max = " << *config.m_max << " outside [1, " << supported << "] supported by the grid";
    throw std::invalid_argument(msg.str());
  }
  return *config.m_max;
}

SweepPoint compute_point(const SimParams& params, const GridSpec& grid, double dt, int m_max) {
  SweepPoint point;
  point.tau_r = params.tau_r;
  const auto start = clock_type::now();
  SimulationResult sim = run_simulation(params, grid, dt, m_max);
  point.numeric = std::move(sim.spectrum);
  point.stats = sim.stats;
  const int analytic_orders = std::max(default_analytic_m_max(params), m_max);
  point.plain = to_diffraction_spectrum(raman_nath_spectrum(params, analytic_orders), params);
  point.modified = to_diffraction_spectrum(modified_spectrum(params, analytic_orders), params);
  point.plain_vs_numeric = compare(point.plain, point.numeric);
  point.modified_vs_numeric = compare(point.modified, point.numeric);
  point.ok = true;
  point.wall_seconds = seconds_since(start);
  return point;
}

SweepPoint evaluate_point(const SimParams& params, const GridSpec& grid, double dt, int m_max) {
  const auto start = clock_type::now();
  try {
    return compute_point(params, grid, dt, m_max);
  } catch (const std::exception& e) {
    SweepPoint point;
    point.tau_r = params.tau_r;
    point.skip_reason = e.what();
    point.wall_seconds = seconds_since(start);
    return point;
  }
}

SweepResult sweep_tau(const SweepConfig& config, int jobs) {
  validate(config.base);
  validate_tau_list(config.tau_list);
  if (jobs < 1) throw std::invalid_argument("jobs must be >= 1");
  if (config.dt && !(*config.dt > 0.0)) throw std::invalid_argument("dt must be positive");

  SweepResult result;
  result.config = config;
  if (config.tau_list.empty()) return result;

  const auto start = clock_type::now();
  result.grid = resolve_grid(config);
  result.m_max = resolve_m_max(config, result.grid);
  result.points.resize(config.tau_list.size());

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < config.tau_list.size(); i = next++) {
      const SimParams params = at_tau(config.base, config.tau_list[i]);
      const double dt = config.dt ? *config.dt : default_dt(params, result.grid);
      result.points[i] = evaluate_point(params, result.grid, dt, result.m_max);
    }
  };
  const auto threads = std::min<std::size_t>(static_cast<std::size_t>(jobs), config.tau_list.size());
  std::vector<std::jthread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();

  result.wall_seconds = seconds_since(start);
  return result;
}

}  // namespace kdiff
