#include "kdiff/simulation.hpp"

#include <cmath>
#include <sstream>

namespace kdiff {

SimulationResult run_simulation(const SimParams& params, const GridSpec& grid, double dt, int m_max) {
  validate(params);
  validate(grid);
  const TimeWindow window = time_window(params);
  Wavefunction psi = init_wavepacket(grid, params.p0);
  psi.t = window.start;

  EvolveStats stats;
  psi = split_step_evolve(std::move(psi), params, window.end, dt, &stats);

  const MomentumDensity density = momentum_distribution(psi);
  double edge = 0.0;
  for (std::size_t j = 0; j < density.density.size(); ++j)
    if (std::abs(density.grid.momentum(j)) > grid.p_max() - 2.0) edge += density.density[j];
  if (edge > edge_density_limit) {
    std::ostringstream msg;
    msg << "momentum support exhausted: " << edge << " of the probability lies within 2 of the cutoff "
        << grid.p_max() << "; increase points_per_period";
    throw NumericalHealthError(msg.str(), stats.dt, stats.steps, stats.norm_drift);
  }

  const int orders = m_max < 0 ? grid.max_order(params.p0) : m_max;
  DiffractionSpectrum spectrum = bin_orders(density, params, orders);
  return {std::move(psi), std::move(spectrum), stats};
}

}  // namespace kdiff
