#pragma once

#include "kdiff/propagator.hpp"
#include "kdiff/spectrum.hpp"

namespace kdiff {

struct SimulationResult {
  Wavefunction final_state;
  DiffractionSpectrum spectrum;
  EvolveStats stats;
};

/// Probability allowed within 2 hbar k of the momentum cutoff before a run is
/// declared under-resolved.
inline constexpr double edge_density_limit = 1e-10;

/// Prepares the packet, evolves it across the whole pulse window and bins the final
/// momentum distribution into orders |m| <= m_max (grid maximum when m_max < 0).
SimulationResult run_simulation(const SimParams& params, const GridSpec& grid, double dt,
                                int m_max = -1);

}  // namespace kdiff
