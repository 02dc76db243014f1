#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kdiff/core.hpp"
#include "kdiff/propagator.hpp"
#include "kdiff/regime.hpp"
#include "kdiff/spectrum.hpp"

namespace kdiff {

struct SweepConfig {
  SimParams base;                   // tau_r is replaced per point
  std::vector<double> tau_list;     // strictly increasing, positive
  std::optional<GridSpec> grid;     // widest default_grid over the sweep when empty
  std::optional<double> dt;         // default_dt per point when empty
  std::optional<int> m_max;         // grid maximum when empty
};

struct SweepPoint {
  double tau_r = 0.0;
  bool ok = false;
  std::string skip_reason;
  DiffractionSpectrum numeric;
  DiffractionSpectrum plain;
  DiffractionSpectrum modified;
  ComparisonMetrics plain_vs_numeric;
  ComparisonMetrics modified_vs_numeric;
  EvolveStats stats;
  double wall_seconds = 0.0;
};

struct SweepResult {
  SweepConfig config;
  GridSpec grid;
  int m_max = 0;
  std::vector<SweepPoint> points;  // ordered as config.tau_list
  double wall_seconds = 0.0;
};

/// `count` durations evenly spaced over (0, tau_max]: tau_max * i / count, i = 1..count.
std::vector<double> tau_linspace(double tau_max, int count);

/// Grid, order range and per-point parameters a sweep will use. Throws
/// std::invalid_argument on an invalid configuration.
GridSpec resolve_grid(const SweepConfig& config);
int resolve_m_max(const SweepConfig& config, const GridSpec& grid);

/// Numeric, plain and modified spectra at one duration. Failures propagate.
SweepPoint compute_point(const SimParams& params, const GridSpec& grid, double dt, int m_max);

/// compute_point with any failure turned into a skip marker.
SweepPoint evaluate_point(const SimParams& params, const GridSpec& grid, double dt, int m_max);

/// Runs every duration on up to `jobs` threads. Points that fail are kept as skip
/// markers; ordering always follows tau_list.
SweepResult sweep_tau(const SweepConfig& config, int jobs = 1);

}  // namespace kdiff
