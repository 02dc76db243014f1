#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include <json.hpp>

#include "kdiff/spectrum.hpp"
#include "kdiff/sweep.hpp"

namespace kdiff {

/// Thrown when an output file cannot be written; the message names the path.
class OutputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Shortest decimal that parses back to the same double.
std::string format_double(double value);

inline constexpr std::string_view csv_header =
    "tau_r,m,p_final,pop_numeric,pop_plain_rn,pop_modified_rn";

/// One row per (tau_r, m) for every non-skipped point, sorted by tau_r then m.
void write_csv(const SweepResult& result, std::ostream& out);
void emit_csv(const SweepResult& result, const std::filesystem::path& path);

SpectrumSource parse_source(std::string_view name);

/// Plain-text P3 pixmap: one row per tau_r (ascending downward), one column per
/// order (momentum ascending), normalized to the largest population in the sweep.
void write_heatmap(const SweepResult& result, SpectrumSource which, std::ostream& out);
void emit_heatmap(const SweepResult& result, SpectrumSource which, const std::filesystem::path& path);

struct LogRange {
  double min;
  double max;
};

/// Regime labels on a log-spaced resolution x resolution (q, tau_r) lattice plus
/// the two boundary curves, as CSV with header `series,q,tau_r,regime`.
void write_regime_map(LogRange q, LogRange tau, int resolution, std::ostream& out);
void emit_regime_map(LogRange q, LogRange tau, int resolution, const std::filesystem::path& path);

/// Flat description of a sweep: every physical and numerical input, tool version
/// and per-point diagnostics. Replaying it reproduces the sweep's CSV exactly.
nlohmann::json manifest_json(const SweepResult& result);
/// Manifest plus the per-point spectra and comparison metrics.
nlohmann::json result_json(const SweepResult& result);

/// Rebuilds the sweep configuration recorded in a manifest.
SweepConfig config_from_manifest(const nlohmann::json& manifest);

void write_text_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace kdiff
