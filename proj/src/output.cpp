#include "kdiff/output.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>

#include "kdiff/regime.hpp"
#include "kdiff/version.hpp"

namespace kdiff {

namespace {

using nlohmann::json;

struct Rgb {
  int r, g, b;
};

// dark blue -> blue -> cyan -> yellow -> red
constexpr std::array<std::array<double, 3>, 5> ramp_stops{{
    {0.0, 0.0, 128.0},
    {0.0, 0.0, 255.0},
    {0.0, 255.0, 255.0},
    {255.0, 255.0, 0.0},
    {255.0, 0.0, 0.0},
}};

Rgb ramp(double v) {
  v = std::clamp(v, 0.0, 1.0);
  const double x = v * static_cast<double>(ramp_stops.size() - 1);
  const auto i = std::min<std::size_t>(static_cast<std::size_t>(x), ramp_stops.size() - 2);
  const double f = x - static_cast<double>(i);
  auto channel = [&](int c) {
    return static_cast<int>(std::lround(ramp_stops[i][c] + f * (ramp_stops[i + 1][c] - ramp_stops[i][c])));
  };
  return {channel(0), channel(1), channel(2)};
}

const DiffractionSpectrum& pick(const SweepPoint& p, SpectrumSource which) {
  switch (which) {
    case SpectrumSource::PlainRN:
      return p.plain;
    case SpectrumSource::ModifiedRN:
      return p.modified;
    case SpectrumSource::Numeric:
      break;
  }
  return p.numeric;
}

std::vector<double> log_space(LogRange r, int n) {
  std::vector<double> out;
  if (n == 1) return {r.min};
  const double a = std::log(r.min);
  const double b = std::log(r.max);
  for (int i = 0; i < n; ++i) out.push_back(std::exp(a + (b - a) * i / (n - 1)));
  out.front() = r.min;
  out.back() = r.max;
  return out;
}

void write_file(const std::filesystem::path& path, const std::function<void(std::ostream&)>& body) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw OutputError("cannot open '" + path.string() + "' for writing");
  body(out);
  out.flush();
  if (!out) throw OutputError("failed writing '" + path.string() + "'");
}

json spectrum_json(const DiffractionSpectrum& s) {
  return {{"source", to_string(s.source)},
          {"m_max", s.m_max},
          {"populations", s.populations},
          {"total", s.total()},
          {"off_comb", s.off_comb}};
}

json metrics_json(const ComparisonMetrics& m) {
  return {{"rms", m.rms}, {"tvd", m.tvd}, {"max_abs", m.max_abs}, {"m_range", m.m_range}};
}

}  // namespace

std::string format_double(double value) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return {buf.data(), res.ptr};
}

void write_csv(const SweepResult& result, std::ostream& out) {
  out << csv_header << '\n';
  for (const auto& point : result.points) {
    if (!point.ok) continue;
    const std::string tau = format_double(point.tau_r);
    for (int m = -result.m_max; m <= result.m_max; ++m) {
      out << tau << ',' << m << ',' << format_double(point.numeric.p_final(m)) << ','
          << format_double(point.numeric.population(m)) << ','
          << format_double(point.plain.population(m)) << ','
          << format_double(point.modified.population(m)) << '\n';
    }
  }
}

void emit_csv(const SweepResult& result, const std::filesystem::path& path) {
  write_file(path, [&](std::ostream& out) { write_csv(result, out); });
}

SpectrumSource parse_source(std::string_view name) {
  if (name == "numeric") return SpectrumSource::Numeric;
  if (name == "plain_rn" || name == "plain") return SpectrumSource::PlainRN;
  if (name == "modified_rn" || name == "modified") return SpectrumSource::ModifiedRN;
  throw std::invalid_argument("unknown spectrum '" + std::string(name) +
                              "' (expected numeric|plain_rn|modified_rn)");
}

void write_heatmap(const SweepResult& result, SpectrumSource which, std::ostream& out) {
  std::vector<const SweepPoint*> rows;
  for (const auto& p : result.points)
    if (p.ok) rows.push_back(&p);
  if (rows.size() < 2) throw std::invalid_argument("heatmap needs at least two tau_r points");

  const int width = 2 * result.m_max + 1;
  double peak = 0.0;
  for (const auto* p : rows)
    for (int m = -result.m_max; m <= result.m_max; ++m)
      peak = std::max(peak, pick(*p, which).population(m));

  out << "P3\n"
      << "# kdiff " << to_string(which) << " rows=tau_r " << format_double(rows.front()->tau_r)
      << ".." << format_double(rows.back()->tau_r) << " ascending down, columns=p "
      << format_double(rows.front()->numeric.p_final(-result.m_max)) << ".."
      << format_double(rows.front()->numeric.p_final(result.m_max))
      << " ascending; colormap dark-blue(0,0,128)>blue>cyan>yellow>red(255,0,0) linear in "
         "population / sweep max "
      << format_double(peak) << '\n'
      << width << ' ' << rows.size() << "\n255\n";
  for (const auto* p : rows) {
    const DiffractionSpectrum& s = pick(*p, which);
    for (int m = -result.m_max; m <= result.m_max; ++m) {
      const Rgb c = ramp(peak > 0.0 ? s.population(m) / peak : 0.0);
      out << c.r << ' ' << c.g << ' ' << c.b << (m == result.m_max ? '\n' : ' ');
    }
  }
}

void emit_heatmap(const SweepResult& result, SpectrumSource which, const std::filesystem::path& path) {
  std::ostringstream body;
  write_heatmap(result, which, body);
  write_text_file(path, body.str());
}

void write_regime_map(LogRange q, LogRange tau, int resolution, std::ostream& out) {
  if (!(q.min > 0.0) || !(q.max >= q.min) || !(tau.min > 0.0) || !(tau.max >= tau.min))
    throw std::invalid_argument("regime map ranges must be positive with min <= max");
  if (resolution < 1) throw std::invalid_argument("regime map resolution must be >= 1");

  const auto qs = log_space(q, resolution);
  const auto taus = log_space(tau, resolution);
  out << "series,q,tau_r,regime\n";
  for (double qv : qs)
    for (double tv : taus)
      out << "lattice," << format_double(qv) << ',' << format_double(tv) << ','
          << to_string(classify_regime(qv, tv)) << '\n';
  for (double qv : qs)
    out << "boundary_raman_nath," << format_double(qv) << ','
        << format_double(raman_nath_boundary(qv)) << ",\n";
  if (q.min <= 1.0 && 1.0 <= q.max)
    for (double tv : taus)
      if (tv >= raman_nath_boundary(1.0)) out << "boundary_q1,1," << format_double(tv) << ",\n";
}

void emit_regime_map(LogRange q, LogRange tau, int resolution, const std::filesystem::path& path) {
  std::ostringstream body;
  write_regime_map(q, tau, resolution, body);
  write_text_file(path, body.str());
}

json manifest_json(const SweepResult& result) {
  const SweepConfig& c = result.config;
  json points = json::array();
  for (const auto& p : result.points) {
    json entry = {{"tau_r", p.tau_r},
                  {"status", p.ok ? "ok" : "skipped"},
                  {"wall_seconds", p.wall_seconds}};
    if (!p.ok) {
      entry["reason"] = p.skip_reason;
    } else {
      entry["dt"] = p.stats.dt;
      entry["steps"] = p.stats.steps;
      entry["norm_drift"] = p.stats.norm_drift;
      entry["off_comb"] = p.numeric.off_comb;
      entry["rms_plain_rn"] = p.plain_vs_numeric.rms;
      entry["rms_modified_rn"] = p.modified_vs_numeric.rms;
      entry["modified_rn_total"] = p.modified.total();
    }
    if (c.base.pulse == PulseKind::CosSquared) entry["cos2_alpha"] = cos_squared_alpha(p.tau_r);
    if (p.tau_r > 0.0 && c.base.q > 0.0) entry["regime"] = to_string(classify_regime(c.base.q, p.tau_r));
    points.push_back(std::move(entry));
  }
  return {{"schema", 1},
          {"tool", "kdiff"},
          {"version", version},
          {"q", c.base.q},
          {"p0", c.base.p0},
          {"pulse", to_string(c.base.pulse)},
          {"detuning_sign", c.base.detuning_sign},
          {"n_periods", result.grid.n_periods},
          {"points_per_period", result.grid.points_per_period},
          {"sigma", result.grid.sigma},
          {"dt", c.dt ? json(*c.dt) : json(nullptr)},
          {"dt_policy", c.dt ? "fixed" : "min(0.1/p_max^2, 0.1/(8q), tau_r/1000)"},
          {"m_max", result.m_max},
          {"tau_count", c.tau_list.size()},
          {"tau_list", c.tau_list},
          {"wall_seconds", result.wall_seconds},
          {"points", std::move(points)}};
}

json result_json(const SweepResult& result) {
  json out = manifest_json(result);
  for (std::size_t i = 0; i < result.points.size(); ++i) {
    const SweepPoint& p = result.points[i];
    if (!p.ok) continue;
    json& entry = out["points"][i];
    entry["numeric"] = spectrum_json(p.numeric);
    entry["plain_rn"] = spectrum_json(p.plain);
    entry["modified_rn"] = spectrum_json(p.modified);
    entry["plain_rn_vs_numeric"] = metrics_json(p.plain_vs_numeric);
    entry["modified_rn_vs_numeric"] = metrics_json(p.modified_vs_numeric);
  }
  return out;
}

SweepConfig config_from_manifest(const json& manifest) {
  try {
    if (manifest.at("schema").get<int>() != 1)
      throw std::invalid_argument("unsupported manifest schema " + manifest.at("schema").dump());
    SweepConfig c;
    c.base.q = manifest.at("q").get<double>();
    c.base.p0 = manifest.at("p0").get<double>();
    c.base.pulse = parse_pulse_kind(manifest.at("pulse").get<std::string>());
    c.base.detuning_sign = manifest.at("detuning_sign").get<int>();
    GridSpec grid;
    grid.n_periods = manifest.at("n_periods").get<int>();
    grid.points_per_period = manifest.at("points_per_period").get<int>();
    grid.sigma = manifest.at("sigma").get<double>();
    c.grid = grid;
    if (!manifest.at("dt").is_null()) c.dt = manifest.at("dt").get<double>();
    c.tau_list = manifest.at("tau_list").get<std::vector<double>>();
    if (!c.tau_list.empty()) c.m_max = manifest.at("m_max").get<int>();
    return c;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed manifest: ") + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, std::string_view contents) {
  write_file(path, [&](std::ostream& out) { out << contents; });
}

}  // namespace kdiff
