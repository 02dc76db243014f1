// kdiff: pulsed standing-wave atomic diffraction, numeric vs closed-form spectra.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "kdiff/analytic.hpp"
#include "kdiff/output.hpp"
#include "kdiff/propagator.hpp"
#include "kdiff/sweep.hpp"
#include "kdiff/version.hpp"

namespace {

constexpr int exit_validation = 2;
constexpr int exit_numerical = 3;

struct PhysicsOptions {
  double q = 0.0;
  double tau_r = 0.0;
  double p0 = 0.0;
  std::string pulse = "gaussian";
  int detuning_sign = 1;
  std::optional<int> n_periods;
  std::optional<int> points_per_period;
  std::optional<double> sigma;
  std::optional<double> dt;
  std::optional<int> m_max;
};

struct OutputOptions {
  std::string format = "csv";
  std::string output;
  std::string heatmap;
  std::string heatmap_method = "numeric";
  std::string manifest;
};

void add_physics(CLI::App* app, PhysicsOptions& o, bool with_tau) {
  app->add_option("--q", o.q, "dimensionless intensity q >= 0")->required();
  if (with_tau) app->add_option("--tau-r", o.tau_r, "dimensionless pulse duration")->required();
  app->add_option("--p0", o.p0, "initial momentum (hbar k)")->capture_default_str();
  app->add_option("--pulse", o.pulse, "pulse envelope")
      ->check(CLI::IsMember({"gaussian", "cos2"}))
      ->capture_default_str();
  app->add_option("--detuning-sign", o.detuning_sign, "sign of the detuning")
      ->check(CLI::IsMember({-1, 1}))
      ->capture_default_str();
  app->add_option("--n-periods", o.n_periods, "lattice periods in the box (default 64)");
  app->add_option("--points-per-period", o.points_per_period,
                  "grid points per period = momentum cutoff (default: sized to the pulse)");
  app->add_option("--sigma", o.sigma, "packet waist in 1/k (default 10)");
  app->add_option("--dt", o.dt, "time step (default min(0.1/p_max^2, 0.1/8q, tau_r/1000))");
  app->add_option("--m-max", o.m_max, "largest diffraction order reported (default: grid limit)");
}

void add_output(CLI::App* app, OutputOptions& o) {
  app->add_option("--out", o.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app->add_option("-o,--output", o.output, "output file (default stdout)");
  app->add_option("--heatmap", o.heatmap, "write a P3 heatmap of the sweep");
  app->add_option("--heatmap-method", o.heatmap_method, "spectrum shown in the heatmap")
      ->check(CLI::IsMember({"numeric", "plain_rn", "modified_rn"}))
      ->capture_default_str();
  app->add_option("--manifest", o.manifest, "write the run manifest (JSON)");
}

kdiff::SweepConfig make_config(const PhysicsOptions& o, std::vector<double> taus) {
  kdiff::SweepConfig c;
  c.tau_list = std::move(taus);
  c.base.q = o.q;
  c.base.tau_r = o.tau_r > 0.0 ? o.tau_r : 1.0;
  c.base.p0 = o.p0;
  c.base.pulse = kdiff::parse_pulse_kind(o.pulse);
  c.base.detuning_sign = o.detuning_sign;
  c.dt = o.dt;
  c.m_max = o.m_max;
  if (o.n_periods || o.points_per_period || o.sigma) {
    kdiff::GridSpec g;
    if (o.n_periods) g.n_periods = *o.n_periods;
    if (o.points_per_period) g.points_per_period = *o.points_per_period;
    if (o.sigma) g.sigma = *o.sigma;
    if (!o.points_per_period) g.points_per_period = kdiff::resolve_grid(c).points_per_period;
    c.grid = g;
  }
  return c;
}

void write_outputs(const kdiff::SweepResult& result, const OutputOptions& o) {
  std::ostringstream body;
  if (o.format == "json")
    body << kdiff::result_json(result).dump(2) << '\n';
  else
    kdiff::write_csv(result, body);
  if (o.output.empty() || o.output == "-")
    std::cout << body.str();
  else
    kdiff::write_text_file(o.output, body.str());

  if (!o.heatmap.empty())
    kdiff::emit_heatmap(result, kdiff::parse_source(o.heatmap_method), o.heatmap);
  if (!o.manifest.empty())
    kdiff::write_text_file(o.manifest, kdiff::manifest_json(result).dump(2) + "\n");

  for (const auto& p : result.points)
    if (!p.ok) std::cerr << "kdiff: skipped tau_r = " << p.tau_r << ": " << p.skip_reason << '\n';
}

kdiff::SweepResult run_single(const PhysicsOptions& o) {
  kdiff::SweepConfig c = make_config(o, {o.tau_r});
  c.base.tau_r = o.tau_r;
  kdiff::validate(c.base);
  kdiff::SweepResult result;
  result.config = c;
  result.grid = kdiff::resolve_grid(c);
  result.m_max = kdiff::resolve_m_max(c, result.grid);
  const double dt = c.dt ? *c.dt : kdiff::default_dt(c.base, result.grid);
  // Failures propagate so the exit code reflects them.
  result.points.push_back(kdiff::compute_point(c.base, result.grid, dt, result.m_max));
  result.wall_seconds = result.points.front().wall_seconds;
  return result;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Atomic diffraction from pulsed standing waves: split-step numerics and "
               "Raman-Nath closed forms"};
  app.set_version_flag("--version", std::string(kdiff::version));
  app.require_subcommand(1);

  PhysicsOptions run_phys;
  OutputOptions run_out;
  auto* run = app.add_subcommand("run", "single pulse: numeric, plain and modified spectra");
  add_physics(run, run_phys, true);
  add_output(run, run_out);

  PhysicsOptions sweep_phys;
  OutputOptions sweep_out;
  double tau_max = 0.0;
  int tau_count = 120;
  std::vector<double> tau_list;
  int jobs = 1;
  auto* sweep = app.add_subcommand("sweep", "pulse-duration sweep (onion diagrams)");
  add_physics(sweep, sweep_phys, false);
  add_output(sweep, sweep_out);
  auto* tmax = sweep->add_option("--tau-max", tau_max, "sweep tau_r over (0, tau-max]");
  sweep->add_option("--tau-count", tau_count, "number of evenly spaced durations")
      ->capture_default_str();
  auto* tlist = sweep->add_option("--tau-list", tau_list, "explicit durations")->delimiter(',');
  tmax->excludes(tlist);
  sweep->add_option("-j,--jobs", jobs, "concurrent sweep points")->capture_default_str();

  double q_min = 0.01, q_max = 100.0, t_min = 0.001, t_max = 10.0;
  int resolution = 64;
  std::string map_path;
  auto* rmap = app.add_subcommand("regime-map", "label the (q, tau_r) plane by diffraction regime");
  rmap->add_option("--q-min", q_min)->capture_default_str();
  rmap->add_option("--q-max", q_max)->capture_default_str();
  rmap->add_option("--tau-min", t_min)->capture_default_str();
  rmap->add_option("--tau-max", t_max)->capture_default_str();
  rmap->add_option("--resolution", resolution, "lattice points per axis")->capture_default_str();
  rmap->add_option("-o,--output", map_path, "output CSV (default stdout)");

  std::string replay_path;
  OutputOptions replay_out;
  int replay_jobs = 1;
  auto* replay = app.add_subcommand("replay", "re-run the sweep recorded in a manifest");
  replay->add_option("manifest_file", replay_path, "manifest JSON to replay")->required()->check(CLI::ExistingFile);
  add_output(replay, replay_out);
  replay->add_option("-j,--jobs", replay_jobs)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : exit_validation;
  }

  try {
    if (*run) {
      write_outputs(run_single(run_phys), run_out);
    } else if (*sweep) {
      if (tlist->count() == 0 && tmax->count() == 0)
        throw std::invalid_argument("sweep needs --tau-max or --tau-list");
      kdiff::SweepConfig c = make_config(
          sweep_phys, tlist->count() > 0 ? tau_list : kdiff::tau_linspace(tau_max, tau_count));
      write_outputs(kdiff::sweep_tau(c, jobs), sweep_out);
    } else if (*rmap) {
      std::ostringstream body;
      kdiff::write_regime_map({q_min, q_max}, {t_min, t_max}, resolution, body);
      if (map_path.empty() || map_path == "-")
        std::cout << body.str();
      else
        kdiff::write_text_file(map_path, body.str());
    } else if (*replay) {
      std::ifstream in(replay_path);
      nlohmann::json manifest;
      try {
        manifest = nlohmann::json::parse(in);
      } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("cannot parse manifest: ") + e.what());
      }
      write_outputs(kdiff::sweep_tau(kdiff::config_from_manifest(manifest), replay_jobs), replay_out);
    }
  } catch (const kdiff::NumericalHealthError& e) {
    std::cerr << "kdiff: numerical health check failed: " << e.what() << " (dt = " << e.dt()
              << ", steps = " << e.steps() << ", norm drift = " << e.drift() << ")\n";
    return exit_numerical;
  } catch (const kdiff::TruncationError& e) {
    std::cerr << "kdiff: " << e.what() << '\n';
    return exit_numerical;
  } catch (const kdiff::OutputError& e) {
    std::cerr << "kdiff: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "kdiff: " << e.what() << '\n';
    return exit_validation;
  } catch (const std::out_of_range& e) {
    std::cerr << "kdiff: " << e.what() << '\n';
    return exit_validation;
  }
  return 0;
}
