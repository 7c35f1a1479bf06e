// geomgate: synthesize drive pulses for geometric single-qubit gates from
// closed parameter-sphere loops, simulate them in closed and open systems,
// search for time-optimal triangle loops, and compare the built-in paths.

#include <CLI11.hpp>

#include "geomgate/cli.hpp"

namespace {

void add_device_flags(CLI::App* app, geomgate::RunConfig& cfg) {
  app->add_option("--omega0", cfg.omega0,
                  "maximal Rabi frequency (MHz, or Omega_0 ratio with "
                  "--dimensionless)")
      ->capture_default_str();
  app->add_option("--delta0", cfg.delta0,
                  "maximal detuning (MHz, or Omega_0 ratio)")
      ->capture_default_str();
  app->add_option("--gamma1", cfg.gamma1,
                  "decay-channel rate (Hz, or Omega_0 ratio)")
      ->capture_default_str();
  app->add_option("--gamma2", cfg.gamma2,
                  "dephasing-channel rate (Hz, or Omega_0 ratio)")
      ->capture_default_str();
  app->add_flag("--dimensionless", cfg.dimensionless,
                "treat device parameters as Omega_0 ratios");
}

void add_path_flags(CLI::App* app, geomgate::RunConfig& cfg) {
  app->add_option("--path", cfg.path_name,
                  "orange-slice | conventional-triangle | "
                  "unconventional-triangle");
  app->add_option("--path-file", cfg.path_file, "JSON path description");
  app->add_option("--eta", cfg.eta, "eta override for --path-file loops")
      ->trigger_on_parse()
      ->each([&cfg](const std::string&) { cfg.eta_override = true; });
  app->add_option("--phi0", cfg.phi0, "initial azimuth of the named paths")
      ->capture_default_str();
  app->add_option("--samples", cfg.samples_per_segment,
                  "schedule samples per segment")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

void add_output_flags(CLI::App* app, geomgate::RunConfig& cfg) {
  app->add_option("-o,--output", cfg.output_path,
                  "output file (default: stdout)");
  std::map<std::string, geomgate::FileFormat> formats{
      {"csv", geomgate::FileFormat::csv},
      {"json", geomgate::FileFormat::json}};
  app->add_option("--format", cfg.format, "csv | json")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pulse synthesis and simulation for geometric qubit gates"};
  app.require_subcommand(1);

  geomgate::RunConfig cfg;

  CLI::App* synth = app.add_subcommand(
      "synthesize", "derive the drive pulses for a closed loop");
  add_path_flags(synth, cfg);
  add_device_flags(synth, cfg);
  add_output_flags(synth, cfg);

  CLI::App* sim = app.add_subcommand(
      "simulate", "open-system evolution of a loop or pulse file");
  add_path_flags(sim, cfg);
  add_device_flags(sim, cfg);
  add_output_flags(sim, cfg);
  sim->add_option("--pulse", cfg.pulse_file, "simulate this pulse file");
  sim->add_option("--dt-per-tau0", cfg.dt_per_tau0,
                  "integrator steps per tau0 (>= 100)")
      ->capture_default_str();

  CLI::App* opt = app.add_subcommand(
      "optimize", "time-optimal apex search for the triangle family");
  add_device_flags(opt, cfg);
  add_output_flags(opt, cfg);
  opt->add_option("--gamma-target", cfg.gamma_target,
                  "target geometric phase (rad)")
      ->capture_default_str();
  opt->add_option("--scan-points", cfg.scan_points, "grid points of the scan")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  CLI::App* bench = app.add_subcommand(
      "bench", "compare the three built-in paths end to end");
  add_device_flags(bench, cfg);
  add_output_flags(bench, cfg);
  bench->add_option("--dt-per-tau0", cfg.dt_per_tau0,
                    "integrator steps per tau0 (>= 100)")
      ->capture_default_str();
  bench->add_option("--phi0", cfg.phi0, "initial azimuth of the paths")
      ->capture_default_str();

  // default path when none is given: require explicitly for synthesize/simulate
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : geomgate::kExitConfig;
  }

  if (synth->parsed()) cfg.command = geomgate::RunConfig::Command::synthesize;
  if (sim->parsed()) cfg.command = geomgate::RunConfig::Command::simulate;
  if (opt->parsed()) cfg.command = geomgate::RunConfig::Command::optimize;
  if (bench->parsed()) cfg.command = geomgate::RunConfig::Command::bench;

  if ((synth->parsed() || sim->parsed()) && cfg.path_name.empty() &&
      cfg.path_file.empty() && cfg.pulse_file.empty()) {
    std::fprintf(stderr, "error: provide --path, --path-file or --pulse\n");
    return geomgate::kExitConfig;
  }

  return geomgate::run_command(cfg);
}
