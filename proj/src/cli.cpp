#include "geomgate/cli.hpp"

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>

namespace geomgate {

namespace {

ClosedPath resolve_path(const RunConfig& cfg) {
  if (!cfg.path_file.empty()) {
    ClosedPath p = load_path_json(cfg.path_file);
    if (cfg.eta_override) p.eta = cfg.eta;
    return p;
  }
  if (cfg.path_name == "orange-slice") return orange_slice_path(cfg.phi0);
  if (cfg.path_name == "conventional-triangle") {
    return conventional_triangle_path(cfg.phi0);
  }
  if (cfg.path_name == "unconventional-triangle") {
    return unconventional_triangle_path(cfg.phi0);
  }
  throw Error("BadInput", "unknown path '" + cfg.path_name +
                              "' (expected orange-slice, "
                              "conventional-triangle, "
                              "unconventional-triangle, or --path-file)");
}

std::string path_label(const RunConfig& cfg) {
  return cfg.path_file.empty() ? cfg.path_name : "custom";
}

void with_output(const RunConfig& cfg,
                 const std::function<void(std::ostream&)>& writer) {
  if (cfg.output_path.empty()) {
    writer(std::cout);
    return;
  }
  std::ofstream out(cfg.output_path);
  if (!out) throw Error("BadInput", "cannot write " + cfg.output_path);
  writer(out);
}

struct SynthesisResult {
  ClosedPath path;
  PulseSchedule schedule;
  PulseSummary summary;
};

SynthesisResult synthesize(const RunConfig& cfg, const DeviceLimits& limits) {
  SynthesisResult r;
  r.path = resolve_path(cfg);
  if (!closure_check(r.path)) {
    throw Error("PathNotClosed", "the path does not close into a loop");
  }
  r.summary.path_name = path_label(cfg);
  r.summary.eta = r.path.eta;
  r.summary.theta0 = r.path.segments.front().theta_start;
  r.summary.phi0 = r.path.segments.front().phi_start;
  r.summary.gamma_g = geometric_phase(r.path);
  r.summary.gamma_total = total_phase(r.summary.gamma_g, r.path.eta);
  r.schedule = schedule_square_wave(r.path, limits, cfg.samples_per_segment);
  r.summary.samples_per_segment.assign(r.path.segments.size(),
                                       cfg.samples_per_segment);
  return r;
}

}  // namespace

DeviceLimits normalized_limits(const RunConfig& cfg) {
  DeviceLimits l;
  if (cfg.dimensionless) {
    l.omega_max = cfg.omega0;
    l.delta_max = cfg.delta0;
    l.gamma1 = cfg.gamma1;
    l.gamma2 = cfg.gamma2;
  } else {
    if (!(cfg.omega0 > 0.0)) {
      throw Error("BadInput", "omega0 must be positive");
    }
    const double omega0_hz = cfg.omega0 * 1e6;
    l.omega_max = 1.0;
    l.delta_max = cfg.delta0 / cfg.omega0;
    l.gamma1 = cfg.gamma1 / omega0_hz;
    l.gamma2 = cfg.gamma2 / omega0_hz;
  }
  if (!(l.omega_max > 0.0) || l.delta_max < 0.0 || l.gamma1 < 0.0 ||
      l.gamma2 < 0.0) {
    throw Error("BadInput", "device limits must be non-negative");
  }
  return l;
}

int cmd_synthesize(const RunConfig& cfg) {
  const DeviceLimits limits = normalized_limits(cfg);
  const SynthesisResult r = synthesize(cfg, limits);
  with_output(cfg, [&](std::ostream& out) {
    write_pulse(out, cfg.format, r.summary, r.schedule);
  });
  if (!cfg.output_path.empty()) {
    std::printf("%s: total_time = %.6f tau0, gamma_g = %.9f, gamma_total = %.9f\n",
                r.summary.path_name.c_str(), r.schedule.total_time,
                r.summary.gamma_g, r.summary.gamma_total);
  }
  return kExitOk;
}

int cmd_simulate(const RunConfig& cfg) {
  if (cfg.dt_per_tau0 < 100) {
    throw Error("BadInput", "dt_per_tau0 must be at least 100");
  }
  const DeviceLimits limits = normalized_limits(cfg);

  PulseSchedule schedule;
  PulseSummary summary;
  if (!cfg.pulse_file.empty()) {
    LoadedPulse lp = load_pulse(cfg.pulse_file);
    schedule = lp.schedule;
    summary = lp.summary;
  } else {
    SynthesisResult r = synthesize(cfg, limits);
    schedule = r.schedule;
    summary = r.summary;
  }

  const Matrix2 target_gate =
      target_unitary(summary.theta0, summary.phi0, summary.gamma_total);
  const QubitState plus = QubitState::plus();
  const QubitState target(target_gate * plus.amplitudes);

  const Matrix2 rho0 = plus.amplitudes * plus.amplitudes.adjoint();
  const double dt = 1.0 / cfg.dt_per_tau0;
  const auto records = lindblad_evolve(schedule, rho0, limits, dt);

  std::vector<TrajectoryRow> rows;
  rows.reserve(records.size());
  for (const auto& rec : records) {
    TrajectoryRow row;
    row.t = rec.t;
    row.p1 = rec.rho(0, 0).real();
    row.p0 = rec.rho(1, 1).real();
    row.fidelity = state_fidelity(rec.rho, target);
    row.trace_error = std::abs(rec.rho.trace() - complexd(1.0, 0.0));
    rows.push_back(row);
  }

  TrajectorySummary ts;
  ts.path_name = summary.path_name;
  ts.final_fidelity = rows.back().fidelity;
  ts.final_trace_error = rows.back().trace_error;
  ts.gamma_g = summary.gamma_g;
  ts.gamma_total = summary.gamma_total;
  ts.total_time = schedule.total_time;
  ts.gamma1 = limits.gamma1;
  ts.gamma2 = limits.gamma2;
  ts.dt_per_tau0 = cfg.dt_per_tau0;

  with_output(cfg, [&](std::ostream& out) {
    write_trajectory(out, cfg.format, ts, rows);
  });
  if (!cfg.output_path.empty()) {
    std::printf("%s: final fidelity = %.6f over %.6f tau0\n",
                ts.path_name.c_str(), ts.final_fidelity, ts.total_time);
  }
  return kExitOk;
}

int cmd_optimize(const RunConfig& cfg) {
  const DeviceLimits limits = normalized_limits(cfg);
  const TriangleOptimum opt = optimize_conventional_triangle(
      limits, cfg.gamma_target, cfg.scan_points);

  ScanSummary s;
  s.gamma_target = cfg.gamma_target;
  s.theta_c = opt.theta_c;
  s.total_time = opt.total_time;
  with_output(cfg, [&](std::ostream& out) {
    write_scan(out, cfg.format, s, opt.scan);
  });
  if (!cfg.output_path.empty()) {
    std::printf("optimum: theta_c = %.9f rad, total_time = %.9f tau0\n",
                opt.theta_c, opt.total_time);
  }
  return kExitOk;
}

int cmd_bench(const RunConfig& cfg) {
  if (cfg.dt_per_tau0 < 100) {
    throw Error("BadInput", "dt_per_tau0 must be at least 100");
  }
  const DeviceLimits limits = normalized_limits(cfg);
  const double dt = 1.0 / cfg.dt_per_tau0;

  std::vector<BenchRow> rows;
  for (const std::string name :
       {"orange-slice", "conventional-triangle", "unconventional-triangle"}) {
    RunConfig sub = cfg;
    sub.path_name = name;
    sub.path_file.clear();
    const SynthesisResult r = synthesize(sub, limits);

    BenchRow row;
    row.path_name = name;
    row.total_time = r.schedule.total_time;
    row.gamma_g = r.summary.gamma_g;
    row.gamma_total = r.summary.gamma_total;

    const Matrix2 target =
        target_unitary(r.summary.theta0, r.summary.phi0, r.summary.gamma_total);
    const UnitaryTrajectory traj = propagate_unitary(r.schedule, dt);
    row.gate_distance = gate_distance_global_phase(traj.final_unitary(), target);

    const QubitState plus = QubitState::plus();
    const QubitState target_state(target * plus.amplitudes);
    const Matrix2 rho0 = plus.amplitudes * plus.amplitudes.adjoint();
    const auto records = lindblad_evolve(r.schedule, rho0, limits, dt);
    row.fidelity = state_fidelity(records.back().rho, target_state);
    rows.push_back(row);
  }

  std::printf("%-26s %10s %10s %12s %14s %10s\n", "path", "time/tau0",
              "gamma_g", "gamma_total", "gate_dist", "fidelity");
  for (const auto& r : rows) {
    std::printf("%-26s %10.4f %10.6f %12.6f %14.3e %10.6f\n",
                r.path_name.c_str(), r.total_time, r.gamma_g, r.gamma_total,
                r.gate_distance, r.fidelity);
  }
  if (!cfg.output_path.empty()) {
    with_output(cfg, [&](std::ostream& out) {
      write_bench(out, cfg.format, rows);
    });
  }
  return kExitOk;
}

int run_command(const RunConfig& cfg) {
  try {
    switch (cfg.command) {
      case RunConfig::Command::synthesize: return cmd_synthesize(cfg);
      case RunConfig::Command::simulate: return cmd_simulate(cfg);
      case RunConfig::Command::optimize: return cmd_optimize(cfg);
      case RunConfig::Command::bench: return cmd_bench(cfg);
    }
    return kExitConfig;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    const std::string& code = e.code();
    const bool infeasible = code == "PathNotClosed" ||
                            code == "InfeasibleSegment" ||
                            code == "InfeasibleTarget" ||
                            code == "TrivialEta" || code == "InvalidState";
    return infeasible ? kExitInfeasible : kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  }
}

}  // namespace geomgate
