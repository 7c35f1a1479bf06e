#pragma once

// File formats: pulse schedules, simulation trajectories, optimizer scans
// (CSV with a commented summary block, or JSON mirroring the same schema),
// and JSON path descriptions. Doubles are written with 17 significant
// digits so re-reading reproduces them bit-exactly.

#include <iosfwd>
#include <string>
#include <vector>

#include "geomgate/dynamics.hpp"

namespace geomgate {

enum class FileFormat { csv, json };

struct PulseSummary {
  std::string path_name;  // named path or "custom"
  double eta = 0.0;
  double theta0 = 0.0;
  double phi0 = 0.0;
  double gamma_g = 0.0;
  double gamma_total = 0.0;
  std::vector<int> samples_per_segment;
};

void write_pulse(std::ostream& out, FileFormat format,
                 const PulseSummary& summary, const PulseSchedule& schedule);

struct LoadedPulse {
  PulseSummary summary;
  PulseSchedule schedule;
};

// Reads either format (sniffed from the first non-space byte). The sample
// grid is rebuilt from the segment boundaries and per-segment counts with
// the same arithmetic the scheduler uses, so a written-and-reloaded
// schedule is bit-identical. Throws Error("BadInput") on malformed files.
LoadedPulse load_pulse(const std::string& filename);

struct TrajectoryRow {
  double t = 0.0;  // tau_0 units
  double p0 = 0.0;
  double p1 = 0.0;
  double fidelity = 0.0;
  double trace_error = 0.0;
};

struct TrajectorySummary {
  std::string path_name;
  double final_fidelity = 0.0;
  double final_trace_error = 0.0;
  double gamma_g = 0.0;
  double gamma_total = 0.0;
  double total_time = 0.0;
  double gamma1 = 0.0;
  double gamma2 = 0.0;
  int dt_per_tau0 = 0;
};

void write_trajectory(std::ostream& out, FileFormat format,
                      const TrajectorySummary& summary,
                      const std::vector<TrajectoryRow>& rows);

struct ScanSummary {
  double gamma_target = 0.0;
  double theta_c = 0.0;
  double total_time = 0.0;
};

void write_scan(std::ostream& out, FileFormat format, const ScanSummary& summary,
                const std::vector<std::pair<double, double>>& scan);

struct BenchRow {
  std::string path_name;
  double total_time = 0.0;
  double gamma_g = 0.0;
  double gamma_total = 0.0;
  double gate_distance = 0.0;
  double fidelity = 0.0;
};

void write_bench(std::ostream& out, FileFormat format,
                 const std::vector<BenchRow>& rows);

// {"eta": ..., "segments": [{"kind": "meridian"|"arc"|"parametric",
//  "theta_start": ..., "theta_end": ..., "phi_start": ..., "phi_end": ...,
//  "duration": ...}, ...]}
ClosedPath load_path_json(const std::string& filename);

std::string format_double(double x);  // 17 significant digits

}  // namespace geomgate
