#pragma once

// Command implementations behind the geomgate binary. Kept in the library
// so they can be driven directly from tests; tools/main.cpp only parses
// flags into a RunConfig and dispatches.

#include <string>

#include "geomgate/io.hpp"

namespace geomgate {

// Exit codes: 0 success, 2 configuration error, 3 infeasible physics.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitInfeasible = 3;

struct RunConfig {
  enum class Command { synthesize, simulate, optimize, bench };
  Command command = Command::bench;

  std::string path_name;   // orange-slice | conventional-triangle | unconventional-triangle
  std::string path_file;   // JSON path description
  std::string pulse_file;  // simulate a previously synthesized pulse

  bool eta_override = false;
  double eta = 0.0;        // applies to file paths only
  double phi0 = 0.0;

  // Device parameters; MHz / Hz unless dimensionless is set, in which case
  // they are Omega_0 ratios directly.
  double omega0 = 20.0;    // MHz
  double delta0 = 20.0;    // MHz
  double gamma1 = 4e4;     // Hz
  double gamma2 = 4e4;     // Hz
  bool dimensionless = false;

  int dt_per_tau0 = 10000;       // integrator steps per tau_0, >= 100
  int samples_per_segment = 1000;
  double gamma_target = M_PI / 2.0;  // optimizer target phase
  int scan_points = 2000;

  std::string output_path;  // empty writes to stdout
  FileFormat format = FileFormat::csv;
};

// Normalize the physical-unit inputs once into Omega_0 units.
DeviceLimits normalized_limits(const RunConfig& cfg);

int cmd_synthesize(const RunConfig& cfg);
int cmd_simulate(const RunConfig& cfg);
int cmd_optimize(const RunConfig& cfg);
int cmd_bench(const RunConfig& cfg);

int run_command(const RunConfig& cfg);  // dispatch + error-to-exit-code map

}  // namespace geomgate
