#pragma once

// Parameter-sphere path builders (the orange slice and the two triangle
// loops), square-wave scheduling under device limits, and the time-optimal
// triangle search.

#include <cmath>
#include <string>
#include <vector>

#include "geomgate/su2_design.hpp"

namespace geomgate {

enum class SegmentKind { meridian, arc, parametric };

// One leg of a closed loop. Meridians hold phi fixed, arcs hold theta
// fixed, parametric legs sweep both coordinates linearly. The duration is
// a nominal parametrization; schedule_square_wave derives its own timing.
struct PathSegment {
  SegmentKind kind = SegmentKind::meridian;
  double theta_start = 0.0;
  double theta_end = 0.0;
  double phi_start = 0.0;
  double phi_end = 0.0;
  double duration = 1.0;  // tau_0 units, > 0

  PathPoint at(double u) const;  // u in [0, 1], rates from span/duration
};

PathSegment meridian_segment(double theta_start, double theta_end, double phi,
                             double duration = 1.0);
PathSegment arc_segment(double theta, double phi_start, double phi_end,
                        double duration = 1.0);

// Ordered segments forming a loop with R(tau) = R(0). Chaining and closure
// treat theta = 0 and theta = pi as single sphere points (phi is free
// there); a phi jump at theta = pi is the saltation that feeds the
// geometric phase.
struct ClosedPath {
  std::vector<PathSegment> segments;
  double eta = 0.0;
};

bool closure_check(const ClosedPath& path);

// Device envelope in Omega_0-normalized units.
struct DeviceLimits {
  double omega_max = 1.0;  // Rabi ceiling (1.0 = Omega_0)
  double delta_max = 1.0;  // detuning ceiling, Omega_0 units
  double gamma1 = 0.0;     // decay-channel rate, Omega_0 units
  double gamma2 = 0.0;     // dephasing-channel rate, Omega_0 units

  double tau0() const { return M_PI / omega_max; }
};

DeviceLimits default_device_limits();  // Omega_0 = Delta_0, gamma1 = gamma2 = 2e-3

struct ScheduleSample {
  double time = 0.0;   // interval midpoint, tau_0 units
  double width = 0.0;  // interval length, tau_0 units
  int segment = 0;
  ControlPoint control;
};

// Piecewise-constant drive program for a closed path. Sample i holds the
// controls on [time - width/2, time + width/2); segment_boundaries has
// n_segments + 1 entries starting at 0 and ending at total_time. All times
// are in tau_0 units; tau0 is the physical length of that unit in 1/Omega_0.
struct PulseSchedule {
  std::vector<ScheduleSample> samples;
  std::vector<double> segment_boundaries;
  std::vector<double> signed_areas;  // per segment, radians
  double total_time = 0.0;
  double tau0 = M_PI;

  bool empty() const { return samples.empty(); }
  // Controls in effect at time t (tau_0 units); clamps to the last sample.
  const ControlPoint& control_at(double t) const;
  int segment_at(double t) const;
  int sample_index_at(double t) const;
};

// The three loops of the gate catalogue; all realize U_Z up to global phase.
ClosedPath orange_slice_path(double phi0 = 0.0);            // eta = 0
ClosedPath conventional_triangle_path(double phi0 = 0.0);   // eta = 0
ClosedPath unconventional_triangle_path(double phi0 = 0.0); // eta = 1

// Triangle-family loop: pole -> theta_c meridian -> arc spanning
// 2*gamma_target/(1 - cos theta_c) -> meridian back. eta = 0.
ClosedPath triangle_family_path(double theta_c, double gamma_target,
                                double phi0 = 0.0);

// Runs every segment at the largest constant traversal rate with
// Omega_R <= omega_max and |Delta| <= delta_max (whichever binds) and
// samples the controls uniformly. Throws Error("InfeasibleSegment") when a
// segment admits no positive rate.
PulseSchedule schedule_square_wave(const ClosedPath& path,
                                   const DeviceLimits& limits,
                                   int n_samples_per_segment = 1000);

struct TriangleOptimum {
  double theta_c = 0.0;
  double total_time = 0.0;                        // tau_0 units
  std::vector<std::pair<double, double>> scan;    // (theta_c, time) curve
};

// Grid-plus-refinement minimization of the scheduled loop time over the
// triangle-family apex angle. Ties within 1e-9 resolve to the smaller
// theta_c. Throws Error("InfeasibleTarget") when no apex is schedulable.
TriangleOptimum optimize_conventional_triangle(const DeviceLimits& limits,
                                               double gamma_target,
                                               int grid_points = 2000);

}  // namespace geomgate
