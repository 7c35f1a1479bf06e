#include "geomgate/paths.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace geomgate {

namespace {

constexpr double kClosureTol = 1e-9;

bool at_pole(double theta) {
  return std::min(std::abs(theta), std::abs(theta - M_PI)) < kClosureTol;
}

// Same point on the sphere: equal theta, and equal phi mod 2pi unless the
// point sits at a pole where phi is a gauge coordinate.
bool same_sphere_point(double theta_a, double phi_a, double theta_b,
                       double phi_b) {
  if (std::abs(theta_a - theta_b) > kClosureTol) return false;
  if (at_pole(theta_a)) return true;
  return std::abs(std::remainder(phi_a - phi_b, 2.0 * M_PI)) < kClosureTol;
}

}  // namespace

PathPoint PathSegment::at(double u) const {
  PathPoint p;
  p.theta = theta_start + (theta_end - theta_start) * u;
  p.phi = phi_start + (phi_end - phi_start) * u;
  const double t_phys = duration * M_PI;  // tau_0 = pi / Omega_0
  p.theta_dot = (theta_end - theta_start) / t_phys;
  p.phi_dot = (phi_end - phi_start) / t_phys;
  return p;
}

PathSegment meridian_segment(double theta_start, double theta_end, double phi,
                             double duration) {
  PathSegment s;
  s.kind = SegmentKind::meridian;
  s.theta_start = theta_start;
  s.theta_end = theta_end;
  s.phi_start = phi;
  s.phi_end = phi;
  s.duration = duration;
  return s;
}

PathSegment arc_segment(double theta, double phi_start, double phi_end,
                        double duration) {
  PathSegment s;
  s.kind = SegmentKind::arc;
  s.theta_start = theta;
  s.theta_end = theta;
  s.phi_start = phi_start;
  s.phi_end = phi_end;
  s.duration = duration;
  return s;
}

bool closure_check(const ClosedPath& path) {
  const auto& segs = path.segments;
  if (segs.empty()) return false;
  for (std::size_t i = 0; i < segs.size(); ++i) {
    const auto& next = segs[(i + 1) % segs.size()];
    if (!same_sphere_point(segs[i].theta_end, segs[i].phi_end,
                           next.theta_start, next.phi_start)) {
      return false;
    }
  }
  return true;
}

DeviceLimits default_device_limits() {
  DeviceLimits l;
  l.omega_max = 1.0;
  l.delta_max = 1.0;
  l.gamma1 = 2e-3;
  l.gamma2 = 2e-3;
  return l;
}

const ControlPoint& PulseSchedule::control_at(double t) const {
  if (samples.empty()) {
    throw Error("BadInput", "schedule has no samples");
  }
  return samples[static_cast<std::size_t>(sample_index_at(t))].control;
}

int PulseSchedule::segment_at(double t) const {
  const auto it = std::upper_bound(segment_boundaries.begin() + 1,
                                   segment_boundaries.end() - 1, t);
  return static_cast<int>(it - segment_boundaries.begin()) - 1;
}

int PulseSchedule::sample_index_at(double t) const {
  int lo = 0;
  int hi = static_cast<int>(samples.size()) - 1;
  while (lo < hi) {
    const int mid = (lo + hi) / 2;
    const auto& s = samples[static_cast<std::size_t>(mid)];
    if (t < s.time - 0.5 * s.width) {
      hi = mid - 1;
    } else if (t >= s.time + 0.5 * s.width) {
      lo = mid + 1;
    } else {
      return mid;
    }
  }
  return std::clamp(lo, 0, static_cast<int>(samples.size()) - 1);
}

ClosedPath orange_slice_path(double phi0) {
  ClosedPath p;
  p.eta = 0.0;
  p.segments.push_back(meridian_segment(0.0, M_PI, phi0));
  p.segments.push_back(meridian_segment(M_PI, 0.0, phi0 + M_PI / 2.0));
  return p;
}

ClosedPath conventional_triangle_path(double phi0) {
  ClosedPath p;
  p.eta = 0.0;
  const double theta_c = 2.0 * M_PI / 3.0;
  const double dphi = 2.0 * M_PI / 3.0;
  p.segments.push_back(meridian_segment(0.0, theta_c, phi0));
  p.segments.push_back(arc_segment(theta_c, phi0, phi0 + dphi));
  p.segments.push_back(meridian_segment(theta_c, 0.0, phi0 + dphi));
  return p;
}

ClosedPath unconventional_triangle_path(double phi0) {
  ClosedPath p;
  p.eta = 1.0;
  const double theta_c = M_PI / 2.0;
  const double dphi = M_PI / 2.0;
  p.segments.push_back(meridian_segment(0.0, theta_c, phi0));
  p.segments.push_back(arc_segment(theta_c, phi0, phi0 + dphi));
  p.segments.push_back(meridian_segment(theta_c, 0.0, phi0 + dphi));
  return p;
}

ClosedPath triangle_family_path(double theta_c, double gamma_target,
                                double phi0) {
  ClosedPath p;
  p.eta = 0.0;
  const double dphi = 2.0 * gamma_target / (1.0 - std::cos(theta_c));
  p.segments.push_back(meridian_segment(0.0, theta_c, phi0));
  p.segments.push_back(arc_segment(theta_c, phi0, phi0 + dphi));
  p.segments.push_back(meridian_segment(theta_c, 0.0, phi0 + dphi));
  return p;
}

namespace {

// Smallest physical traversal time (1/Omega_0 units) under both ceilings.
// Omega and Delta are positively homogeneous in the traversal rate, so the
// binding constraint is the max over probe points of the per-unit demands.
double segment_min_time(const PathSegment& seg, double eta,
                        const DeviceLimits& limits, int n_probes) {
  const int probes = (seg.kind == SegmentKind::parametric)
                         ? std::max(n_probes, 64)
                         : 1;
  double t_min = 0.0;
  for (int k = 0; k < probes; ++k) {
    const double u = (k + 0.5) / probes;
    PathPoint p;
    p.theta = seg.theta_start + (seg.theta_end - seg.theta_start) * u;
    p.phi = seg.phi_start + (seg.phi_end - seg.phi_start) * u;
    p.theta_dot = seg.theta_end - seg.theta_start;  // per unit time
    p.phi_dot = seg.phi_end - seg.phi_start;
    const ControlPoint c = synthesize_controls(p, eta);
    t_min = std::max(t_min, c.omega_r / limits.omega_max);
    if (std::abs(c.delta) > 0.0) {
      if (limits.delta_max <= 0.0) {
        return std::numeric_limits<double>::infinity();
      }
      t_min = std::max(t_min, std::abs(c.delta) / limits.delta_max);
    }
  }
  return t_min;
}

}  // namespace

PulseSchedule schedule_square_wave(const ClosedPath& path,
                                   const DeviceLimits& limits,
                                   int n_samples_per_segment) {
  const double tau0 = M_PI / limits.omega_max;

  PulseSchedule sched;
  sched.tau0 = tau0;
  sched.segment_boundaries.push_back(0.0);

  // pass 1: durations
  std::vector<double> durations;
  for (std::size_t i = 0; i < path.segments.size(); ++i) {
    const double t_phys =
        segment_min_time(path.segments[i], path.eta, limits,
                         n_samples_per_segment);
    if (!std::isfinite(t_phys) || t_phys <= 0.0) {
      throw Error("InfeasibleSegment",
                  "segment " + std::to_string(i) +
                      " admits no positive traversal rate under the limits");
    }
    durations.push_back(t_phys / tau0);
    sched.segment_boundaries.push_back(sched.segment_boundaries.back() +
                                       durations.back());
  }
  sched.total_time = sched.segment_boundaries.back();

  // pass 2: uniform midpoint samples per segment
  for (std::size_t i = 0; i < path.segments.size(); ++i) {
    const auto& seg = path.segments[i];
    const int n = std::max(1, n_samples_per_segment);
    const double start = sched.segment_boundaries[i];
    const double width = (sched.segment_boundaries[i + 1] - start) / n;
    const double t_phys = durations[i] * tau0;
    double area = 0.0;
    int direction = 1;
    for (int k = 0; k < n; ++k) {
      const double u = (k + 0.5) / n;
      PathPoint p;
      p.theta = seg.theta_start + (seg.theta_end - seg.theta_start) * u;
      p.phi = seg.phi_start + (seg.phi_end - seg.phi_start) * u;
      p.theta_dot = (seg.theta_end - seg.theta_start) / t_phys;
      p.phi_dot = (seg.phi_end - seg.phi_start) / t_phys;

      ScheduleSample s;
      s.time = start + (k + 0.5) * width;
      s.width = width;
      s.segment = static_cast<int>(i);
      s.control = synthesize_controls(p, path.eta);
      area += s.control.omega_r * width * tau0;
      direction = s.control.signed_direction;
      sched.samples.push_back(s);
    }
    sched.signed_areas.push_back(direction * area);
  }
  return sched;
}

TriangleOptimum optimize_conventional_triangle(const DeviceLimits& limits,
                                               double gamma_target,
                                               int grid_points) {
  if (!(gamma_target > 0.0) || !(gamma_target < 2.0 * M_PI)) {
    throw Error("InfeasibleTarget", "gamma_target must lie in (0, 2*pi)");
  }

  auto loop_time = [&](double theta_c) {
    const ClosedPath p = triangle_family_path(theta_c, gamma_target);
    return schedule_square_wave(p, limits, 1).total_time;
  };

  const double lo = 0.01 * M_PI;
  const double hi = 0.99 * M_PI;
  const int n = std::max(grid_points, 16);

  TriangleOptimum best;
  for (int k = 0; k <= n; ++k) {
    const double theta_c = lo + (hi - lo) * k / n;
    try {
      best.scan.emplace_back(theta_c, loop_time(theta_c));
    } catch (const Error&) {
    }
  }
  if (best.scan.empty()) {
    throw Error("InfeasibleTarget", "no apex angle is schedulable");
  }

  double grid_min = std::numeric_limits<double>::infinity();
  for (const auto& [theta_c, t] : best.scan) grid_min = std::min(grid_min, t);
  // ties within 1e-9 resolve to the smaller apex angle
  best.theta_c = 0.0;
  best.total_time = std::numeric_limits<double>::infinity();
  for (const auto& [theta_c, t] : best.scan) {
    if (t <= grid_min + 1e-9) {
      best.theta_c = theta_c;
      best.total_time = t;
      break;
    }
  }

  // ternary refinement on the bracketing interval; the time curve is
  // V-shaped around the minimum even when the binding constraint switches
  const double step = (hi - lo) / n;
  double a = std::max(lo, best.theta_c - step);
  double b = std::min(hi, best.theta_c + step);
  for (int iter = 0; iter < 200 && (b - a) > 1e-12; ++iter) {
    const double m1 = a + (b - a) / 3.0;
    const double m2 = b - (b - a) / 3.0;
    double t1, t2;
    try {
      t1 = loop_time(m1);
      t2 = loop_time(m2);
    } catch (const Error&) {
      return best;
    }
    if (t1 < t2) {
      b = m2;
    } else {
      a = m1;
    }
  }
  const double refined = 0.5 * (a + b);
  try {
    const double t_refined = loop_time(refined);
    if (t_refined < best.total_time) {
      best.theta_c = refined;
      best.total_time = t_refined;
    }
  } catch (const Error&) {
  }
  return best;
}

}  // namespace geomgate
