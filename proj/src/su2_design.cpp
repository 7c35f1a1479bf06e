#include "geomgate/su2_design.hpp"

#include <cmath>

#include "geomgate/paths.hpp"

namespace geomgate {

namespace {

const complexd kI(0.0, 1.0);

double wrap_phase(double phi) {
  // map to (-pi, pi]
  double w = std::remainder(phi, 2.0 * M_PI);
  if (w <= -M_PI) w += 2.0 * M_PI;
  return w;
}

}  // namespace

GateSpec make_gate_spec(double eta, double theta0, double phi0, double gamma_g) {
  GateSpec g;
  g.eta = eta;
  g.theta0 = theta0;
  g.phi0 = phi0;
  g.gamma_g = gamma_g;
  g.gamma_total = total_phase(gamma_g, eta);
  return g;
}

Matrix2 rotation_matrix(double theta, double phi) {
  const double c = std::cos(0.5 * theta);
  const double s = std::sin(0.5 * theta);
  const complexd e = std::exp(-kI * phi);
  Matrix2 r;
  r << c, -e * s,
       std::conj(e) * s, c;
  return r;
}

FrameCoefficients frame_coefficients(const PauliVector& h, const PathPoint& p) {
  const double ct = std::cos(p.theta);
  const double st = std::sin(p.theta);
  const double sh2 = std::sin(0.5 * p.theta) * std::sin(0.5 * p.theta);
  const double cp = std::cos(p.phi);
  const double sp = std::sin(p.phi);
  const double s2p = std::sin(2.0 * p.phi);

  FrameCoefficients f;
  f.fx = (ct * cp * cp + sp * sp) * h.cx - sh2 * s2p * h.cy - st * cp * h.cz;
  f.fy = -sh2 * s2p * h.cx + (ct * sp * sp + cp * cp) * h.cy - st * sp * h.cz;
  f.fz = st * cp * h.cx + st * sp * h.cy + ct * h.cz;

  f.gx = 0.5 * p.theta_dot * sp + 0.5 * p.phi_dot * st * cp;
  f.gy = -0.5 * p.theta_dot * cp + 0.5 * p.phi_dot * st * sp;
  f.gz = 0.5 * p.phi_dot * (1.0 - ct);
  return f;
}

PauliVector control_field(const PathPoint& p, double eta) {
  const double ct = std::cos(p.theta);
  const double st = std::sin(p.theta);
  const double sh2 = std::sin(0.5 * p.theta) * std::sin(0.5 * p.theta);
  const double cp = std::cos(p.phi);
  const double sp = std::sin(p.phi);
  const double arc = 0.5 * p.phi_dot * (eta - (1.0 + eta) * ct) * st;

  PauliVector h;
  h.cx = arc * cp - 0.5 * p.theta_dot * sp;
  h.cy = arc * sp + 0.5 * p.theta_dot * cp;
  h.cz = 0.5 * p.phi_dot * (st * st + 2.0 * eta * ct * sh2);
  return h;
}

ControlPoint synthesize_controls(const PathPoint& p, double eta) {
  const PauliVector h = control_field(p, eta);

  ControlPoint c;
  c.omega_r = 2.0 * std::hypot(h.cx, h.cy);
  c.phi_pulse = (c.omega_r > 0.0) ? wrap_phase(std::atan2(h.cy, h.cx)) : 0.0;
  c.delta = 2.0 * h.cz;

  // Bookkeeping sign of the signed Rabi amplitude: the theta sweep carries
  // sign(theta_dot), an arc sweep carries the sign of its drive prefactor.
  const double arc_amp =
      p.phi_dot * std::sin(p.theta) * (eta - (1.0 + eta) * std::cos(p.theta));
  double signed_amp =
      (std::abs(p.theta_dot) >= std::abs(arc_amp)) ? p.theta_dot : arc_amp;
  if (signed_amp == 0.0) signed_amp = 1.0;
  c.signed_direction = (signed_amp >= 0.0) ? 1 : -1;
  return c;
}

TransportResiduals verify_parallel_transport(const PathPoint& p, double eta) {
  const PauliVector h = control_field(p, eta);
  const FrameCoefficients f = frame_coefficients(h, p);
  TransportResiduals r;
  r.offdiag = std::max(std::abs(f.fx + f.gx), std::abs(f.fy + f.gy));
  r.proportionality = std::abs(f.fz - eta * f.gz);
  return r;
}

namespace {

// (1/2) * (1 - cos theta) integrated against dphi along one segment up to
// parameter u; closed form when theta is constant, composite Simpson
// otherwise (the integrand is smooth per segment).
double segment_geometric_phase(const PathSegment& seg, double u, int n_quad) {
  const double dphi = (seg.phi_end - seg.phi_start) * u;
  if (dphi == 0.0) return 0.0;
  if (seg.theta_start == seg.theta_end) {
    return 0.5 * (1.0 - std::cos(seg.theta_start)) * dphi;
  }
  int n = std::max(n_quad, 100);
  if (n % 2 != 0) ++n;
  const double hstep = u / n;
  auto integrand = [&](double s) {
    const double theta =
        seg.theta_start + (seg.theta_end - seg.theta_start) * s;
    return 0.5 * (1.0 - std::cos(theta)) * (seg.phi_end - seg.phi_start);
  };
  double acc = integrand(0.0) + integrand(u);
  for (int k = 1; k < n; ++k) {
    acc += integrand(k * hstep) * ((k % 2 == 1) ? 4.0 : 2.0);
  }
  return acc * hstep / 3.0;
}

// Saltation between two sphere points with equal theta: at theta = pi the
// phi jump contributes in full, at theta = 0 not at all.
double junction_phase(double theta, double phi_from, double phi_to) {
  return 0.5 * (1.0 - std::cos(theta)) * (phi_to - phi_from);
}

}  // namespace

double geometric_phase(const ClosedPath& path, int n_quad) {
  if (!closure_check(path)) {
    throw Error("PathNotClosed", "loop integral requires a closed path");
  }
  double gamma = 0.0;
  const auto& segs = path.segments;
  for (std::size_t i = 0; i < segs.size(); ++i) {
    gamma += segment_geometric_phase(segs[i], 1.0, n_quad);
    const auto& next = segs[(i + 1) % segs.size()];
    gamma += junction_phase(segs[i].theta_end, segs[i].phi_end, next.phi_start);
  }
  return gamma;
}

double geometric_phase_partial(const ClosedPath& path, int segment_index,
                               double fraction, int n_quad) {
  double gamma = 0.0;
  for (int i = 0; i < segment_index; ++i) {
    gamma += segment_geometric_phase(path.segments[i], 1.0, n_quad);
    const auto& next = path.segments[i + 1];
    gamma += junction_phase(path.segments[i].theta_end,
                            path.segments[i].phi_end, next.phi_start);
  }
  gamma += segment_geometric_phase(path.segments[segment_index], fraction, n_quad);
  return gamma;
}

double total_phase(double gamma_g, double eta) {
  if (std::abs(eta + 1.0) < 1e-12) {
    throw Error("TrivialEta", "eta = -1 collapses the accumulated phase");
  }
  return (1.0 + eta) * gamma_g;
}

Matrix2 target_unitary(double theta0, double phi0, double gamma) {
  PauliVector axis;
  axis.cx = gamma * std::sin(theta0) * std::cos(phi0);
  axis.cy = gamma * std::sin(theta0) * std::sin(phi0);
  axis.cz = gamma * std::cos(theta0);
  return expm_su2(axis);
}

}  // namespace geomgate
