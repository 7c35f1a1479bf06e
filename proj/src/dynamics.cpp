#include "geomgate/dynamics.hpp"

#include <algorithm>
#include <cmath>

namespace geomgate {

namespace {

const complexd kI(0.0, 1.0);

// exp(-i H t_phys) for the traceless H of one control sample
Matrix2 step_unitary(const ControlPoint& c, double t_phys) {
  PauliVector axis;
  const double half = 0.5 * t_phys;
  axis.cx = c.omega_r * std::cos(c.phi_pulse) * half;
  axis.cy = c.omega_r * std::sin(c.phi_pulse) * half;
  axis.cz = c.delta * half;
  return expm_su2(axis);
}

int substeps(double width, double dt) {
  return std::max(1, static_cast<int>(std::ceil(width / dt - 1e-12)));
}

}  // namespace

QubitState::QubitState(const Vector2c& a) : amplitudes(a) {
  if (std::abs(amplitudes.norm() - 1.0) > 1e-10) {
    throw Error("InvalidState", "state vector is not normalized");
  }
}

QubitState QubitState::plus() {
  return QubitState(Vector2c(1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0)));
}

Matrix2 hamiltonian_at(const ControlPoint& c) {
  const complexd off =
      0.5 * c.omega_r * std::exp(-kI * c.phi_pulse);
  Matrix2 h;
  h << 0.5 * c.delta, off,
       std::conj(off), -0.5 * c.delta;
  return h;
}

UnitaryTrajectory propagate_unitary(const PulseSchedule& schedule, double dt) {
  UnitaryTrajectory traj;
  traj.times.push_back(0.0);
  traj.unitaries.push_back(Matrix2::Identity());
  if (schedule.empty()) {
    traj.empty_schedule = true;
    return traj;
  }
  Matrix2 u = Matrix2::Identity();
  for (const auto& s : schedule.samples) {
    const int k = substeps(s.width, dt);
    const Matrix2 step = step_unitary(s.control, (s.width / k) * schedule.tau0);
    for (int j = 0; j < k; ++j) u = step * u;
    traj.times.push_back(s.time + 0.5 * s.width);
    traj.unitaries.push_back(u);
  }
  return traj;
}

Matrix2 propagate_until(const PulseSchedule& schedule, double t, double dt) {
  if (t < 0.0 || t > schedule.total_time * (1.0 + 1e-12)) {
    throw Error("BadInput", "time outside the schedule");
  }
  Matrix2 u = Matrix2::Identity();
  for (const auto& s : schedule.samples) {
    const double start = s.time - 0.5 * s.width;
    const double end = s.time + 0.5 * s.width;
    if (t <= start) break;
    const double span = std::min(t, end) - start;
    const int k = substeps(s.width, dt);
    // whole substeps plus one exact partial step of the constant control
    const double h = s.width / k;
    const int whole = static_cast<int>(std::floor(span / h));
    if (whole > 0) {
      const Matrix2 step = step_unitary(s.control, h * schedule.tau0);
      for (int j = 0; j < whole; ++j) u = step * u;
    }
    const double rest = span - whole * h;
    if (rest > 0.0) u = step_unitary(s.control, rest * schedule.tau0) * u;
    if (t <= end) break;
  }
  return u;
}

double oracle_designed_evolution(const ClosedPath& path,
                                 const PulseSchedule& schedule, double t,
                                 double dt) {
  if (t < 0.0 || t > schedule.total_time * (1.0 + 1e-12)) {
    throw Error("BadInput", "time outside the schedule");
  }
  const Matrix2 u_num = propagate_until(schedule, t, dt);

  const int seg = schedule.segment_at(std::min(t, schedule.total_time));
  const double b0 = schedule.segment_boundaries[seg];
  const double b1 = schedule.segment_boundaries[seg + 1];
  const double frac = std::clamp((t - b0) / (b1 - b0), 0.0, 1.0);

  const auto& s = path.segments[static_cast<std::size_t>(seg)];
  const double theta = s.theta_start + (s.theta_end - s.theta_start) * frac;
  const double phi = s.phi_start + (s.phi_end - s.phi_start) * frac;

  const double gamma_g = geometric_phase_partial(path, seg, frac);
  const double gamma = (1.0 + path.eta) * gamma_g;

  Matrix2 phase = Matrix2::Zero();
  phase(0, 0) = std::exp(-kI * gamma);
  phase(1, 1) = std::exp(kI * gamma);

  const auto& first = path.segments.front();
  const Matrix2 u_design = rotation_matrix(theta, phi) * phase *
                           rotation_matrix(first.theta_start, first.phi_start)
                               .adjoint();
  return (u_num - u_design).cwiseAbs().maxCoeff();
}

namespace {

struct LindbladGenerator {
  Matrix2 hamiltonian;
  double gamma1 = 0.0;
  double gamma2 = 0.0;

  Matrix2 operator()(const Matrix2& rho) const {
    static const Matrix2 sp = (Matrix2() << 0, 1, 0, 0).finished();
    static const Matrix2 sm = (Matrix2() << 0, 0, 1, 0).finished();
    static const Matrix2 smsp = (Matrix2() << 0, 0, 0, 1).finished();
    const Matrix2& sz = pauli_z();

    Matrix2 d = kI * (rho * hamiltonian - hamiltonian * rho);
    d += 0.5 * gamma1 *
         (2.0 * sp * rho * sm - smsp * rho - rho * smsp);
    d += 0.5 * gamma2 * (2.0 * sz * rho * sz - 2.0 * rho);
    return d;
  }
};

Matrix2 rk4_step(const LindbladGenerator& f, const Matrix2& rho, double h) {
  const Matrix2 k1 = f(rho);
  const Matrix2 k2 = f(rho + 0.5 * h * k1);
  const Matrix2 k3 = f(rho + 0.5 * h * k2);
  const Matrix2 k4 = f(rho + h * k3);
  return rho + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

}  // namespace

std::vector<DensityRecord> lindblad_evolve(const PulseSchedule& schedule,
                                           const Matrix2& rho0,
                                           const DeviceLimits& limits,
                                           double dt) {
  const DensityDiagnostics diag = check_density(rho0);
  if (diag.trace_error > 1e-9 || diag.hermiticity_error > 1e-9 ||
      diag.min_eigenvalue < -1e-9) {
    throw Error("InvalidState", "rho0 is not a valid density matrix");
  }

  std::vector<DensityRecord> traj;
  traj.push_back({0.0, rho0});
  Matrix2 rho = rho0;
  for (const auto& s : schedule.samples) {
    LindbladGenerator gen;
    gen.hamiltonian = hamiltonian_at(s.control);
    gen.gamma1 = limits.gamma1;
    gen.gamma2 = limits.gamma2;
    const int k = substeps(s.width, dt);
    const double h = (s.width / k) * schedule.tau0;
    for (int j = 0; j < k; ++j) rho = rk4_step(gen, rho, h);
    traj.push_back({s.time + 0.5 * s.width, rho});
  }
  return traj;
}

double state_fidelity(const Matrix2& rho, const QubitState& target) {
  const double f =
      (target.amplitudes.adjoint() * rho * target.amplitudes)(0, 0).real();
  return std::clamp(f, 0.0, 1.0);
}

TwoQubitControls make_two_qubit_controls(const PulseSchedule& designed,
                                         double delta_omega) {
  TwoQubitControls c;
  c.shared = designed;
  c.delta_omega = delta_omega;
  c.delta_up.reserve(designed.samples.size());
  c.delta_down.reserve(designed.samples.size());
  for (const auto& s : designed.samples) {
    c.delta_up.push_back(s.control.delta);
    c.delta_down.push_back(s.control.delta - delta_omega);
  }
  return c;
}

TwoQubitResult two_qubit_propagate(const TwoQubitControls& controls,
                                   double dt) {
  Matrix2 up = Matrix2::Identity();
  Matrix2 down = Matrix2::Identity();
  const auto& sched = controls.shared;
  for (std::size_t i = 0; i < sched.samples.size(); ++i) {
    const auto& s = sched.samples[i];
    const int k = substeps(s.width, dt);
    const double h = (s.width / k) * sched.tau0;

    ControlPoint cu = s.control;
    cu.delta = controls.delta_up[i];
    ControlPoint cd = s.control;
    cd.delta = controls.delta_down[i];

    const Matrix2 step_up = step_unitary(cu, h);
    const Matrix2 step_down = step_unitary(cd, h);
    for (int j = 0; j < k; ++j) {
      up = step_up * up;
      down = step_down * down;
    }
  }

  TwoQubitResult r;
  r.up_block = up;
  r.down_block = down;
  r.unitary = Matrix4::Zero();
  r.unitary.topLeftCorner<2, 2>() = up;
  r.unitary.bottomRightCorner<2, 2>() = down;
  r.down_block_leakage = gate_distance_global_phase(down, Matrix2::Identity());
  return r;
}

Matrix4 assemble_controlled_gate(const Matrix2& u_sq) {
  Matrix4 u = Matrix4::Identity();
  u.topLeftCorner<2, 2>() = u_sq;
  return u;
}

}  // namespace geomgate
