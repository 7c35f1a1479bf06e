#pragma once

// Propagation: closed-system time-ordered evolution (exact SU(2) steps on
// the piecewise-constant drive), the designed-evolution oracle
// R(t) e^{-i gamma(t) sz} R^dag(0), Lindblad open-system integration, state
// and gate fidelity metrics, and the block-diagonal two-qubit extension.

#include <vector>

#include "geomgate/paths.hpp"

namespace geomgate {

// Pure state; the constructor enforces unit norm (1e-10).
struct QubitState {
  Vector2c amplitudes;

  explicit QubitState(const Vector2c& a);
  static QubitState plus();  // (|0> + |1>)/sqrt(2)
};

// 0.5 * [[Delta, Omega e^{-i phi}], [Omega e^{i phi}, -Delta]]
Matrix2 hamiltonian_at(const ControlPoint& c);

struct UnitaryTrajectory {
  std::vector<double> times;      // tau_0 units
  std::vector<Matrix2> unitaries; // U(times[k]); includes t = 0 and t = tau
  bool empty_schedule = false;

  const Matrix2& final_unitary() const { return unitaries.back(); }
};

// Time-ordered product of closed-form SU(2) steps. Each sample interval is
// subdivided into ceil(width/dt) equal steps with the interval's constant
// controls, so the result is exact for the stored staircase. An empty
// schedule yields the identity with the warning flag set.
UnitaryTrajectory propagate_unitary(const PulseSchedule& schedule, double dt);

// U(t) for t inside the schedule (tau_0 units).
Matrix2 propagate_until(const PulseSchedule& schedule, double t, double dt);

// Max-entry distance between the numerically propagated U(t) and the
// designed form R(theta_t, phi_t) e^{-i gamma(t) sz} R^dag(theta_0, phi_0).
// Throws Error("BadInput") if t lies outside the schedule.
double oracle_designed_evolution(const ClosedPath& path,
                                 const PulseSchedule& schedule, double t,
                                 double dt = 1e-4);

struct DensityRecord {
  double t = 0.0;  // tau_0 units
  Matrix2 rho;
};

// Fixed-step RK4 integration of
//   drho/dt = i[rho, H(t)] + (1/2)(gamma1 L(sp) + gamma2 L(sz)),
//   L(A) rho = 2 A rho A^dag - A^dag A rho - rho A^dag A,  sp = |1><0|.
// Steps subdivide each sample interval, so H is constant within a step.
// Throws Error("InvalidState") if rho0 fails the density checks.
std::vector<DensityRecord> lindblad_evolve(const PulseSchedule& schedule,
                                           const Matrix2& rho0,
                                           const DeviceLimits& limits,
                                           double dt);

// <target| rho |target>, clipped to [0, 1].
double state_fidelity(const Matrix2& rho, const QubitState& target);

// Shared drive with per-block detunings for the nuclear-spin-conditioned
// gate; delta_omega = delta_up - delta_down pointwise.
struct TwoQubitControls {
  PulseSchedule shared;
  std::vector<double> delta_up;
  std::vector<double> delta_down;
  double delta_omega = 0.0;
};

TwoQubitControls make_two_qubit_controls(const PulseSchedule& designed,
                                         double delta_omega);

struct TwoQubitResult {
  Matrix4 unitary;  // basis {|1,up>, |0,up>, |1,down>, |0,down>}
  Matrix2 up_block;
  Matrix2 down_block;
  double down_block_leakage = 0.0;  // gate distance of the down block from I
};

// Propagates the two 2x2 blocks independently and direct-sums them; the
// off-block entries are identically zero by construction.
TwoQubitResult two_qubit_propagate(const TwoQubitControls& controls, double dt);

// |up><up| (x) u_sq + |down><down| (x) I
Matrix4 assemble_controlled_gate(const Matrix2& u_sq);

}  // namespace geomgate
