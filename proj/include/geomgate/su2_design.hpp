#pragma once

// Inverse-engineering core: the SU(2) frame transformation R(theta, phi),
// frame coefficients of the dynamical and non-Abelian parts, synthesis of
// the drive (Rabi amplitude, pulse phase, detuning) that keeps the
// transformed Hamiltonian diagonal, and the geometric/total phase of a
// closed parameter-sphere loop.

#include "geomgate/algebra.hpp"

namespace geomgate {

struct ClosedPath;  // defined in paths.hpp

// Point on the (theta, phi) parameter sphere together with traversal rates.
// Angles in radians, rates in radians per unit time (Omega_0 = 1 units).
struct PathPoint {
  double theta = 0.0;      // in [0, pi]
  double phi = 0.0;
  double theta_dot = 0.0;
  double phi_dot = 0.0;
};

// Pauli coefficients of R^dag H0 R (f part, linear in the drive) and of
// i (d_t R^dag) R (g part, drive-independent).
struct FrameCoefficients {
  double fx = 0.0, fy = 0.0, fz = 0.0;
  double gx = 0.0, gy = 0.0, gz = 0.0;
};

// Synthesized drive sample. Canonical form: omega_r >= 0 with phi_pulse in
// (-pi, pi]; a negative-amplitude pair (-Omega, phi) is stored as
// (Omega, phi +- pi) with signed_direction flipped, so signed pulse areas
// remain signed_direction * integral(Omega dt).
struct ControlPoint {
  double omega_r = 0.0;    // Rabi amplitude, Omega_0 units
  double phi_pulse = 0.0;  // drive phase, (-pi, pi]
  double delta = 0.0;      // detuning, Omega_0 units
  int signed_direction = 1;
};

// Target rotation: axis from (theta0, phi0), angle 2*gamma_total,
// gamma_total = (1 + eta) * gamma_g.
struct GateSpec {
  double eta = 0.0;      // must differ from -1
  double theta0 = 0.0;
  double phi0 = 0.0;
  double gamma_g = 0.0;
  double gamma_total = 0.0;
};

GateSpec make_gate_spec(double eta, double theta0, double phi0, double gamma_g);

// R(theta, phi) = [[cos(t/2), -e^{-i phi} sin(t/2)], [e^{i phi} sin(t/2), cos(t/2)]].
// At theta = 0 this is the identity for every phi.
Matrix2 rotation_matrix(double theta, double phi);

// Frame coefficients for a given traceless drive h at path point p.
FrameCoefficients frame_coefficients(const PauliVector& h, const PathPoint& p);

// Drive h(t) that cancels the off-diagonal frame terms and makes the
// dynamical diagonal equal eta times the non-Abelian one.
PauliVector control_field(const PathPoint& p, double eta);

// control_field folded into drive parameters: Omega_R = 2|h_x - i h_y|,
// phi_pulse = arg(h_x + i h_y), Delta = 2 h_z.
ControlPoint synthesize_controls(const PathPoint& p, double eta);

struct TransportResiduals {
  double offdiag = 0.0;          // max(|fx + gx|, |fy + gy|)
  double proportionality = 0.0;  // |fz - eta * gz|
};

// Residuals of the diagonalization conditions for the synthesized drive;
// both vanish identically (<= 1e-12) by construction.
TransportResiduals verify_parallel_transport(const PathPoint& p, double eta);

// Loop integral (1/2) oint (1 - cos theta) dphi over a closed path,
// including the contribution of phase saltations at segment junctions.
// Composite Simpson with n_quad >= 100 nodes per general segment; exact
// closed form on constant-theta segments. Throws Error("PathNotClosed").
double geometric_phase(const ClosedPath& path, int n_quad = 200);

// Running value of the loop integral after time fraction `fraction` of
// segment `segment_index` (junction jumps up to that point included).
double geometric_phase_partial(const ClosedPath& path, int segment_index,
                               double fraction, int n_quad = 200);

// gamma = (1 + eta) * gamma_g. Throws Error("TrivialEta") at eta = -1.
double total_phase(double gamma_g, double eta);

// exp(-i gamma n0.sigma) with n0 the unit vector at (theta0, phi0).
Matrix2 target_unitary(double theta0, double phi0, double gamma);

}  // namespace geomgate
