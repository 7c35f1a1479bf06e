#pragma once

// Minimal dense complex linear algebra for the one- and two-qubit spaces
// (fixed dimensions 2 and 4): Pauli decomposition, closed-form SU(2)
// exponential, and density-matrix health checks.

#include <complex>

#include <Eigen/Dense>

#include "geomgate/errors.hpp"

namespace geomgate {

using complexd = std::complex<double>;
using Matrix2 = Eigen::Matrix2cd;
using Matrix4 = Eigen::Matrix4cd;
using Vector2c = Eigen::Vector2cd;

inline constexpr double kHermitianTol = 1e-10;

// Pauli matrices in the basis (|1>, |0>), so sigma_z = |1><1| - |0><0|.
const Matrix2& pauli_x();
const Matrix2& pauli_y();
const Matrix2& pauli_z();

// Coefficients of c0*I + cx*sx + cy*sy + cz*sz; all real for a Hermitian matrix.
struct PauliVector {
  double c0 = 0.0;
  double cx = 0.0;
  double cy = 0.0;
  double cz = 0.0;
};

Matrix2 pauli_assemble(const PauliVector& c);

// Inverse of pauli_assemble: ck = tr(sigma_k m)/2. Throws Error("NotHermitian")
// if any entry of m - m^dagger exceeds kHermitianTol.
PauliVector pauli_decompose(const Matrix2& m);

// exp(-i a.sigma) = cos|a| I - i sin|a| (a_hat.sigma); a.c0 must be zero.
// The zero axis returns the identity.
Matrix2 expm_su2(const PauliVector& axis);

struct DensityDiagnostics {
  double trace_error = 0.0;       // |tr(rho) - 1|
  double hermiticity_error = 0.0; // max entry of |rho - rho^dagger|
  double min_eigenvalue = 0.0;    // of the Hermitian part
};

DensityDiagnostics check_density(const Matrix2& rho);
DensityDiagnostics check_density(const Matrix4& rho);

// 1 - |tr(u^dagger v)|/dim: zero iff u and v agree up to a global phase.
double gate_distance_global_phase(const Matrix2& u, const Matrix2& v);
double gate_distance_global_phase(const Matrix4& u, const Matrix4& v);
// Dynamic-size overload; throws Error("DimensionMismatch") on unequal shapes.
double gate_distance_global_phase(const Eigen::MatrixXcd& u, const Eigen::MatrixXcd& v);

}  // namespace geomgate
