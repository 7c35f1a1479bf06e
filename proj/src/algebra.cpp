#include "geomgate/algebra.hpp"

#include <algorithm>
#include <cmath>

namespace geomgate {

namespace {
const complexd kI(0.0, 1.0);
}

const Matrix2& pauli_x() {
  static const Matrix2 m = (Matrix2() << 0, 1, 1, 0).finished();
  return m;
}

const Matrix2& pauli_y() {
  static const Matrix2 m = (Matrix2() << 0, -kI, kI, 0).finished();
  return m;
}

const Matrix2& pauli_z() {
  static const Matrix2 m = (Matrix2() << 1, 0, 0, -1).finished();
  return m;
}

Matrix2 pauli_assemble(const PauliVector& c) {
  Matrix2 m;
  m << c.c0 + c.cz, c.cx - kI * c.cy,
       c.cx + kI * c.cy, c.c0 - c.cz;
  return m;
}

PauliVector pauli_decompose(const Matrix2& m) {
  const double herm = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (herm > kHermitianTol) {
    throw Error("NotHermitian",
                "matrix deviates from Hermitian by " + std::to_string(herm));
  }
  PauliVector c;
  c.c0 = 0.5 * m.trace().real();
  c.cx = 0.5 * (pauli_x() * m).trace().real();
  c.cy = 0.5 * (pauli_y() * m).trace().real();
  c.cz = 0.5 * (pauli_z() * m).trace().real();
  return c;
}

Matrix2 expm_su2(const PauliVector& axis) {
  const double norm =
      std::sqrt(axis.cx * axis.cx + axis.cy * axis.cy + axis.cz * axis.cz);
  if (norm == 0.0) return Matrix2::Identity();
  const double c = std::cos(norm);
  const double s = std::sin(norm) / norm;
  Matrix2 u;
  u << c - kI * s * axis.cz, -kI * s * (axis.cx - kI * axis.cy),
       -kI * s * (axis.cx + kI * axis.cy), c + kI * s * axis.cz;
  return u;
}

namespace {

template <typename Matrix>
DensityDiagnostics diagnose(const Matrix& rho) {
  DensityDiagnostics d;
  d.trace_error = std::abs(rho.trace() - complexd(1.0, 0.0));
  d.hermiticity_error = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
  const Matrix herm = 0.5 * (rho + rho.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(herm);
  d.min_eigenvalue = solver.eigenvalues().minCoeff();
  return d;
}

}  // namespace

DensityDiagnostics check_density(const Matrix2& rho) {
  DensityDiagnostics d;
  d.trace_error = std::abs(rho.trace() - complexd(1.0, 0.0));
  d.hermiticity_error = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
  // closed form for the Hermitian part of a 2x2
  const Matrix2 h = 0.5 * (rho + rho.adjoint());
  const double a = h(0, 0).real();
  const double d22 = h(1, 1).real();
  const double off = std::abs(h(0, 1));
  const double mid = 0.5 * (a + d22);
  const double rad = std::sqrt(0.25 * (a - d22) * (a - d22) + off * off);
  d.min_eigenvalue = mid - rad;
  return d;
}

DensityDiagnostics check_density(const Matrix4& rho) { return diagnose(rho); }

namespace {

template <typename Matrix>
double phase_invariant_distance(const Matrix& u, const Matrix& v) {
  return 1.0 - std::abs((u.adjoint() * v).trace()) / static_cast<double>(u.rows());
}

}  // namespace

double gate_distance_global_phase(const Matrix2& u, const Matrix2& v) {
  return phase_invariant_distance(u, v);
}

double gate_distance_global_phase(const Matrix4& u, const Matrix4& v) {
  return phase_invariant_distance(u, v);
}

double gate_distance_global_phase(const Eigen::MatrixXcd& u,
                                  const Eigen::MatrixXcd& v) {
  if (u.rows() != v.rows() || u.cols() != v.cols() || u.rows() != u.cols()) {
    throw Error("DimensionMismatch", "operands must be square and equal-sized");
  }
  return phase_invariant_distance(u, v);
}

}  // namespace geomgate
