#include <doctest.h>

#include <cmath>
#include <random>

#include "geomgate/algebra.hpp"
#include "test_helpers.hpp"

using namespace geomgate;
using geomgate::testing::expect_error;

namespace {

PauliVector random_axis(std::mt19937& rng, double scale = 3.0) {
  std::uniform_real_distribution<double> dist(-scale, scale);
  PauliVector a;
  a.cx = dist(rng);
  a.cy = dist(rng);
  a.cz = dist(rng);
  return a;
}

}  // namespace

TEST_CASE("pauli_decompose on basis matrices") {
  const PauliVector id = pauli_decompose(Matrix2::Identity());
  CHECK(id.c0 == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(std::abs(id.cx) < 1e-14);
  CHECK(std::abs(id.cy) < 1e-14);
  CHECK(std::abs(id.cz) < 1e-14);

  const PauliVector z = pauli_decompose(pauli_z());
  CHECK(z.c0 == doctest::Approx(0.0));
  CHECK(z.cz == doctest::Approx(1.0));
  CHECK(std::abs(z.cx) < 1e-14);
  CHECK(std::abs(z.cy) < 1e-14);
}

TEST_CASE("pauli_decompose of the two-level drive matrix") {
  // 0.5*[[Delta, Omega e^{-i phi}], [Omega e^{i phi}, -Delta]] with
  // Delta = 2, Omega = 2, phi = 0
  Matrix2 h;
  h << 1.0, 1.0, 1.0, -1.0;
  const PauliVector c = pauli_decompose(h);
  CHECK(c.c0 == doctest::Approx(0.0));
  CHECK(c.cx == doctest::Approx(1.0));
  CHECK(c.cy == doctest::Approx(0.0));
  CHECK(c.cz == doctest::Approx(1.0));
}

TEST_CASE("pauli_decompose rejects non-Hermitian input") {
  Matrix2 m;
  m << 0.0, complexd(0.0, 1e-6), complexd(0.0, 1e-6), 0.0;
  expect_error([&] { pauli_decompose(m); }, "NotHermitian");
}

TEST_CASE("expm_su2 closed forms") {
  PauliVector z;
  z.cz = M_PI / 2.0;
  const Matrix2 uz = expm_su2(z);
  CHECK(std::abs(uz(0, 0) - complexd(0.0, -1.0)) < 1e-14);
  CHECK(std::abs(uz(1, 1) - complexd(0.0, 1.0)) < 1e-14);
  CHECK(std::abs(uz(0, 1)) < 1e-14);

  CHECK(expm_su2(PauliVector{}).isApprox(Matrix2::Identity(), 1e-15));

  PauliVector x;
  x.cx = M_PI / 2.0;
  const Matrix2 ux = expm_su2(x);
  const Matrix2 expected = complexd(0.0, -1.0) * pauli_x();
  CHECK((ux - expected).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("expm_su2 properties over random axes") {
  std::mt19937 rng(12345);
  for (int i = 0; i < 200; ++i) {
    const PauliVector a = random_axis(rng);
    PauliVector minus = a;
    minus.cx = -a.cx;
    minus.cy = -a.cy;
    minus.cz = -a.cz;

    const Matrix2 u = expm_su2(a);
    const Matrix2 v = expm_su2(minus);
    CHECK(((u * v) - Matrix2::Identity()).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(std::abs(u.determinant() - complexd(1.0, 0.0)) < 1e-12);
  }
}

TEST_CASE("decompose is the inverse of assemble") {
  std::mt19937 rng(999);
  std::uniform_real_distribution<double> dist(-5.0, 5.0);
  for (int i = 0; i < 200; ++i) {
    PauliVector c;
    c.c0 = dist(rng);
    c.cx = dist(rng);
    c.cy = dist(rng);
    c.cz = dist(rng);
    const PauliVector back = pauli_decompose(pauli_assemble(c));
    CHECK(std::abs(back.c0 - c.c0) < 1e-12);
    CHECK(std::abs(back.cx - c.cx) < 1e-12);
    CHECK(std::abs(back.cy - c.cy) < 1e-12);
    CHECK(std::abs(back.cz - c.cz) < 1e-12);
  }
}

TEST_CASE("check_density diagnostics dim 2") {
  Matrix2 pure = Matrix2::Zero();
  pure(0, 0) = 1.0;
  auto d = check_density(pure);
  CHECK(d.trace_error < 1e-15);
  CHECK(d.hermiticity_error < 1e-15);
  CHECK(std::abs(d.min_eigenvalue) < 1e-15);

  d = check_density(Matrix2(0.5 * Matrix2::Identity()));
  CHECK(d.trace_error < 1e-15);
  CHECK(d.min_eigenvalue == doctest::Approx(0.5));

  Matrix2 bad = Matrix2::Zero();
  bad(0, 0) = 1.1;
  bad(1, 1) = -0.1;
  d = check_density(bad);
  CHECK(d.trace_error < 1e-15);
  CHECK(d.min_eigenvalue == doctest::Approx(-0.1));
}

TEST_CASE("check_density dim 4 against a constructed spectrum") {
  // rho = U diag(l) U^dag with U a product of SU(2) blocks
  PauliVector a;
  a.cx = 0.3;
  a.cy = -1.1;
  a.cz = 0.7;
  const Matrix2 u2 = expm_su2(a);
  Matrix4 u = Matrix4::Zero();
  u.topLeftCorner<2, 2>() = u2;
  u.bottomRightCorner<2, 2>() = u2.adjoint();

  Eigen::Vector4d evals(0.55, 0.35, 0.13, -0.03);
  const Matrix4 rho = u * evals.asDiagonal() * u.adjoint();
  const auto d = check_density(rho);
  CHECK(d.trace_error == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(d.hermiticity_error < 1e-14);
  CHECK(d.min_eigenvalue == doctest::Approx(-0.03).epsilon(1e-10));
}

TEST_CASE("gate distance is phase invariant") {
  std::mt19937 rng(77);
  const Matrix2 u = expm_su2(random_axis(rng));
  CHECK(gate_distance_global_phase(u, u) < 1e-15);
  const Matrix2 v = std::exp(complexd(0.0, 0.8373)) * u;
  CHECK(gate_distance_global_phase(u, v) < 1e-12);
  CHECK(gate_distance_global_phase(Matrix2::Identity(), pauli_x()) ==
        doctest::Approx(1.0));
  // symmetric
  const Matrix2 w = expm_su2(random_axis(rng));
  CHECK(gate_distance_global_phase(u, w) ==
        doctest::Approx(gate_distance_global_phase(w, u)));
}

TEST_CASE("gate distance rejects mismatched dynamic shapes") {
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Identity(2, 2);
  Eigen::MatrixXcd b = Eigen::MatrixXcd::Identity(4, 4);
  expect_error([&] { gate_distance_global_phase(a, b); }, "DimensionMismatch");
}
