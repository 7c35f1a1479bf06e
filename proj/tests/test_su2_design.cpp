#include <doctest.h>

#include <cmath>
#include <random>

#include "geomgate/dynamics.hpp"
#include "geomgate/paths.hpp"
#include "geomgate/su2_design.hpp"
#include "test_helpers.hpp"

using namespace geomgate;
using geomgate::testing::expect_error;

namespace {

PathPoint random_point(std::mt19937& rng) {
  std::uniform_real_distribution<double> theta(0.02, M_PI - 0.02);
  std::uniform_real_distribution<double> phi(-M_PI, M_PI);
  std::uniform_real_distribution<double> rate(-2.0, 2.0);
  PathPoint p;
  p.theta = theta(rng);
  p.phi = phi(rng);
  p.theta_dot = rate(rng);
  p.phi_dot = rate(rng);
  return p;
}

}  // namespace

TEST_CASE("rotation_matrix closed forms") {
  CHECK(rotation_matrix(0.0, 1.234).isApprox(Matrix2::Identity(), 1e-15));

  Matrix2 south;
  south << 0.0, -1.0, 1.0, 0.0;
  CHECK((rotation_matrix(M_PI, 0.0) - south).cwiseAbs().maxCoeff() < 1e-15);

  const double r = std::sqrt(0.5);
  Matrix2 quarter;
  quarter << r, complexd(0.0, r), complexd(0.0, r), r;
  CHECK((rotation_matrix(M_PI / 2.0, M_PI / 2.0) - quarter)
            .cwiseAbs()
            .maxCoeff() < 1e-15);

  // unitary with unit determinant everywhere
  std::mt19937 rng(4);
  std::uniform_real_distribution<double> theta(0.0, M_PI);
  std::uniform_real_distribution<double> phi(-4.0, 4.0);
  for (int i = 0; i < 50; ++i) {
    const Matrix2 m = rotation_matrix(theta(rng), phi(rng));
    CHECK((m * m.adjoint() - Matrix2::Identity()).cwiseAbs().maxCoeff() < 1e-14);
    CHECK(std::abs(m.determinant() - complexd(1.0, 0.0)) < 1e-14);
  }
}

TEST_CASE("frame_coefficients at the pole leave the drive unchanged") {
  PauliVector h;
  h.cx = 0.3;
  h.cy = -0.8;
  h.cz = 1.2;
  PathPoint p;
  p.theta = 0.0;
  p.phi = 0.77;
  p.theta_dot = 1.5;
  p.phi_dot = -0.4;
  const FrameCoefficients f = frame_coefficients(h, p);
  CHECK(f.fx == doctest::Approx(h.cx));
  CHECK(f.fy == doctest::Approx(h.cy));
  CHECK(f.fz == doctest::Approx(h.cz));
  CHECK(f.gx == doctest::Approx(0.5 * p.theta_dot * std::sin(p.phi)));
  CHECK(f.gy == doctest::Approx(-0.5 * p.theta_dot * std::cos(p.phi)));
  CHECK(f.gz == doctest::Approx(0.0));
}

TEST_CASE("frame_coefficients on the equator") {
  // drive-free point moving along the equator
  PathPoint p;
  p.theta = M_PI / 2.0;
  p.phi = 0.0;
  p.theta_dot = 0.0;
  p.phi_dot = 0.9;
  FrameCoefficients f = frame_coefficients(PauliVector{}, p);
  CHECK(f.fx == doctest::Approx(0.0));
  CHECK(f.fy == doctest::Approx(0.0));
  CHECK(f.fz == doctest::Approx(0.0));
  CHECK(f.gx == doctest::Approx(0.45));
  CHECK(f.gy == doctest::Approx(0.0));
  CHECK(f.gz == doctest::Approx(0.45));

  // static z drive on the equator maps to -x
  PauliVector h;
  h.cz = 1.0;
  p.phi_dot = 0.0;
  f = frame_coefficients(h, p);
  CHECK(f.fx == doctest::Approx(-1.0));
  CHECK(f.fy == doctest::Approx(0.0));
  CHECK(f.fz == doctest::Approx(0.0));
  CHECK(f.gx == doctest::Approx(0.0));
  CHECK(f.gy == doctest::Approx(0.0));
  CHECK(f.gz == doctest::Approx(0.0));
}

TEST_CASE("synthesize_controls on a meridian") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> theta(0.05, M_PI - 0.05);
  std::uniform_real_distribution<double> eta_dist(-0.9, 2.0);
  for (int i = 0; i < 50; ++i) {
    PathPoint p;
    p.theta = theta(rng);
    p.phi = 0.4;
    p.theta_dot = 1.0;  // Omega_0
    p.phi_dot = 0.0;
    const ControlPoint c = synthesize_controls(p, eta_dist(rng));
    CHECK(c.omega_r == doctest::Approx(1.0));
    CHECK(c.delta == doctest::Approx(0.0));
    // phase is phi0 +- pi/2 modulo pi
    const double m = std::remainder(c.phi_pulse - (p.phi + M_PI / 2.0), M_PI);
    CHECK(std::abs(m) < 1e-12);
    CHECK(c.signed_direction == 1);
  }
}

TEST_CASE("synthesize_controls on the equator with eta = 1") {
  PathPoint p;
  p.theta = M_PI / 2.0;
  p.phi = 0.9;
  p.theta_dot = 0.0;
  p.phi_dot = 0.7;
  const ControlPoint c = synthesize_controls(p, 1.0);
  CHECK(c.omega_r == doctest::Approx(0.7));
  CHECK(c.delta == doctest::Approx(0.7));
  CHECK(c.phi_pulse == doctest::Approx(0.9));
  CHECK(c.signed_direction == 1);
}

TEST_CASE("synthesize_controls on the 2pi/3 arc with eta = 0") {
  PathPoint p;
  p.theta = 2.0 * M_PI / 3.0;
  p.phi = -0.3;
  p.theta_dot = 0.0;
  p.phi_dot = 1.1;
  const ControlPoint c = synthesize_controls(p, 0.0);
  CHECK(c.omega_r == doctest::Approx(std::sqrt(3.0) / 4.0 * 1.1));
  CHECK(c.delta == doctest::Approx(0.75 * 1.1));
}

TEST_CASE("synthesize_controls at a static point") {
  PathPoint p;
  p.theta = 1.0;
  p.phi = 2.0;
  const ControlPoint c = synthesize_controls(p, 0.5);
  CHECK(c.omega_r == 0.0);
  CHECK(c.delta == 0.0);
  CHECK(c.signed_direction == 1);
}

TEST_CASE("synthesized drive reassembles to the control field") {
  std::mt19937 rng(21);
  std::uniform_real_distribution<double> eta_dist(-0.9, 2.0);
  for (int i = 0; i < 500; ++i) {
    const PathPoint p = random_point(rng);
    const double eta = eta_dist(rng);
    const ControlPoint c = synthesize_controls(p, eta);
    const Matrix2 from_controls = hamiltonian_at(c);
    const Matrix2 from_field = pauli_assemble(control_field(p, eta));
    CHECK((from_controls - from_field).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("canonical sign identity") {
  std::mt19937 rng(22);
  std::uniform_real_distribution<double> eta_dist(-0.9, 2.0);
  for (int i = 0; i < 100; ++i) {
    const PathPoint p = random_point(rng);
    ControlPoint c = synthesize_controls(p, eta_dist(rng));
    ControlPoint flipped = c;
    flipped.phi_pulse = std::remainder(c.phi_pulse + M_PI, 2.0 * M_PI);
    flipped.signed_direction = -c.signed_direction;

    const Matrix2 a = hamiltonian_at(c);
    const Matrix2 b = hamiltonian_at(flipped);
    CHECK(std::abs(a(0, 0) - b(0, 0)) < 1e-14);
    CHECK(std::abs(a(0, 1) + b(0, 1)) < 1e-13);
  }
}

TEST_CASE("parallel transport residuals vanish for synthesized drive") {
  std::mt19937 rng(31);
  std::uniform_real_distribution<double> eta_dist(-0.9, 2.0);
  for (int i = 0; i < 1000; ++i) {
    const TransportResiduals r =
        verify_parallel_transport(random_point(rng), eta_dist(rng));
    CHECK(r.offdiag <= 1e-12);
    CHECK(r.proportionality <= 1e-12);
  }
}

TEST_CASE("parallel transport flags a hand-built drive") {
  // static x drive on the equator: f = (0, 0, 1), g = 0
  PauliVector h;
  h.cx = 1.0;
  PathPoint p;
  p.theta = M_PI / 2.0;
  const FrameCoefficients f = frame_coefficients(h, p);
  const double offdiag = std::max(std::abs(f.fx + f.gx), std::abs(f.fy + f.gy));
  const double prop = std::abs(f.fz - 0.0 * f.gz);
  CHECK(offdiag == doctest::Approx(0.0));
  CHECK(prop == doctest::Approx(1.0));
}

TEST_CASE("parallel transport residuals at a static point") {
  PathPoint p;
  p.theta = 0.7;
  p.phi = 0.2;
  const TransportResiduals r = verify_parallel_transport(p, 0.3);
  CHECK(r.offdiag == 0.0);
  CHECK(r.proportionality == 0.0);
}

TEST_CASE("frame identity against finite differences") {
  // H_R = R^dag H0 R + i (d_t R^dag) R must be (1 + eta) g_z sigma_z for the
  // synthesized drive; d_t R approximated by a central difference.
  std::mt19937 rng(41);
  std::uniform_real_distribution<double> eta_dist(-0.9, 2.0);
  const double eps = 1e-7;
  for (int i = 0; i < 1000; ++i) {
    const PathPoint p = random_point(rng);
    const double eta = eta_dist(rng);

    const Matrix2 h0 = pauli_assemble(control_field(p, eta));
    const Matrix2 r = rotation_matrix(p.theta, p.phi);
    const Matrix2 r_plus = rotation_matrix(p.theta + eps * p.theta_dot,
                                           p.phi + eps * p.phi_dot);
    const Matrix2 r_minus = rotation_matrix(p.theta - eps * p.theta_dot,
                                            p.phi - eps * p.phi_dot);
    const Matrix2 dt_r_dag = (r_plus.adjoint() - r_minus.adjoint()) / (2.0 * eps);
    const Matrix2 h_r = r.adjoint() * h0 * r + complexd(0.0, 1.0) * dt_r_dag * r;

    const double gz = 0.5 * p.phi_dot * (1.0 - std::cos(p.theta));
    const double diag_target = (1.0 + eta) * gz;
    CHECK(std::abs(h_r(0, 1)) < 1e-5);
    CHECK(std::abs(h_r(1, 0)) < 1e-5);
    CHECK(std::abs(h_r(0, 0).real() - diag_target) < 1e-5);
    CHECK(std::abs(h_r(1, 1).real() + diag_target) < 1e-5);
    CHECK(std::abs(h_r(0, 0).imag()) < 1e-5);
  }
}

TEST_CASE("geometric phase of the named loops") {
  CHECK(geometric_phase(orange_slice_path(0.0)) ==
        doctest::Approx(M_PI / 2.0).epsilon(1e-12));
  // independent of the starting azimuth
  CHECK(geometric_phase(orange_slice_path(1.3)) ==
        doctest::Approx(M_PI / 2.0).epsilon(1e-12));
  CHECK(geometric_phase(conventional_triangle_path(0.0)) ==
        doctest::Approx(M_PI / 2.0).epsilon(1e-12));
  CHECK(geometric_phase(unconventional_triangle_path(0.0)) ==
        doctest::Approx(M_PI / 4.0).epsilon(1e-12));
}

TEST_CASE("geometric phase vanishes without azimuthal motion") {
  ClosedPath p;
  p.segments.push_back(meridian_segment(0.0, M_PI, 0.4));
  p.segments.push_back(meridian_segment(M_PI, 0.0, 0.4));
  CHECK(geometric_phase(p) == doctest::Approx(0.0));
}

TEST_CASE("geometric phase rejects open paths") {
  ClosedPath open;
  open.segments.push_back(meridian_segment(0.0, M_PI / 2.0, 0.0));
  expect_error([&] { geometric_phase(open); }, "PathNotClosed");
}

TEST_CASE("solid angle law for pole-capped loops") {
  std::mt19937 rng(51);
  std::uniform_real_distribution<double> theta(0.1, M_PI - 0.1);
  std::uniform_real_distribution<double> span(0.1, 2.0 * M_PI);
  for (int i = 0; i < 100; ++i) {
    const double theta_c = theta(rng);
    const double dphi = span(rng);
    ClosedPath p;
    p.segments.push_back(meridian_segment(0.0, theta_c, 0.0));
    p.segments.push_back(arc_segment(theta_c, 0.0, dphi));
    p.segments.push_back(meridian_segment(theta_c, 0.0, dphi));
    const double expected = 0.5 * (1.0 - std::cos(theta_c)) * dphi;
    CHECK(std::abs(geometric_phase(p) - expected) < 1e-10);
  }
}

TEST_CASE("geometric phase is reparametrization invariant") {
  std::mt19937 rng(61);
  std::uniform_real_distribution<double> scale(0.1, 10.0);
  for (int i = 0; i < 50; ++i) {
    ClosedPath a = unconventional_triangle_path(0.6);
    ClosedPath b = a;
    for (auto& seg : b.segments) seg.duration *= scale(rng);
    CHECK(std::abs(geometric_phase(a) - geometric_phase(b)) < 1e-10);
  }
}

TEST_CASE("total phase scaling and the trivial eta") {
  CHECK(total_phase(M_PI / 2.0, 0.0) == doctest::Approx(M_PI / 2.0));
  CHECK(total_phase(M_PI / 4.0, 1.0) == doctest::Approx(M_PI / 2.0));
  expect_error([&] { total_phase(0.3, -1.0); }, "TrivialEta");
}

TEST_CASE("target_unitary closed forms") {
  const Matrix2 uz = target_unitary(0.0, 2.2, M_PI / 2.0);
  CHECK(std::abs(uz(0, 0) - complexd(0.0, -1.0)) < 1e-14);
  CHECK(std::abs(uz(1, 1) - complexd(0.0, 1.0)) < 1e-14);

  CHECK(target_unitary(1.1, -0.4, 0.0).isApprox(Matrix2::Identity(), 1e-15));

  const Matrix2 ux = target_unitary(M_PI / 2.0, 0.0, M_PI / 2.0);
  const Matrix2 expected = complexd(0.0, -1.0) * pauli_x();
  CHECK((ux - expected).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("gate spec couples the two phases") {
  const GateSpec g = make_gate_spec(1.0, 0.0, 0.0, M_PI / 4.0);
  CHECK(g.gamma_total == doctest::Approx((1.0 + g.eta) * g.gamma_g).epsilon(1e-12));
}
