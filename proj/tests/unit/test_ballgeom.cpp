#include <doctest.h>

#include <cmath>

#include "bergkern/ballgeom.hpp"
#include "bergkern/errors.hpp"
#include "gen.hpp"

using namespace bergkern;

namespace {

ComplexPoint c2(cplx a, cplx b) { return ComplexPoint(a, b); }

std::vector<ComplexPoint> radial_grid() {
  std::vector<ComplexPoint> pts;
  for (double r : {0.0, 0.2, 0.4, 0.6, 0.8}) {
    for (int k = 0; k < 8; ++k) {
      const double a = kPi * k / 8;
      pts.push_back(c2(std::polar(r * std::cos(a), 0.3 * k), std::polar(r * std::sin(a), -0.5 * k)));
    }
  }
  return pts;
}

}  // namespace

TEST_CASE("metric examples") {
  const HermitianMetric2 g0 = bergman_metric(c2(0.0, 0.0));
  CHECK((g0.g - 3.0 * Eigen::Matrix2cd::Identity()).norm() == 0.0);
  const HermitianMetric2 g = bergman_metric(c2(0.5, 0.0));
  CHECK(std::abs(g.g(0, 0) - 3.0 / 0.5625) <= 1e-14);
  CHECK(g.g(0, 0).real() == doctest::Approx(5.3333).epsilon(1e-4));
  CHECK(std::abs(g.g(1, 1) - 4.0) <= 1e-14);
  CHECK(std::abs(g.g(0, 1)) == 0.0);
  CHECK(std::abs(g.g(1, 0)) == 0.0);
  CHECK(metric_fd_deviation(c2(cplx(0.3, 0.1), 0.2)) <= 1e-5);
  CHECK_THROWS_AS(bergman_metric(c2(0.8, 0.6)), DomainError);
  CHECK_THROWS_AS(bergman_metric_fd(c2(0.999, 0.0)), DomainError);
}

TEST_CASE("property: metric is hermitian, positive and matches finite differences") {
  for (const ComplexPoint& z : radial_grid()) {
    const HermitianMetric2 m = bergman_metric(z);
    CHECK(m.g(0, 1) == std::conj(m.g(1, 0)));
    CHECK(m.g(0, 0).imag() == 0.0);
    CHECK(m.min_eigenvalue() > 0.0);
    CHECK(metric_fd_deviation(z) <= 1e-5);
  }
}

TEST_CASE("inverse metric") {
  const InverseMetric i0 = inverse_metric(c2(0.0, 0.0));
  CHECK((i0.inverse.g - Eigen::Matrix2cd::Identity() / 3.0).norm() <= 1e-16);
  CHECK(i0.det == doctest::Approx(9.0).epsilon(1e-15));
  const InverseMetric i6 = inverse_metric(c2(0.6, 0.0));
  CHECK(i6.det == doctest::Approx(9.0 / std::pow(0.64, 3)).epsilon(1e-14));
  CHECK(i6.det == doctest::Approx(34.33).epsilon(1e-4));
  testgen::Gen g(61);
  for (int n = 0; n < 200; ++n) {
    const ComplexPoint z = g.in_ball(0.8);
    const Eigen::Matrix2cd m = bergman_metric(z).g;
    const InverseMetric inv = inverse_metric(z);
    CHECK((m * inv.inverse.g - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff() <= 1e-12);
    CHECK(std::abs(m.determinant().real() - inv.det) <= 1e-12 * inv.det);
  }
  CHECK_THROWS_AS(inverse_metric(c2(1.0, 0.0)), DomainError);
}

TEST_CASE("divergence identities") {
  CHECK(divergence_residual(c2(0.0, 0.0)) <= 1e-10);
  CHECK(divergence_residual(c2(0.4, cplx(0.0, 0.3))) <= 1e-6);
  CHECK(divergence_residual(c2(0.7, 0.0)) <= 1e-5);
  CHECK_THROWS_AS(divergence_residual(c2(0.9995, 0.0)), DomainError);
}

TEST_CASE("invariant laplacian examples") {
  const ComplexPoint z(cplx(0.2, -0.1), cplx(0.3, 0.25));
  CHECK(invariant_laplacian([](const ComplexPoint&) { return cplx(1.0); }, z) == cplx(0.0));
  CHECK(std::abs(invariant_laplacian([](const ComplexPoint& w) { return cplx(w[0].real()); }, z)) <= 1e-9);
  CHECK(std::abs(invariant_laplacian([](const ComplexPoint& w) { return cplx(w.norm2()); }, c2(0.0, 0.0)) -
                 8.0 / 3.0) <= 1e-6);
  // L|z|^2 = 4 tr(g^-1) = (8/3)(1 - |z|^2) - (4/3)(1 - |z|^2)|z|^2
  const double s = z.norm2();
  CHECK(std::abs(invariant_laplacian([](const ComplexPoint& w) { return cplx(w.norm2()); }, z) -
                 (4.0 / 3.0) * (1 - s) * (2 - s)) <= 1e-6);
  const BallFunction one = [](const ComplexPoint&) { return cplx(1.0); };
  CHECK_THROWS_AS(invariant_laplacian(one, c2(0.999, 0.0)), DomainError);
  CHECK_THROWS_AS(invariant_laplacian(one, z, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(invariant_laplacian(one, z, 1e-6), std::invalid_argument);
}

TEST_CASE("property: pluriharmonic monomials are annihilated") {
  testgen::Gen g(62);
  for (int a = 0; a <= 3; ++a) {
    for (int b = 0; a + b <= 3; ++b) {
      const BallFunction u = [a, b](const ComplexPoint& w) {
        return cplx((std::pow(w[0], a) * std::pow(w[1], b)).real());
      };
      for (int n = 0; n < 10; ++n) {
        const ComplexPoint z = g.in_ball(0.7);
        const double scale = std::max(1.0, std::abs(u(z)));
        CHECK(std::abs(invariant_laplacian(u, z)) <= 1e-5 * scale);
      }
    }
  }
}

TEST_CASE("poisson-szego annihilation examples") {
  const ComplexPoint z(cplx(0.3, 0.1), cplx(-0.2, 0.2));
  const ComplexPoint zeta(std::polar(std::cos(0.5), 0.7), std::polar(std::sin(0.5), 1.3));
  CHECK(annihilation_check(zeta, z, 1e-3) <= 1e-3);
  testgen::Gen g(63);
  for (int n = 0; n < 5; ++n) CHECK(annihilation_check(g.on_sphere(), c2(0.0, 0.0), 1e-4) <= 1e-6);
  CHECK(annihilation_check(c2(1.0, 0.0), c2(0.5, 0.0), 1e-3) <= 1e-3);
  CHECK_THROWS_AS(annihilation_check(c2(0.9, 0.0), z, 1e-3), DomainError);
}

TEST_CASE("property: annihilation residual is small and second order in h") {
  testgen::Gen g(64);
  for (int n = 0; n < 50; ++n) {
    const ComplexPoint z = g.in_ball(0.6), zeta = g.on_sphere();
    const double r1 = annihilation_check(zeta, z, 1e-3), r2 = annihilation_check(zeta, z, 5e-4);
    CHECK(r1 <= 1e-3);
    CHECK(r1 / r2 >= 3.5);
    CHECK(r1 / r2 <= 4.5);
  }
}

TEST_CASE("levi form") {
  const DefiningFunction rho = ball2_defining_function();
  CHECK(rho.value(c2(1.0, 0.0)) == 0.0);
  CHECK(levi_form(rho, c2(1.0, 0.0), c2(0.0, 1.0)) == doctest::Approx(1.0));
  CHECK(levi_form(rho, c2(1.0, 0.0), c2(0.0, cplx(0.0, 2.0))) == doctest::Approx(4.0));
  const double s = 1.0 / std::sqrt(2.0);
  CHECK(levi_form(rho, c2(s, s), c2(s, -s)) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK_THROWS_AS(levi_form(rho, c2(0.5, 0.0), c2(0.0, 1.0)), DomainError);
  try {
    levi_form(rho, c2(1.0, 0.0), c2(1.0, 1.0));
    FAIL("expected an invariant error");
  } catch (const InvariantError& e) {
    CHECK(std::string(e.what()).find("residual") != std::string::npos);
  }
}

TEST_CASE("property: levi form of the ball is nonnegative on tangent vectors") {
  const DefiningFunction rho = ball2_defining_function();
  testgen::Gen g(65);
  for (int n = 0; n < 500; ++n) {
    const ComplexPoint p = g.on_sphere();
    // (-conj(p2), conj(p1)) is orthogonal to p in the hermitian sense
    const cplx t = g.normal_complex();
    const ComplexPoint w(-std::conj(p[1]) * t, std::conj(p[0]) * t);
    const double l = levi_form(rho, p, w);
    CHECK(l >= 0.0);
    CHECK(l == doctest::Approx(std::norm(t)).epsilon(1e-12));
  }
}
