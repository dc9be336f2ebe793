#include <doctest.h>

#include <cmath>

#include "bergkern/errors.hpp"
#include "bergkern/transport.hpp"
#include "gen.hpp"

using namespace bergkern;

namespace {

Eigen::Matrix2cd random_unitary(testgen::Gen& g) {
  const ComplexPoint ab = g.on_sphere();
  const cplx a = ab[0], b = ab[1];
  const cplx e = std::polar(1.0, g.uniform(0.0, 2 * kPi));
  Eigen::Matrix2cd m;
  m << a, -std::conj(b) * e, b, std::conj(a) * e;
  return m;
}

Eigen::Matrix2cd rotation(double angle) {
  Eigen::Matrix2cd m;
  m << std::cos(angle), -std::sin(angle), std::sin(angle), std::cos(angle);
  return m;
}

}  // namespace

TEST_CASE("map examples") {
  CHECK(std::abs(cayley()(ComplexPoint(0.0, 1.0))[0]) <= 1e-16);
  CHECK(std::abs(square()(ComplexPoint(1.0, 1.0))[0] - cplx(0.0, 2.0)) <= 1e-15);
  CHECK(std::abs(inversion()(ComplexPoint(1.5, 0.0))[0] - 1.0 / 1.5) <= 1e-16);
  CHECK(std::abs(mobius(cplx(0.5))(ComplexPoint(0.5, 0.0))[0]) <= 1e-16);
  CHECK_FALSE(inversion().target().has_value());
  CHECK(cayley().target() == Domain::disc());
  CHECK(square().source() == Domain::quarterplane());
  CHECK(unitary2(rotation(0.3)).dim() == 2u);
}

TEST_CASE("jacobian examples") {
  const ComplexPoint q(1.0, 1.0);
  const JacobianPair sq = real_jacobian_det(square(), q);
  CHECK(std::abs(sq.complex_det - cplx(2.0, 2.0)) <= 1e-15);
  CHECK(sq.real_det == doctest::Approx(8.0).epsilon(1e-8));
  // f'(i/2) = -2i/(3i/2)^2 = 8i/9
  const ComplexPoint h(0.0, 0.5);
  const cplx expected = -2.0 * cplx(0.0, 1.0) / std::pow(cplx(0.0, 1.5), 2);
  CHECK(std::abs(cayley().jacobian_det(h) - expected) <= 1e-15);
  CHECK(real_jacobian_det(cayley(), h).real_det == doctest::Approx(std::norm(expected)).epsilon(1e-8));
  const ComplexPoint b(cplx(0.3, 0.1), cplx(-0.2, 0.4));
  const JacobianPair u = real_jacobian_det(unitary2(rotation(0.7)), b);
  CHECK(std::abs(u.complex_det - 1.0) <= 1e-15);
  CHECK(u.real_det == doctest::Approx(1.0).epsilon(1e-8));
  CHECK_THROWS_AS(real_jacobian_det(square(), ComplexPoint(-1.0, 1.0)), DomainError);
}

TEST_CASE("property: analytic derivative matches finite differences") {
  testgen::Gen g(41);
  const std::vector<std::pair<ConformalMap, std::function<ComplexPoint()>>> maps{
      {cayley(), [&] { return ComplexPoint(cplx(g.uniform(-2, 2), g.uniform(0.2, 2))); }},
      {square(), [&] { return ComplexPoint(cplx(g.uniform(0.1, 2), g.uniform(0.1, 2))); }},
      {inversion(), [&] { return ComplexPoint(g.in_annulus(1.05, 1.95)); }},
      {mobius(cplx(0.3, -0.4)), [&] { return ComplexPoint(g.in_disc(0.9)); }},
  };
  const double h = 1e-6;
  for (const auto& [f, sample] : maps) {
    for (int n = 0; n < 200; ++n) {
      const ComplexPoint z = sample();
      const cplx fd = (f(ComplexPoint(z[0] + h))[0] - f(ComplexPoint(z[0] - h))[0]) / (2 * h);
      const cplx d = f.jacobian_det(z);
      CHECK(std::abs(fd - d) <= 1e-6 * std::max(1.0, std::abs(d)));
    }
  }
  for (int n = 0; n < 200; ++n) {
    const Eigen::Matrix2cd m = random_unitary(g);
    const ConformalMap u = unitary2(m);
    const ComplexPoint z = g.in_ball(0.9);
    CHECK((u.jacobian(z) - m).norm() <= 1e-15);
  }
}

TEST_CASE("property: maps land in their targets") {
  testgen::Gen g(42);
  for (int n = 0; n < 500; ++n) {
    CHECK(Domain::disc().contains(cayley()(ComplexPoint(g.in_halfplane()))));
    CHECK(Domain::halfplane().contains(square()(ComplexPoint(g.in_quarterplane()))));
    CHECK(Domain::disc().contains(mobius(g.in_disc(0.9))(ComplexPoint(g.in_disc(0.99)))));
    const cplx w = inversion()(ComplexPoint(g.in_annulus(1.0, 2.0)))[0];
    CHECK(std::abs(w) > 0.5);
    CHECK(std::abs(w) < 1.0);
    CHECK(Domain::ball2().contains(unitary2(random_unitary(g))(g.in_ball(0.99))));
  }
}

TEST_CASE("pullback examples") {
  const Kernel kd = closed_form_kernel(KernelId::BergmanDisc);
  const Kernel ku = closed_form_kernel(KernelId::BergmanHalfPlane);
  const Kernel kq = closed_form_kernel(KernelId::BergmanQuarterPlane);

  const Kernel viac = pullback_kernel(cayley(), kd);
  CHECK(viac.provenance() == Provenance::Transported);
  CHECK(viac.domain() == Domain::halfplane());
  CHECK(viac.name() == "bergman-disc via cayley");
  const ComplexPoint h(0.0, 0.5);
  CHECK(std::abs(viac(h, h) - ku(h, h)) <= 1e-14 * std::abs(ku(h, h)));

  const Kernel vias = pullback_kernel(square(), ku);
  const ComplexPoint q(1.0, 1.0), r(0.4, 2.0);
  CHECK(std::abs(vias(q, r) - kq(q, r)) <= 1e-14 * std::abs(kq(q, r)));

  testgen::Gen g(43);
  const ConformalMap m = mobius(cplx(0.2, 0.5));
  const Kernel viam = pullback_kernel(m, kd);
  for (int n = 0; n < 100; ++n) {
    const ComplexPoint z(g.in_disc(0.9)), w(g.in_disc(0.9));
    CHECK(std::abs(viam(z, w) - kd(z, w)) <= 1e-12 * std::abs(kd(z, w)));
  }
}

TEST_CASE("property: transitivity of the transport law") {
  const Kernel kd = closed_form_kernel(KernelId::BergmanDisc);
  const ConformalMap both = compose(cayley(), square());
  CHECK(both.source() == Domain::quarterplane());
  CHECK(both.target() == Domain::disc());
  const Kernel direct = pullback_kernel(both, kd);
  const Kernel stepwise = pullback_kernel(square(), pullback_kernel(cayley(), kd));
  const Kernel kq = closed_form_kernel(KernelId::BergmanQuarterPlane);
  testgen::Gen g(44);
  for (int n = 0; n < 300; ++n) {
    const ComplexPoint z(g.in_quarterplane()), w(g.in_quarterplane());
    const double scale = std::abs(kq(z, w));
    CHECK(std::abs(direct(z, w) - stepwise(z, w)) <= 1e-12 * scale);
    CHECK(std::abs(direct(z, w) - kq(z, w)) <= 1e-12 * scale);
  }
  const double h = 1e-6;
  const ComplexPoint z(0.7, 1.3);
  const cplx fd = (both(ComplexPoint(z[0] + h))[0] - both(ComplexPoint(z[0] - h))[0]) / (2 * h);
  CHECK(std::abs(fd - both.jacobian_det(z)) <= 1e-6);
}

TEST_CASE("property: transported kernels are hermitian and positive") {
  const Kernel k = pullback_kernel(compose(cayley(), square()), closed_form_kernel(KernelId::BergmanDisc));
  const Kernel kb = pullback_kernel(unitary2(rotation(0.4)), closed_form_kernel(KernelId::BergmanBall2));
  testgen::Gen g(45);
  for (int n = 0; n < 300; ++n) {
    const ComplexPoint z(g.in_quarterplane()), w(g.in_quarterplane());
    CHECK(std::abs(k(z, w) - std::conj(k(w, z))) <= 1e-13 * std::abs(k(z, w)));
    CHECK(k(z, z).real() > 0.0);
    const ComplexPoint a = g.in_ball(0.9), b = g.in_ball(0.9);
    CHECK(std::abs(kb(a, b) - std::conj(kb(b, a))) <= 1e-13 * std::abs(kb(a, b)));
    CHECK(kb(a, a).real() > 0.0);
  }
}

TEST_CASE("unitary invariance") {
  testgen::Gen g(46);
  const ComplexPoint z(cplx(0.3, 0.1), cplx(0.2, -0.3)), w(cplx(-0.4), cplx(0.1, 0.5));
  CHECK(unitary_invariance_check(rotation(0.9), z, w) <= 1e-14);
  for (int n = 0; n < 200; ++n) {
    const Eigen::Matrix2cd m = random_unitary(g);
    CHECK(unitarity_defect(m) <= 1e-14);
    CHECK(unitary_invariance_check(m, g.in_ball(0.95), g.in_ball(0.95)) <= 1e-13);
  }
  Eigen::Matrix2cd bad = rotation(0.2);
  bad(0, 0) *= 1.01;
  CHECK(unitarity_defect(bad) > 1e-3);
  CHECK_THROWS_AS(unitary2(bad), std::invalid_argument);
  CHECK_THROWS_AS(unitary_invariance_check(bad, z, w), std::invalid_argument);
}

TEST_CASE("transport errors") {
  CHECK_THROWS_AS(mobius(cplx(1.0)), std::invalid_argument);
  CHECK_THROWS_AS(compose(square(), cayley()), std::invalid_argument);
  CHECK_THROWS_AS(pullback_kernel(cayley(), closed_form_kernel(KernelId::SzegoDisc)), std::invalid_argument);
  CHECK_THROWS_AS(pullback_kernel(cayley(), closed_form_kernel(KernelId::BergmanHalfPlane)), std::invalid_argument);
  CHECK_THROWS_AS(pullback_kernel(inversion(), closed_form_kernel(KernelId::BergmanDisc)), std::invalid_argument);
  const Kernel k = pullback_kernel(cayley(), closed_form_kernel(KernelId::BergmanDisc));
  CHECK_THROWS_AS(k(ComplexPoint(0.0, -1.0), ComplexPoint(0.0, 1.0)), DomainError);
}
