#include "bergkern/transport.hpp"

#include <cmath>
#include <stdexcept>

#include "bergkern/errors.hpp"

namespace bergkern {

namespace {

constexpr cplx kI(0.0, 1.0);
constexpr double kUnitaryTol = 1e-12;

Eigen::MatrixXcd scalar_jacobian(cplx d) {
  Eigen::MatrixXcd j(1, 1);
  j(0, 0) = d;
  return j;
}

}  // namespace

ConformalMap::ConformalMap(std::string name, Domain source, std::optional<Domain> target, PointMap eval,
                           JacobianMap jacobian)
    : name_(std::move(name)), source_(source), target_(target), eval_(std::move(eval)), jacobian_(std::move(jacobian)) {}

cplx ConformalMap::jacobian_det(const ComplexPoint& z) const {
  const Eigen::MatrixXcd j = jacobian_(z);
  return j.rows() == 1 ? j(0, 0) : j.determinant();
}

ConformalMap cayley() {
  return ConformalMap(
      "cayley", Domain::halfplane(), Domain::disc(),
      [](const ComplexPoint& z) { return ComplexPoint((kI - z[0]) / (kI + z[0])); },
      [](const ComplexPoint& z) {
        const cplx d = kI + z[0];
        return scalar_jacobian(-2.0 * kI / (d * d));
      });
}

ConformalMap square() {
  return ConformalMap(
      "square", Domain::quarterplane(), Domain::halfplane(),
      [](const ComplexPoint& z) { return ComplexPoint(z[0] * z[0]); },
      [](const ComplexPoint& z) { return scalar_jacobian(2.0 * z[0]); });
}

ConformalMap inversion() {
  return ConformalMap(
      "inversion", Domain::annulus(), std::nullopt, [](const ComplexPoint& z) { return ComplexPoint(1.0 / z[0]); },
      [](const ComplexPoint& z) { return scalar_jacobian(-1.0 / (z[0] * z[0])); });
}

ConformalMap mobius(cplx a) {
  if (!(std::abs(a) < 1.0)) throw std::invalid_argument("mobius: |a| must be < 1");
  return ConformalMap(
      "mobius", Domain::disc(), Domain::disc(),
      [a](const ComplexPoint& z) { return ComplexPoint((z[0] - a) / (1.0 - std::conj(a) * z[0])); },
      [a](const ComplexPoint& z) {
        const cplx d = 1.0 - std::conj(a) * z[0];
        return scalar_jacobian((1.0 - std::norm(a)) / (d * d));
      });
}

double unitarity_defect(const Eigen::Matrix2cd& m) {
  return (m.adjoint() * m - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff();
}

ConformalMap unitary2(const Eigen::Matrix2cd& m) {
  if (unitarity_defect(m) > kUnitaryTol) throw std::invalid_argument("unitary2: matrix is not unitary");
  return ConformalMap(
      "unitary2", Domain::ball2(), Domain::ball2(),
      [m](const ComplexPoint& z) {
        return ComplexPoint(m(0, 0) * z[0] + m(0, 1) * z[1], m(1, 0) * z[0] + m(1, 1) * z[1]);
      },
      [m](const ComplexPoint&) { return Eigen::MatrixXcd(m); });
}

ConformalMap compose(const ConformalMap& outer, const ConformalMap& inner) {
  if (!inner.target() || !(*inner.target() == outer.source())) {
    throw std::invalid_argument("compose: inner target does not match outer source");
  }
  return ConformalMap(
      outer.name() + "*" + inner.name(), inner.source(), outer.target(),
      [outer, inner](const ComplexPoint& z) { return outer(inner(z)); },
      [outer, inner](const ComplexPoint& z) { return Eigen::MatrixXcd(outer.jacobian(inner(z)) * inner.jacobian(z)); });
}

namespace {

Eigen::VectorXd real_rendering(const ComplexPoint& z) {
  Eigen::VectorXd x(2 * z.dim());
  for (std::size_t j = 0; j < z.dim(); ++j) {
    x(2 * j) = z[j].real();
    x(2 * j + 1) = z[j].imag();
  }
  return x;
}

ComplexPoint from_real(const Eigen::VectorXd& x) {
  if (x.size() == 2) return ComplexPoint(cplx(x(0), x(1)));
  return ComplexPoint(cplx(x(0), x(1)), cplx(x(2), x(3)));
}

}  // namespace

JacobianPair real_jacobian_det(const ConformalMap& map, const ComplexPoint& z, double step) {
  if (!map.source().contains(z)) {
    throw DomainError("real_jacobian_det: point is outside the source " + std::string(map.source().name()));
  }
  const Eigen::VectorXd x = real_rendering(z);
  const Eigen::Index n = x.size();
  Eigen::MatrixXd jr(n, n);
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::VectorXd xp = x, xm = x;
    xp(c) += step;
    xm(c) -= step;
    jr.col(c) = (real_rendering(map(from_real(xp))) - real_rendering(map(from_real(xm)))) / (2.0 * step);
  }
  return {map.jacobian_det(z), jr.determinant()};
}

Kernel pullback_kernel(const ConformalMap& map, const Kernel& target_kernel) {
  if (target_kernel.kind() != KernelKind::Bergman) {
    throw std::invalid_argument("pullback_kernel: only Bergman kernels obey this transformation law");
  }
  if (!map.target() || !(*map.target() == target_kernel.domain())) {
    throw std::invalid_argument("pullback_kernel: kernel domain does not match the map target");
  }
  const Domain source = map.source();
  return Kernel(target_kernel.name() + " via " + map.name(), source, KernelKind::Bergman, Provenance::Transported,
                [map, target_kernel, source](const ComplexPoint& z, const ComplexPoint& w) {
                  if (!source.contains(z) || !source.contains(w)) {
                    throw DomainError("pullback kernel: argument outside the " + std::string(source.name()));
                  }
                  return map.jacobian_det(z) * target_kernel(map(z), map(w)) * std::conj(map.jacobian_det(w));
                });
}

double unitary_invariance_check(const Eigen::Matrix2cd& m, const ComplexPoint& z, const ComplexPoint& zeta) {
  if (unitarity_defect(m) > kUnitaryTol) throw std::invalid_argument("unitary_invariance_check: matrix is not unitary");
  const ConformalMap u = unitary2(m);
  const cplx det = m.determinant();
  const cplx lhs = det * eval_closed_form(KernelId::BergmanBall2, u(z), u(zeta)) * std::conj(det);
  return std::abs(lhs - eval_closed_form(KernelId::BergmanBall2, z, zeta));
}

}  // namespace bergkern
