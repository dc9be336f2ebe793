#pragma once

#include <Eigen/Dense>
#include <functional>
#include <optional>
#include <string>

#include "bergkern/catalog.hpp"
#include "bergkern/core.hpp"

namespace bergkern {

/// A holomorphic map between model domains, with its analytic complex Jacobian.
class ConformalMap {
 public:
  using PointMap = std::function<ComplexPoint(const ComplexPoint&)>;
  using JacobianMap = std::function<Eigen::MatrixXcd(const ComplexPoint&)>;

  ConformalMap(std::string name, Domain source, std::optional<Domain> target, PointMap eval, JacobianMap jacobian);

  const std::string& name() const noexcept { return name_; }
  Domain source() const noexcept { return source_; }
  /// Empty when the image is not one of the model domains (inversion).
  const std::optional<Domain>& target() const noexcept { return target_; }
  std::size_t dim() const noexcept { return source_.dim(); }

  ComplexPoint operator()(const ComplexPoint& z) const { return eval_(z); }
  Eigen::MatrixXcd jacobian(const ComplexPoint& z) const { return jacobian_(z); }
  /// det J_C f(z); equals f'(z) in one variable.
  cplx jacobian_det(const ComplexPoint& z) const;

 private:
  std::string name_;
  Domain source_;
  std::optional<Domain> target_;
  PointMap eval_;
  JacobianMap jacobian_;
};

/// U -> D, z -> (i - z)/(i + z)
ConformalMap cayley();
/// Q -> U, z -> z^2
ConformalMap square();
/// annulus -> {1/2 < |w| < 1}, z -> 1/z
ConformalMap inversion();
/// D -> D, z -> (z - a)/(1 - conj(a) z), |a| < 1
ConformalMap mobius(cplx a);
/// ball2 -> ball2, z -> M z for a unitary 2x2 M
ConformalMap unitary2(const Eigen::Matrix2cd& m);
/// outer o inner, Jacobian by the chain rule on the stored analytic Jacobians.
ConformalMap compose(const ConformalMap& outer, const ConformalMap& inner);

struct JacobianPair {
  cplx complex_det;
  double real_det;
};

/// complex_det analytically; real_det from a central-difference 2n x 2n Jacobian of the
/// real rendering (x_1, y_1, ..., x_n, y_n).
JacobianPair real_jacobian_det(const ConformalMap& map, const ComplexPoint& z, double step = 1e-5);

/// K_1(z, w) = det J f(z) K_2(f(z), f(w)) conj(det J f(w)) for a Bergman kernel K_2 on the map's target.
Kernel pullback_kernel(const ConformalMap& map, const Kernel& target_kernel);

/// |det M K_B(Mz, Mw) conj(det M) - K_B(z, w)| for the ball Bergman kernel.
double unitary_invariance_check(const Eigen::Matrix2cd& m, const ComplexPoint& z, const ComplexPoint& zeta);

/// max |M^H M - I|
double unitarity_defect(const Eigen::Matrix2cd& m);

}  // namespace bergkern
