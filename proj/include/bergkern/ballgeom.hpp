#pragma once

#include <Eigen/Dense>
#include <functional>
#include <string>

#include "bergkern/core.hpp"

namespace bergkern {

/// A Hermitian 2x2 matrix field value at a point of the ball in C^2.
struct HermitianMetric2 {
  Eigen::Matrix2cd g;
  ComplexPoint at;

  double min_eigenvalue() const;
};

/// g_jk = 3 / (1 - |z|^2)^2 [delta_jk (1 - |z|^2) + conj(z_j) z_k]
HermitianMetric2 bergman_metric(const ComplexPoint& z);
/// d^2/dz_j dconj(z_k) log K_B(z, z) by fourth-order central differences in the real coordinates.
HermitianMetric2 bergman_metric_fd(const ComplexPoint& z, double h = 1e-3);
/// max_jk |fd - closed form|
double metric_fd_deviation(const ComplexPoint& z, double h = 1e-3);

struct InverseMetric {
  HermitianMetric2 inverse;  // (1 - |z|^2)/3 (delta_jk - conj(z_j) z_k)
  double det = 0.0;          // 9 / (1 - |z|^2)^3
};
InverseMetric inverse_metric(const ComplexPoint& z);

/// Max magnitude of sum_j d/dconj(z_j) (g g^jk) and sum_k d/dz_k (g g^jk), both by central differences.
double divergence_residual(const ComplexPoint& z, double h = 1e-4);

using BallFunction = std::function<cplx(const ComplexPoint&)>;

/// 4 sum_jk g^jk d^2u/dconj(z_j) dz_k with second-order central differences.
cplx invariant_laplacian(const BallFunction& u, const ComplexPoint& z, double h = 1e-3);

/// |L_z P(z, zeta)| / P(z, zeta)
double annihilation_check(const ComplexPoint& zeta, const ComplexPoint& z, double h = 1e-3);

struct DefiningFunction {
  std::string id;
  std::function<double(const ComplexPoint&)> value;
  /// d rho / dz_j
  std::function<Eigen::Vector2cd(const ComplexPoint&)> gradient;
  /// d^2 rho / dz_j dconj(z_k)
  std::function<Eigen::Matrix2cd(const ComplexPoint&)> complex_hessian;
};

/// rho(z) = |z|^2 - 1
DefiningFunction ball2_defining_function();

/// sum_jk rho_{j kbar}(p) w_j conj(w_k) for a boundary point p and a complex-tangential w.
double levi_form(const DefiningFunction& rho, const ComplexPoint& p, const ComplexPoint& w);

}  // namespace bergkern
