#include "bergkern/ballgeom.hpp"

#include <array>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "bergkern/catalog.hpp"
#include "bergkern/errors.hpp"

namespace bergkern {

namespace {

using Real4 = std::array<double, 4>;  // x1, y1, x2, y2

Real4 to_real(const ComplexPoint& z) { return {z[0].real(), z[0].imag(), z[1].real(), z[1].imag()}; }
ComplexPoint from_real(const Real4& x) { return ComplexPoint(cplx(x[0], x[1]), cplx(x[2], x[3])); }

void require_ball(const ComplexPoint& z, const char* what) {
  if (z.dim() != 2) throw std::invalid_argument(std::string(what) + ": expected a point of C^2");
  if (!(z.norm2() < 1.0)) throw DomainError(std::string(what) + ": point is not inside the unit ball");
}

template <class F>
auto shifted(const F& f, Real4 x, int a, double da, int b, double db) {
  x[a] += da;
  x[b] += db;
  return f(x);
}

// Real Hessian entry d^2 f / dx_a dx_b, second order.
template <class F>
auto hessian2(const F& f, const Real4& x, int a, int b, double h) {
  if (a == b) {
    return (shifted(f, x, a, h, a, 0.0) - 2.0 * f(x) + shifted(f, x, a, -h, a, 0.0)) / (h * h);
  }
  return (shifted(f, x, a, h, b, h) - shifted(f, x, a, h, b, -h) - shifted(f, x, a, -h, b, h) +
          shifted(f, x, a, -h, b, -h)) /
         (4.0 * h * h);
}

// Real Hessian entry, fourth order.
template <class F>
auto hessian4(const F& f, const Real4& x, int a, int b, double h) {
  if (a == b) {
    constexpr std::array<double, 5> c{-1.0, 16.0, -30.0, 16.0, -1.0};
    decltype(f(x)) acc{};
    for (int p = -2; p <= 2; ++p) acc += c[p + 2] * shifted(f, x, a, p * h, a, 0.0);
    return acc / (12.0 * h * h);
  }
  constexpr std::array<double, 5> d{1.0, -8.0, 0.0, 8.0, -1.0};
  decltype(f(x)) acc{};
  for (int p = -2; p <= 2; ++p) {
    for (int q = -2; q <= 2; ++q) {
      if (p == 0 || q == 0) continue;
      acc += d[p + 2] * d[q + 2] * shifted(f, x, a, p * h, b, q * h);
    }
  }
  return acc / (144.0 * h * h);
}

// d^2/dz_j dconj(z_k) from the real Hessian H (coordinate index 2j = x_j, 2j+1 = y_j).
template <class H>
cplx wirtinger_z_zbar(const H& hess, int j, int k) {
  const int xj = 2 * j, yj = 2 * j + 1, xk = 2 * k, yk = 2 * k + 1;
  return 0.25 * cplx(hess(xj, xk) + hess(yj, yk), hess(xj, yk) - hess(yj, xk));
}

// d^2/dconj(z_j) dz_k
template <class H>
cplx wirtinger_zbar_z(const H& hess, int j, int k) {
  const int xj = 2 * j, yj = 2 * j + 1, xk = 2 * k, yk = 2 * k + 1;
  return 0.25 * cplx(hess(xj, xk) + hess(yj, yk), hess(yj, xk) - hess(xj, yk));
}

// (3 / (1 - |z|^2)^2)(delta_jk - conj(z_j) z_k)
Eigen::Matrix2cd weighted_inverse(const ComplexPoint& z) {
  const double s = 1.0 - z.norm2();
  Eigen::Matrix2cd m;
  for (int j = 0; j < 2; ++j) {
    for (int k = 0; k < 2; ++k) {
      m(j, k) = 3.0 / (s * s) * ((j == k ? 1.0 : 0.0) - std::conj(z[j]) * z[k]);
    }
  }
  return m;
}

}  // namespace

double HermitianMetric2::min_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> solver(g, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

HermitianMetric2 bergman_metric(const ComplexPoint& z) {
  require_ball(z, "bergman_metric");
  const double s = 1.0 - z.norm2();
  Eigen::Matrix2cd g;
  for (int j = 0; j < 2; ++j) {
    for (int k = 0; k < 2; ++k) {
      g(j, k) = 3.0 / (s * s) * ((j == k ? s : 0.0) + std::conj(z[j]) * z[k]);
    }
  }
  return {g, z};
}

HermitianMetric2 bergman_metric_fd(const ComplexPoint& z, double h) {
  require_ball(z, "bergman_metric_fd");
  if (z.norm() + 2.0 * std::sqrt(2.0) * h >= 1.0) throw DomainError("bergman_metric_fd: stencil leaves the ball");
  auto log_k = [](const Real4& x) {
    const ComplexPoint p = from_real(x);
    return std::log(eval_closed_form(KernelId::BergmanBall2, p, p).real());
  };
  const Real4 x = to_real(z);
  Eigen::Matrix4d hess;
  for (int a = 0; a < 4; ++a) {
    for (int b = a; b < 4; ++b) hess(a, b) = hess(b, a) = hessian4(log_k, x, a, b, h);
  }
  Eigen::Matrix2cd g;
  for (int j = 0; j < 2; ++j) {
    for (int k = 0; k < 2; ++k) g(j, k) = wirtinger_z_zbar(hess, j, k);
  }
  return {g, z};
}

double metric_fd_deviation(const ComplexPoint& z, double h) {
  return (bergman_metric_fd(z, h).g - bergman_metric(z).g).cwiseAbs().maxCoeff();
}

InverseMetric inverse_metric(const ComplexPoint& z) {
  require_ball(z, "inverse_metric");
  const double s = 1.0 - z.norm2();
  Eigen::Matrix2cd inv;
  for (int j = 0; j < 2; ++j) {
    for (int k = 0; k < 2; ++k) inv(j, k) = s / 3.0 * ((j == k ? 1.0 : 0.0) - std::conj(z[j]) * z[k]);
  }
  return {{inv, z}, 9.0 / (s * s * s)};
}

double divergence_residual(const ComplexPoint& z, double h) {
  require_ball(z, "divergence_residual");
  if (!(z.norm() < 1.0 - 1e-3)) throw DomainError("divergence_residual: point is within 1e-3 of the boundary");
  const Real4 x = to_real(z);
  // d/dx_a and d/dy_a of the matrix field at x
  auto partial = [&](int a) {
    Real4 p = x, m = x;
    p[a] += h;
    m[a] -= h;
    return Eigen::Matrix2cd((weighted_inverse(from_real(p)) - weighted_inverse(from_real(m))) / (2.0 * h));
  };
  std::array<Eigen::Matrix2cd, 4> d;
  for (int a = 0; a < 4; ++a) d[a] = partial(a);
  const cplx i(0.0, 1.0);
  double worst = 0.0;
  for (int k = 0; k < 2; ++k) {
    cplx bar_sum = 0.0;  // sum_j d/dconj(z_j) G_jk
    for (int j = 0; j < 2; ++j) bar_sum += 0.5 * (d[2 * j](j, k) + i * d[2 * j + 1](j, k));
    worst = std::max(worst, std::abs(bar_sum));
  }
  for (int j = 0; j < 2; ++j) {
    cplx sum = 0.0;  // sum_k d/dz_k G_jk
    for (int k = 0; k < 2; ++k) sum += 0.5 * (d[2 * k](j, k) - i * d[2 * k + 1](j, k));
    worst = std::max(worst, std::abs(sum));
  }
  return worst;
}

cplx invariant_laplacian(const BallFunction& u, const ComplexPoint& z, double h) {
  require_ball(z, "invariant_laplacian");
  if (!(h >= 1e-4 && h <= 1e-2)) throw std::invalid_argument("invariant_laplacian: h must lie in [1e-4, 1e-2]");
  if (!(z.norm() + 2.0 * h < 1.0)) throw DomainError("invariant_laplacian: stencil leaves the ball");
  auto f = [&u](const Real4& x) { return u(from_real(x)); };
  const Real4 x = to_real(z);
  std::array<std::array<cplx, 4>, 4> hess{};
  for (int a = 0; a < 4; ++a) {
    for (int b = a; b < 4; ++b) hess[a][b] = hess[b][a] = hessian2(f, x, a, b, h);
  }
  // Complex-valued u: split into real and imaginary Hessians for the Wirtinger combination.
  auto re = [&](int a, int b) { return hess[a][b].real(); };
  auto im = [&](int a, int b) { return hess[a][b].imag(); };
  const Eigen::Matrix2cd inv = inverse_metric(z).inverse.g;
  cplx acc = 0.0;
  const cplx i(0.0, 1.0);
  for (int j = 0; j < 2; ++j) {
    for (int k = 0; k < 2; ++k) {
      const cplx d2 = wirtinger_zbar_z(re, j, k) + i * wirtinger_zbar_z(im, j, k);
      acc += inv(j, k) * d2;
    }
  }
  return 4.0 * acc;
}

double annihilation_check(const ComplexPoint& zeta, const ComplexPoint& z, double h) {
  if (zeta.dim() != 2 || std::abs(zeta.norm2() - 1.0) > 1e-12) {
    throw DomainError("annihilation_check: zeta is not on the unit sphere");
  }
  auto p = [&zeta](const ComplexPoint& w) { return eval_closed_form(KernelId::PoissonSzegoBall2, w, zeta); };
  const cplx lp = invariant_laplacian(p, z, h);
  return std::abs(lp) / p(z).real();
}

DefiningFunction ball2_defining_function() {
  return {"ball2", [](const ComplexPoint& z) { return z.norm2() - 1.0; },
          [](const ComplexPoint& z) { return Eigen::Vector2cd(std::conj(z[0]), std::conj(z[1])); },
          [](const ComplexPoint&) { return Eigen::Matrix2cd(Eigen::Matrix2cd::Identity()); }};
}

double levi_form(const DefiningFunction& rho, const ComplexPoint& p, const ComplexPoint& w) {
  if (p.dim() != 2 || w.dim() != 2) throw std::invalid_argument("levi_form: expected points of C^2");
  if (std::abs(rho.value(p)) > 1e-10) throw DomainError("levi_form: point is not on the boundary");
  const Eigen::Vector2cd grad = rho.gradient(p);
  const double residual = std::abs(grad(0) * w[0] + grad(1) * w[1]);
  if (residual > 1e-10) {
    std::ostringstream msg;
    msg << "levi_form: w is not complex-tangential (residual " << residual << ")";
    throw InvariantError(msg.str());
  }
  const Eigen::Matrix2cd hess = rho.complex_hessian(p);
  cplx acc = 0.0;
  for (int j = 0; j < 2; ++j) {
    for (int k = 0; k < 2; ++k) acc += hess(j, k) * w[j] * std::conj(w[k]);
  }
  return acc.real();
}

}  // namespace bergkern
