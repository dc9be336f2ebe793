#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "bergkern/core.hpp"

namespace bergkern {

enum class SpaceKind { BergmanDisc, HardyDisc, BergmanAnnulus, Custom };

enum class KernelKind { Bergman, Szego, PoissonSzego };

/// A finite orthonormal system {phi_k}. Closed-form systems are normalized
/// monomials phi_k(z) = c_k (z / s_k)^{j_k}; custom systems are linear
/// combinations of caller-supplied functions (Gram-Schmidt output).
class OrthonormalSystem {
 public:
  struct Monomial {
    int exponent;          // j
    double coefficient;    // c, so that phi = c * (z / scale)^j
    double scale;          // 1 or 2 only; keeps large annulus powers in range
    double squared_norm;   // ||z^j||^2 in the ambient inner product (may be +inf for huge j)
  };

  static OrthonormalSystem monomials(SpaceKind space, Domain domain, std::vector<Monomial> terms);
  static OrthonormalSystem combination(Domain domain, std::vector<PointFunction> raw,
                                       std::vector<std::vector<cplx>> coefficients);

  SpaceKind space() const noexcept { return space_; }
  Domain domain() const noexcept { return domain_; }
  std::size_t size() const noexcept;
  bool empty() const noexcept { return size() == 0; }

  /// Monomial exponent j of function k (closed-form systems), or k for custom systems.
  int label(std::size_t k) const;
  /// Squared norm ||z^j||^2 of the raw monomial behind phi_k (closed-form systems only).
  double squared_norm(std::size_t k) const;

  cplx evaluate(std::size_t k, const ComplexPoint& z) const;
  /// phi_0(z), ..., phi_{N-1}(z)
  std::vector<cplx> evaluate_all(const ComplexPoint& z) const;

  /// Coefficient matrix C with phi_k = sum_i C[k][i] raw_i (custom systems).
  const std::vector<std::vector<cplx>>& coefficients() const noexcept { return coeffs_; }

  /// max_{j,k} |<phi_j, phi_k>_rule - delta_jk| over the first `count` functions.
  double orthonormality_defect(const QuadratureRule& rule, std::size_t count) const;
  /// Same, restricted to the listed function indices.
  double orthonormality_defect(const QuadratureRule& rule, const std::vector<std::size_t>& indices) const;

 private:
  OrthonormalSystem(SpaceKind space, Domain domain) : space_(space), domain_(domain) {}

  SpaceKind space_;
  Domain domain_;
  std::vector<Monomial> terms_;
  std::vector<PointFunction> raw_;
  std::vector<std::vector<cplx>> coeffs_;
};

/// phi_j(z) = sqrt((j+1)/pi) z^j, j = 0..N-1
OrthonormalSystem disc_bergman_basis(std::size_t n);
/// phi_j(z) = z^j / sqrt(2 pi), j = 0..N-1, arc-length inner product
OrthonormalSystem disc_hardy_basis(std::size_t n);
/// phi_j(z) = z^j / ||z^j||, j = -N..N, on 1 < |z| < 2
OrthonormalSystem annulus_bergman_basis(std::size_t n);

/// ||z^j||^2 on the annulus 1 < |z| < 2: pi (4^{j+1} - 1)/(j+1), or 2 pi ln 2 for j = -1.
double annulus_monomial_norm2(int j);

/// Smallest N for which the truncation tail of the annulus series at (z, zeta) is <= tol,
/// from geometric bounds with ratios |z conj(zeta)|/4 (positive tail) and 1/|z conj(zeta)| (negative tail).
std::size_t annulus_truncation_order(const ComplexPoint& z, const ComplexPoint& zeta, double tol = 1e-12);

/// Modified Gram-Schmidt with one re-orthogonalization pass in the discrete
/// inner product <f, g> = sum_k w_k f(x_k) conj(g(x_k)). Throws DependentInputError
/// when a pivot norm falls below 1e-12 times the first pivot.
OrthonormalSystem gram_schmidt(std::vector<PointFunction> raw, const QuadratureRule& rule);

/// Finite partial sum K_N(z, zeta) = sum_k phi_k(z) conj(phi_k(zeta)).
class SeriesKernel {
 public:
  SeriesKernel(std::shared_ptr<const OrthonormalSystem> system, KernelKind kind);

  KernelKind kind() const noexcept { return kind_; }
  const OrthonormalSystem& system() const noexcept { return *system_; }

  cplx operator()(const ComplexPoint& z, const ComplexPoint& zeta) const;
  /// sum_k |phi_k(z)|^2
  double diagonal(const ComplexPoint& z) const;

 private:
  std::shared_ptr<const OrthonormalSystem> system_;
  KernelKind kind_;
};

SeriesKernel assemble_series_kernel(OrthonormalSystem system, KernelKind kind);

}  // namespace bergkern
