#pragma once

#include <string>
#include <vector>

#include "bergkern/core.hpp"

namespace bergkern {

struct BoundaryFunction {
  PointFunction eval;
  std::string description;
};

struct ProjectionResult {
  ComplexPoint at;
  cplx value;
  std::size_t rule_size = 0;
  /// Set when |z| > kNearBoundaryRadius; trapezoid error grows like |z|^n there.
  bool near_boundary = false;
};

inline constexpr double kNearBoundaryRadius = 0.95;

/// sum_k w_k f(zeta_k) S(z, zeta_k) with the disc Szego kernel; rule must be an arc rule on the circle.
ProjectionResult szego_project(const BoundaryFunction& f, const ComplexPoint& z, const QuadratureRule& rule);

/// sum_k w_k f(zeta_k) K(z, zeta_k) with the disc Bergman kernel; rule must be a disc area rule.
ProjectionResult bergman_project(const PointFunction& f, const ComplexPoint& z, const QuadratureRule& rule);
/// As bergman_project with f given by its values on the rule nodes.
ProjectionResult bergman_project_samples(std::span<const cplx> samples, const ComplexPoint& z,
                                         const QuadratureRule& rule);
/// Pf evaluated at every node of the rule (same discrete operator as bergman_project).
std::vector<cplx> bergman_project_nodes(std::span<const cplx> samples, const QuadratureRule& rule);

/// sum_k w_k f(zeta_k) P(z, zeta_k); disc with an arc rule or ball2 with an S^3 rule.
ProjectionResult poisson_szego_extend(const BoundaryFunction& f, const ComplexPoint& z, const QuadratureRule& rule);

/// max over a 5x5 grid on [-0.6, 0.6]^2 of |P(Pf)(z) - Pf(z)|, with the inner Pf sampled on the rule nodes.
double idempotence_check(const PointFunction& f, const QuadratureRule& rule);

}  // namespace bergkern
