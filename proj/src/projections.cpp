#include "bergkern/projections.hpp"

#include <cmath>
#include <stdexcept>

#include "bergkern/catalog.hpp"
#include "bergkern/errors.hpp"

namespace bergkern {

namespace {

void require_rule(const QuadratureRule& rule, Domain carrier, Measure measure, const char* what) {
  if (!(rule.carrier == carrier) || rule.measure != measure) {
    throw std::invalid_argument(std::string(what) + ": quadrature rule does not match the domain");
  }
}

void require_inside(Domain d, const ComplexPoint& z, const char* what) {
  if (z.dim() != d.dim() || !d.contains(z)) {
    throw DomainError(std::string(what) + ": point is not inside the " + std::string(d.name()));
  }
}

ProjectionResult make_result(const ComplexPoint& z, cplx value, std::size_t n) {
  if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
    throw std::domain_error("projection value is not finite");
  }
  return {z, value, n, z.norm() > kNearBoundaryRadius};
}

// Unchecked disc Bergman kernel; arguments are validated by the callers.
inline cplx disc_bergman(cplx z, cplx w) {
  const cplx d = 1.0 - z * std::conj(w);
  return 1.0 / (kPi * d * d);
}

}  // namespace

ProjectionResult szego_project(const BoundaryFunction& f, const ComplexPoint& z, const QuadratureRule& rule) {
  require_rule(rule, Domain::disc(), Measure::Arc, "szego_project");
  require_inside(Domain::disc(), z, "szego_project");
  const cplx value = integrate(rule, [&](const ComplexPoint& zeta) {
    return f.eval(zeta) * eval_closed_form(KernelId::SzegoDisc, z, zeta);
  });
  return make_result(z, value, rule.size());
}

ProjectionResult bergman_project(const PointFunction& f, const ComplexPoint& z, const QuadratureRule& rule) {
  require_rule(rule, Domain::disc(), Measure::Area, "bergman_project");
  require_inside(Domain::disc(), z, "bergman_project");
  const cplx value =
      integrate(rule, [&](const ComplexPoint& zeta) { return f(zeta) * disc_bergman(z[0], zeta[0]); });
  return make_result(z, value, rule.size());
}

ProjectionResult bergman_project_samples(std::span<const cplx> samples, const ComplexPoint& z,
                                         const QuadratureRule& rule) {
  require_rule(rule, Domain::disc(), Measure::Area, "bergman_project");
  require_inside(Domain::disc(), z, "bergman_project");
  if (samples.size() != rule.size()) throw std::invalid_argument("bergman_project: sample count does not match rule");
  std::vector<cplx> values(rule.size());
  for (std::size_t k = 0; k < rule.size(); ++k) values[k] = samples[k] * disc_bergman(z[0], rule.nodes[k][0]);
  return make_result(z, integrate_samples(rule, values), rule.size());
}

std::vector<cplx> bergman_project_nodes(std::span<const cplx> samples, const QuadratureRule& rule) {
  require_rule(rule, Domain::disc(), Measure::Area, "bergman_project_nodes");
  if (samples.size() != rule.size()) throw std::invalid_argument("bergman_project: sample count does not match rule");
  const std::size_t n = rule.size();
  std::vector<cplx> weighted(n);
  std::vector<cplx> conj_nodes(n);
  for (std::size_t m = 0; m < n; ++m) {
    weighted[m] = rule.weights[m] * samples[m] / kPi;
    conj_nodes[m] = std::conj(rule.nodes[m][0]);
  }
  std::vector<cplx> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    const cplx zk = rule.nodes[k][0];
    cplx acc = 0.0;
    for (std::size_t m = 0; m < n; ++m) {
      const cplx d = 1.0 - zk * conj_nodes[m];
      acc += weighted[m] / (d * d);
    }
    out[k] = acc;
  }
  return out;
}

ProjectionResult poisson_szego_extend(const BoundaryFunction& f, const ComplexPoint& z, const QuadratureRule& rule) {
  KernelId id;
  if (rule.carrier == Domain::disc() && rule.measure == Measure::Arc) {
    id = KernelId::PoissonSzegoDisc;
  } else if (rule.carrier == Domain::ball2() && rule.measure == Measure::Sphere3) {
    id = KernelId::PoissonSzegoBall2;
  } else {
    throw std::invalid_argument("poisson_szego_extend: rule must be a circle or S^3 boundary rule");
  }
  require_inside(rule.carrier, z, "poisson_szego_extend");
  const cplx value =
      integrate(rule, [&](const ComplexPoint& zeta) { return f.eval(zeta) * eval_closed_form(id, z, zeta); });
  return make_result(z, value, rule.size());
}

double idempotence_check(const PointFunction& f, const QuadratureRule& rule) {
  require_rule(rule, Domain::disc(), Measure::Area, "idempotence_check");
  std::vector<cplx> samples(rule.size());
  for (std::size_t k = 0; k < rule.size(); ++k) samples[k] = f(rule.nodes[k]);
  const std::vector<cplx> pf = bergman_project_nodes(samples, rule);

  double worst = 0.0;
  constexpr int kGrid = 5;
  for (int a = 0; a < kGrid; ++a) {
    for (int b = 0; b < kGrid; ++b) {
      const ComplexPoint z(-0.6 + 0.3 * a, -0.6 + 0.3 * b);
      const cplx once = bergman_project_samples(samples, z, rule).value;
      const cplx twice = bergman_project_samples(pf, z, rule).value;
      worst = std::max(worst, std::abs(twice - once));
    }
  }
  return worst;
}

}  // namespace bergkern
