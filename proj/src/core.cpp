#include "bergkern/core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

#include "bergkern/errors.hpp"

namespace bergkern {

namespace {

bool finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void require_finite(cplx z) {
  if (!finite(z)) throw std::invalid_argument("ComplexPoint coordinates must be finite");
}

}  // namespace

ComplexPoint::ComplexPoint(cplx z) : coords_{z, cplx{}}, dim_(1) { require_finite(z); }

ComplexPoint::ComplexPoint(cplx z1, cplx z2) : coords_{z1, z2}, dim_(2) {
  require_finite(z1);
  require_finite(z2);
}

double ComplexPoint::norm2() const noexcept {
  double s = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) s += std::norm(coords_[i]);
  return s;
}

double ComplexPoint::norm() const noexcept { return std::sqrt(norm2()); }

cplx hermitian_dot(const ComplexPoint& z, const ComplexPoint& w) {
  if (z.dim() != w.dim()) throw std::invalid_argument("hermitian_dot: dimension mismatch");
  cplx s{};
  for (std::size_t i = 0; i < z.dim(); ++i) s += z[i] * std::conj(w[i]);
  return s;
}

std::string_view Domain::name() const noexcept {
  switch (tag_) {
    case DomainTag::Disc: return "disc";
    case DomainTag::Annulus: return "annulus";
    case DomainTag::HalfPlane: return "halfplane";
    case DomainTag::QuarterPlane: return "quarterplane";
    case DomainTag::Ball2: return "ball2";
  }
  return "?";
}

double Domain::signed_distance(const ComplexPoint& z) const {
  if (z.dim() != dim()) {
    throw DomainError("point of dimension " + std::to_string(z.dim()) + " does not belong to " +
                      std::string(name()));
  }
  switch (tag_) {
    case DomainTag::Disc: return 1.0 - std::abs(z[0]);
    case DomainTag::Annulus: {
      const double r = std::abs(z[0]);
      return std::min(r - 1.0, 2.0 - r);
    }
    case DomainTag::HalfPlane: return z[0].imag();
    case DomainTag::QuarterPlane: return std::min(z[0].real(), z[0].imag());
    case DomainTag::Ball2: return 1.0 - z.norm();
  }
  return 0.0;
}

bool Domain::contains(const ComplexPoint& z) const {
  if (z.dim() != dim()) return false;
  return signed_distance(z) > 0.0;
}

double Domain::boundary_distance(const ComplexPoint& z) const {
  const double d = signed_distance(z);
  if (d < 0.0) throw DomainError("point lies outside the closed " + std::string(name()));
  return d;
}

bool Domain::on_boundary(const ComplexPoint& z, double tol) const {
  if (z.dim() != dim()) return false;
  return std::abs(signed_distance(z)) <= tol;
}

double QuadratureRule::weight_sum() const {
  return std::accumulate(weights.begin(), weights.end(), 0.0);
}

double QuadratureRule::carrier_measure() const {
  switch (measure) {
    case Measure::Area: return carrier.tag() == DomainTag::Annulus ? 3.0 * kPi : kPi;
    case Measure::Arc: return 2.0 * kPi;
    case Measure::Sphere3: return 2.0 * kPi * kPi;
  }
  return 0.0;
}

namespace {

// Returns (P_n(x), P_n'(x)) by the three-term recurrence.
std::pair<double, double> legendre_with_derivative(std::size_t n, double x) {
  double p0 = 1.0, p1 = x;
  for (std::size_t k = 2; k <= n; ++k) {
    const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / static_cast<double>(k);
    p0 = p1;
    p1 = p2;
  }
  return {p1, static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0)};
}

}  // namespace

GaussLegendre gauss_legendre(std::size_t n, double a, double b) {
  if (n == 0) throw std::invalid_argument("gauss_legendre: n must be positive");
  GaussLegendre gl;
  gl.nodes.resize(n);
  gl.weights.resize(n);
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(kPi * (static_cast<double>(i) + 0.75) / (static_cast<double>(n) + 0.5));
    for (int it = 0; it < 100; ++it) {
      const auto [p, dp] = legendre_with_derivative(n, x);
      const double dx = p / dp;
      x -= dx;
      if (std::abs(dx) <= 1e-15 * std::abs(x) + 1e-300) break;
    }
    const double dp = legendre_with_derivative(n, x).second;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    gl.nodes[i] = mid - half * x;
    gl.nodes[n - 1 - i] = mid + half * x;
    gl.weights[i] = gl.weights[n - 1 - i] = half * w;
  }
  return gl;
}

namespace {

void check_weight_sum(const QuadratureRule& rule) {
  const double expected = rule.carrier_measure();
  if (std::abs(rule.weight_sum() - expected) > kWeightSumTolerance * expected) {
    throw InvariantError("quadrature weight sum does not match the carrier measure");
  }
}

}  // namespace

QuadratureRule make_area_quadrature(Domain domain, std::size_t n_radial, std::size_t n_angular) {
  double r0 = 0.0, r1 = 1.0;
  switch (domain.tag()) {
    case DomainTag::Disc: break;
    case DomainTag::Annulus:
      r0 = 1.0;
      r1 = 2.0;
      break;
    default: throw DomainError("no area rule for this domain");
  }
  if (n_radial < 2 || n_angular < 4) {
    throw std::invalid_argument("make_area_quadrature: need n_radial >= 2 and n_angular >= 4");
  }
  const GaussLegendre gl = gauss_legendre(n_radial, r0, r1);
  const double dtheta = 2.0 * kPi / static_cast<double>(n_angular);
  QuadratureRule rule{domain, Measure::Area, {}, {}};
  rule.nodes.reserve(n_radial * n_angular);
  rule.weights.reserve(n_radial * n_angular);
  for (std::size_t i = 0; i < n_radial; ++i) {
    const double r = gl.nodes[i];
    for (std::size_t k = 0; k < n_angular; ++k) {
      rule.nodes.emplace_back(std::polar(r, dtheta * static_cast<double>(k)));
      rule.weights.push_back(r * dtheta * gl.weights[i]);
    }
  }
  check_weight_sum(rule);
  return rule;
}

QuadratureRule make_boundary_quadrature(Domain domain, std::size_t n_nodes) {
  if (domain.tag() == DomainTag::Disc) {
    if (n_nodes < 8) throw std::invalid_argument("make_boundary_quadrature: need n_nodes >= 8");
    QuadratureRule rule{domain, Measure::Arc, {}, {}};
    const double dtheta = 2.0 * kPi / static_cast<double>(n_nodes);
    rule.nodes.reserve(n_nodes);
    for (std::size_t k = 0; k < n_nodes; ++k) rule.nodes.emplace_back(std::polar(1.0, dtheta * static_cast<double>(k)));
    rule.weights.assign(n_nodes, dtheta);
    check_weight_sum(rule);
    return rule;
  }
  if (domain.tag() == DomainTag::Ball2) {
    if (n_nodes < 2) throw std::invalid_argument("make_boundary_quadrature: need n_nodes >= 2");
    const GaussLegendre gl = gauss_legendre(n_nodes, 0.0, kPi / 2.0);
    const double dtheta = 2.0 * kPi / static_cast<double>(n_nodes);
    QuadratureRule rule{domain, Measure::Sphere3, {}, {}};
    const std::size_t total = n_nodes * n_nodes * n_nodes;
    rule.nodes.reserve(total);
    rule.weights.reserve(total);
    for (std::size_t i = 0; i < n_nodes; ++i) {
      const double s = gl.nodes[i];
      const double w = gl.weights[i] * std::cos(s) * std::sin(s) * dtheta * dtheta;
      for (std::size_t a = 0; a < n_nodes; ++a) {
        const cplx z1 = std::polar(std::cos(s), dtheta * static_cast<double>(a));
        for (std::size_t b = 0; b < n_nodes; ++b) {
          rule.nodes.emplace_back(z1, std::polar(std::sin(s), dtheta * static_cast<double>(b)));
          rule.weights.push_back(w);
        }
      }
    }
    check_weight_sum(rule);
    return rule;
  }
  throw DomainError("no boundary rule for this domain");
}

cplx integrate(const QuadratureRule& rule, const PointFunction& f) {
  cplx sum{};
  for (std::size_t k = 0; k < rule.size(); ++k) {
    const cplx v = f(rule.nodes[k]);
    if (!finite(v)) throw std::domain_error("integrand is not finite at node " + std::to_string(k));
    sum += rule.weights[k] * v;
  }
  return sum;
}

cplx integrate_samples(const QuadratureRule& rule, std::span<const cplx> values) {
  if (values.size() != rule.size()) throw std::invalid_argument("integrate_samples: size mismatch");
  cplx sum{};
  for (std::size_t k = 0; k < rule.size(); ++k) {
    if (!finite(values[k])) throw std::domain_error("integrand is not finite at node " + std::to_string(k));
    sum += rule.weights[k] * values[k];
  }
  return sum;
}

}  // namespace bergkern
