#include "bergkern/basis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <array>
#include <numeric>
#include <stdexcept>
#include <string>

#include "bergkern/errors.hpp"

namespace bergkern {

namespace {

// Leading functions checked against a reference rule at construction.
constexpr std::size_t kConstructionCheckCount = 12;
constexpr double kOrthonormalityTolerance = 1e-10;

cplx discrete_inner(const QuadratureRule& rule, const std::vector<cplx>& f, const std::vector<cplx>& g) {
  cplx s{};
  for (std::size_t i = 0; i < rule.size(); ++i) s += rule.weights[i] * f[i] * std::conj(g[i]);
  return s;
}

void verify_on_reference(const OrthonormalSystem& sys, const QuadratureRule& rule,
                         const std::vector<std::size_t>& indices) {
  if (sys.orthonormality_defect(rule, indices) > kOrthonormalityTolerance) {
    throw InvariantError("closed-form system failed the orthonormality check");
  }
}

std::vector<std::size_t> leading_indices(std::size_t first, std::size_t count) {
  std::vector<std::size_t> idx(count);
  std::iota(idx.begin(), idx.end(), first);
  return idx;
}

}  // namespace

OrthonormalSystem OrthonormalSystem::monomials(SpaceKind space, Domain domain, std::vector<Monomial> terms) {
  for (const Monomial& m : terms) {
    if (m.scale != 1.0 && m.scale != 2.0) throw std::invalid_argument("monomials: scale must be 1 or 2");
  }
  OrthonormalSystem sys(space, domain);
  sys.terms_ = std::move(terms);
  return sys;
}

OrthonormalSystem OrthonormalSystem::combination(Domain domain, std::vector<PointFunction> raw,
                                                 std::vector<std::vector<cplx>> coefficients) {
  OrthonormalSystem sys(SpaceKind::Custom, domain);
  sys.raw_ = std::move(raw);
  sys.coeffs_ = std::move(coefficients);
  return sys;
}

std::size_t OrthonormalSystem::size() const noexcept {
  return space_ == SpaceKind::Custom ? coeffs_.size() : terms_.size();
}

int OrthonormalSystem::label(std::size_t k) const {
  if (space_ == SpaceKind::Custom) return static_cast<int>(k);
  return terms_.at(k).exponent;
}

double OrthonormalSystem::squared_norm(std::size_t k) const {
  if (space_ == SpaceKind::Custom) throw std::logic_error("squared_norm: custom systems carry no monomial norms");
  return terms_.at(k).squared_norm;
}

namespace {

cplx ipow(cplx w, int n) {
  if (n < 0) return ipow(1.0 / w, -n);
  cplx result(1.0, 0.0);
  while (n > 0) {
    if (n & 1) result *= w;
    w *= w;
    n >>= 1;
  }
  return result;
}

// v[j] = v[j-1] * w, flushed to zero once below kUnderflowFloor so long tails stay out of the
// subnormal range.
constexpr double kUnderflowFloor = 1e-280;

void power_run(std::vector<cplx>& v, cplx w) {
  for (std::size_t j = 1; j < v.size(); ++j) {
    const cplx& prev = v[j - 1];
    if (std::abs(prev.real()) < kUnderflowFloor && std::abs(prev.imag()) < kUnderflowFloor) {
      std::fill(v.begin() + static_cast<std::ptrdiff_t>(j), v.end(), cplx{});
      return;
    }
    v[j] = prev * w;
  }
}

}  // namespace

cplx OrthonormalSystem::evaluate(std::size_t k, const ComplexPoint& z) const {
  if (space_ == SpaceKind::Custom) {
    const auto& row = coeffs_.at(k);
    cplx s{};
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (row[i] != cplx{}) s += row[i] * raw_[i](z);
    }
    return s;
  }
  const Monomial& m = terms_.at(k);
  return m.coefficient * ipow(z[0] / m.scale, m.exponent);
}

std::vector<cplx> OrthonormalSystem::evaluate_all(const ComplexPoint& z) const {
  std::vector<cplx> out(size());
  if (space_ == SpaceKind::Custom) {
    std::vector<cplx> raw_values(raw_.size());
    for (std::size_t i = 0; i < raw_.size(); ++i) raw_values[i] = raw_[i](z);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      cplx s{};
      for (std::size_t i = 0; i < coeffs_[k].size(); ++i) s += coeffs_[k][i] * raw_values[i];
      out[k] = s;
    }
    return out;
  }

  // Powers by recurrence outward from exponent 0, one table per scale.
  struct PowerTable {
    std::vector<cplx> pos;  // w^j, j >= 0
    std::vector<cplx> neg;  // w^{-m}, m >= 1 (index m-1)
  };
  // Scales are restricted to {1, 2}.
  auto slot = [](double scale) -> std::size_t { return scale == 1.0 ? 0 : 1; };
  std::array<PowerTable, 2> tables;
  for (const Monomial& m : terms_) {
    PowerTable& t = tables[slot(m.scale)];
    if (m.exponent >= 0) {
      t.pos.resize(std::max<std::size_t>(t.pos.size(), static_cast<std::size_t>(m.exponent) + 1));
    } else {
      t.neg.resize(std::max<std::size_t>(t.neg.size(), static_cast<std::size_t>(-m.exponent)));
    }
  }
  for (std::size_t s = 0; s < tables.size(); ++s) {
    PowerTable& t = tables[s];
    const cplx w = z[0] / (s == 0 ? 1.0 : 2.0);
    if (!t.pos.empty()) {
      t.pos[0] = 1.0;
      power_run(t.pos, w);
    }
    if (!t.neg.empty()) {
      t.neg[0] = 1.0 / w;
      power_run(t.neg, 1.0 / w);
    }
  }
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    const Monomial& m = terms_[k];
    const PowerTable& t = tables[slot(m.scale)];
    const cplx p = m.exponent >= 0 ? t.pos[static_cast<std::size_t>(m.exponent)]
                                   : t.neg[static_cast<std::size_t>(-m.exponent) - 1];
    out[k] = m.coefficient * p;
  }
  return out;
}

double OrthonormalSystem::orthonormality_defect(const QuadratureRule& rule, std::size_t count) const {
  return orthonormality_defect(rule, leading_indices(0, std::min(count, size())));
}

double OrthonormalSystem::orthonormality_defect(const QuadratureRule& rule,
                                                const std::vector<std::size_t>& indices) const {
  std::vector<std::vector<cplx>> values(indices.size(), std::vector<cplx>(rule.size()));
  for (std::size_t a = 0; a < indices.size(); ++a) {
    for (std::size_t n = 0; n < rule.size(); ++n) values[a][n] = evaluate(indices[a], rule.nodes[n]);
  }
  double worst = 0.0;
  for (std::size_t a = 0; a < indices.size(); ++a) {
    for (std::size_t b = a; b < indices.size(); ++b) {
      const cplx ip = discrete_inner(rule, values[a], values[b]);
      worst = std::max(worst, std::abs(ip - (a == b ? cplx(1.0) : cplx{})));
    }
  }
  return worst;
}

OrthonormalSystem disc_bergman_basis(std::size_t n) {
  if (n == 0) throw std::invalid_argument("disc_bergman_basis: N must be at least 1");
  std::vector<OrthonormalSystem::Monomial> terms;
  terms.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double jp1 = static_cast<double>(j + 1);
    terms.push_back({static_cast<int>(j), std::sqrt(jp1 / kPi), 1.0, kPi / jp1});
  }
  auto sys = OrthonormalSystem::monomials(SpaceKind::BergmanDisc, Domain::disc(), std::move(terms));
  verify_on_reference(sys, make_area_quadrature(Domain::disc(), 16, 64),
                      leading_indices(0, std::min(n, kConstructionCheckCount)));
  return sys;
}

OrthonormalSystem disc_hardy_basis(std::size_t n) {
  if (n == 0) throw std::invalid_argument("disc_hardy_basis: N must be at least 1");
  std::vector<OrthonormalSystem::Monomial> terms;
  terms.reserve(n);
  const double c = 1.0 / std::sqrt(2.0 * kPi);
  for (std::size_t j = 0; j < n; ++j) terms.push_back({static_cast<int>(j), c, 1.0, 2.0 * kPi});
  auto sys = OrthonormalSystem::monomials(SpaceKind::HardyDisc, Domain::disc(), std::move(terms));
  verify_on_reference(sys, make_boundary_quadrature(Domain::disc(), 64),
                      leading_indices(0, std::min(n, kConstructionCheckCount)));
  return sys;
}

double annulus_monomial_norm2(int j) {
  if (j == -1) return 2.0 * kPi * std::log(2.0);
  const double jp1 = static_cast<double>(j) + 1.0;
  return kPi * (std::pow(4.0, jp1) - 1.0) / jp1;
}

OrthonormalSystem annulus_bergman_basis(std::size_t n) {
  if (n == 0) throw std::invalid_argument("annulus_bergman_basis: N must be at least 1");
  const int big = static_cast<int>(n);
  std::vector<OrthonormalSystem::Monomial> terms;
  terms.reserve(2 * n + 1);
  for (int j = -big; j <= big; ++j) {
    const double norm2 = annulus_monomial_norm2(j);
    if (j >= 0) {
      // c_j 2^j = sqrt((j+1) / (pi (4 - 4^{-j}))) stays finite for any j.
      const double jp1 = static_cast<double>(j) + 1.0;
      const double c = std::sqrt(jp1 / (kPi * (4.0 - std::pow(4.0, -static_cast<double>(j)))));
      terms.push_back({j, c, 2.0, norm2});
    } else {
      terms.push_back({j, 1.0 / std::sqrt(norm2), 1.0, norm2});
    }
  }
  auto sys = OrthonormalSystem::monomials(SpaceKind::BergmanAnnulus, Domain::annulus(), std::move(terms));
  // Check j = -6..5 (or the whole system when smaller).
  const std::size_t half = std::min(n, kConstructionCheckCount / 2);
  verify_on_reference(sys, make_area_quadrature(Domain::annulus(), 32, 64),
                      leading_indices(n - half, 2 * half));
  return sys;
}

std::size_t annulus_truncation_order(const ComplexPoint& z, const ComplexPoint& zeta, double tol) {
  const Domain annulus = Domain::annulus();
  if (!annulus.contains(z) || !annulus.contains(zeta)) {
    throw DomainError("annulus_truncation_order: points must lie in the annulus 1 < |z| < 2");
  }
  if (!(tol > 0.0)) throw std::invalid_argument("annulus_truncation_order: tol must be positive");
  const double lambda = std::abs(z[0]) * std::abs(zeta[0]);
  const double q = lambda / 4.0;  // positive-tail ratio
  const double p = 1.0 / lambda;  // negative-tail ratio

  // sum_{j >= M} (4/3)(j+1)/(4 pi) q^j <= (4/3)/(4 pi) (M+1) q^M / (1 - q (M+2)/(M+1))
  auto positive_tail = [q](double m) {
    const double rho = q * (m + 2.0) / (m + 1.0);
    if (rho >= 1.0) return std::numeric_limits<double>::infinity();
    return (1.0 / (3.0 * kPi)) * (m + 1.0) * std::pow(q, m) / (1.0 - rho);
  };
  // sum_{m >= M} (4/3)(m-1)/pi p^m <= (4/3)/pi (M-1) p^M / (1 - p M/(M-1))
  auto negative_tail = [p](double m) {
    const double rho = p * m / (m - 1.0);
    if (rho >= 1.0) return std::numeric_limits<double>::infinity();
    return (4.0 / (3.0 * kPi)) * (m - 1.0) * std::pow(p, m) / (1.0 - rho);
  };

  constexpr std::size_t kMaxOrder = 2'000'000;
  for (std::size_t n = 1; n <= kMaxOrder; ++n) {
    const double first_omitted = static_cast<double>(n + 1);
    if (positive_tail(first_omitted) + negative_tail(first_omitted) <= tol) return n;
  }
  throw std::runtime_error("annulus_truncation_order: tail bound not reached");
}

OrthonormalSystem gram_schmidt(std::vector<PointFunction> raw, const QuadratureRule& rule) {
  const std::size_t m = raw.size();
  if (m == 0) throw std::invalid_argument("gram_schmidt: no input functions");
  std::vector<std::vector<cplx>> q(m, std::vector<cplx>(rule.size()));
  std::vector<std::vector<cplx>> c(m, std::vector<cplx>(m));
  double first_pivot = 0.0;

  for (std::size_t k = 0; k < m; ++k) {
    std::vector<cplx>& v = q[k];
    for (std::size_t n = 0; n < rule.size(); ++n) {
      v[n] = raw[k](rule.nodes[n]);
      if (!std::isfinite(v[n].real()) || !std::isfinite(v[n].imag())) {
        throw std::domain_error("gram_schmidt: input " + std::to_string(k) + " is not finite at node " +
                                std::to_string(n));
      }
    }
    std::vector<cplx>& coef = c[k];
    coef[k] = 1.0;
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t i = 0; i < k; ++i) {
        const cplx r = discrete_inner(rule, v, q[i]);
        for (std::size_t n = 0; n < rule.size(); ++n) v[n] -= r * q[i][n];
        for (std::size_t t = 0; t <= i; ++t) coef[t] -= r * c[i][t];
      }
    }
    const double norm = std::sqrt(std::max(0.0, discrete_inner(rule, v, v).real()));
    if (k == 0) first_pivot = norm;
    if (!(norm > 0.0) || norm < 1e-12 * first_pivot) throw DependentInputError(k);
    for (auto& x : v) x /= norm;
    for (std::size_t t = 0; t <= k; ++t) coef[t] /= norm;
  }
  return OrthonormalSystem::combination(rule.carrier, std::move(raw), std::move(c));
}

SeriesKernel::SeriesKernel(std::shared_ptr<const OrthonormalSystem> system, KernelKind kind)
    : system_(std::move(system)), kind_(kind) {
  if (!system_ || system_->empty()) throw std::invalid_argument("SeriesKernel: empty system");
  if (kind_ == KernelKind::PoissonSzego) {
    throw std::invalid_argument("SeriesKernel: kind must be bergman or szego");
  }
}

cplx SeriesKernel::operator()(const ComplexPoint& z, const ComplexPoint& zeta) const {
  const auto a = system_->evaluate_all(z);
  const auto b = system_->evaluate_all(zeta);
  cplx s{};
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * std::conj(b[k]);
  return s;
}

double SeriesKernel::diagonal(const ComplexPoint& z) const {
  double s = 0.0;
  for (const cplx& v : system_->evaluate_all(z)) s += std::norm(v);
  return s;
}

SeriesKernel assemble_series_kernel(OrthonormalSystem system, KernelKind kind) {
  return SeriesKernel(std::make_shared<const OrthonormalSystem>(std::move(system)), kind);
}

}  // namespace bergkern
