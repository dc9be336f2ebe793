#include "bergkern/catalog.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "bergkern/errors.hpp"

namespace bergkern {

namespace {

constexpr double kBoundarySlack = 1e-12;  // |zeta| <= 1 + slack admitted for Szego arguments
constexpr double kOnBoundaryTol = 1e-10;

struct KernelInfo {
  KernelId id;
  std::string_view name;
  DomainTag domain;
  KernelKind kind;
};

constexpr std::array<KernelInfo, 9> kKernelTable{{
    {KernelId::BergmanDisc, "bergman-disc", DomainTag::Disc, KernelKind::Bergman},
    {KernelId::SzegoDisc, "szego-disc", DomainTag::Disc, KernelKind::Szego},
    {KernelId::PoissonSzegoDisc, "poisson-szego-disc", DomainTag::Disc, KernelKind::PoissonSzego},
    {KernelId::BergmanHalfPlane, "bergman-halfplane", DomainTag::HalfPlane, KernelKind::Bergman},
    {KernelId::BergmanQuarterPlane, "bergman-quarterplane", DomainTag::QuarterPlane, KernelKind::Bergman},
    {KernelId::BergmanBall2, "bergman-ball2", DomainTag::Ball2, KernelKind::Bergman},
    {KernelId::SzegoBall2, "szego-ball2", DomainTag::Ball2, KernelKind::Szego},
    {KernelId::PoissonSzegoBall2, "poisson-szego-ball2", DomainTag::Ball2, KernelKind::PoissonSzego},
    {KernelId::BergmanAnnulusApprox, "bergman-annulus-approx", DomainTag::Annulus, KernelKind::Bergman},
}};

const KernelInfo& info(KernelId id) {
  for (const auto& k : kKernelTable) {
    if (k.id == id) return k;
  }
  throw std::logic_error("unknown kernel id");
}

std::string describe(const ComplexPoint& z) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < z.dim(); ++i) {
    if (i) os << ", ";
    os << z[i].real() << (z[i].imag() < 0 ? "-" : "+") << std::abs(z[i].imag()) << 'i';
  }
  os << ')';
  return os.str();
}

void require_inside(Domain d, const ComplexPoint& z, std::string_view what) {
  if (!d.contains(z)) {
    throw DomainError(std::string(what) + " " + describe(z) + " is not in the open " + std::string(d.name()));
  }
}

void require_closed_ball(Domain d, const ComplexPoint& w) {
  if (w.dim() != d.dim() || w.norm() > 1.0 + kBoundarySlack) {
    throw DomainError("second argument " + describe(w) + " lies outside the closed " + std::string(d.name()));
  }
}

void require_on_boundary(Domain d, const ComplexPoint& w) {
  if (!d.on_boundary(w, kOnBoundaryTol)) {
    throw DomainError("second argument " + describe(w) + " is not on the boundary of the " +
                      std::string(d.name()));
  }
}

// 1 - z . conj(w) and 1 - |z|^2 lose most of their digits near the boundary diagonal;
// the products are accumulated in extended precision.
cplx one_minus_dot(const ComplexPoint& z, const ComplexPoint& w) {
  long double re = 1.0L, im = 0.0L;
  for (std::size_t j = 0; j < z.dim(); ++j) {
    const long double x = z[j].real(), y = z[j].imag(), a = w[j].real(), b = w[j].imag();
    re -= x * a + y * b;
    im -= y * a - x * b;
  }
  return {static_cast<double>(re), static_cast<double>(im)};
}

double one_minus_norm2(const ComplexPoint& z) {
  long double acc = 1.0L;
  for (std::size_t j = 0; j < z.dim(); ++j) {
    const long double x = z[j].real(), y = z[j].imag();
    acc -= x * x + y * y;
  }
  return static_cast<double>(acc);
}

cplx guard(cplx base, std::string_view what) {
  if (std::abs(base) < kPoleGuard) throw PoleError(std::string("evaluation at the singularity of ") + std::string(what));
  return base;
}

}  // namespace

Kernel::Kernel(std::string name, Domain domain, KernelKind kind, Provenance provenance, Evaluator evaluate)
    : name_(std::move(name)), domain_(domain), kind_(kind), provenance_(provenance), evaluate_(std::move(evaluate)) {
  if (!evaluate_) throw std::invalid_argument("Kernel: empty evaluator");
}

std::string_view to_string(KernelId id) noexcept { return info(id).name; }

std::optional<KernelId> parse_kernel_id(std::string_view text) {
  for (const auto& k : kKernelTable) {
    if (k.name == text) return k.id;
  }
  return std::nullopt;
}

const std::vector<KernelId>& all_kernel_ids() {
  static const std::vector<KernelId> ids = [] {
    std::vector<KernelId> v;
    for (const auto& k : kKernelTable) v.push_back(k.id);
    return v;
  }();
  return ids;
}

Domain domain_of(KernelId id) noexcept { return Domain(info(id).domain); }
KernelKind kind_of(KernelId id) noexcept { return info(id).kind; }

cplx eval_closed_form(KernelId id, const ComplexPoint& z, const ComplexPoint& zeta) {
  const Domain d = domain_of(id);
  const std::string_view name = to_string(id);
  require_inside(d, z, "first argument");

  switch (id) {
    case KernelId::BergmanDisc: {
      require_inside(d, zeta, "second argument");
      const cplx b = guard(one_minus_dot(z, zeta), name);
      return 1.0 / (kPi * b * b);
    }
    case KernelId::SzegoDisc: {
      require_closed_ball(d, zeta);
      const cplx b = guard(one_minus_dot(z, zeta), name);
      return 1.0 / (2.0 * kPi * b);
    }
    case KernelId::PoissonSzegoDisc: {
      require_on_boundary(d, zeta);
      const cplx b = guard(one_minus_dot(z, zeta), name);
      return one_minus_norm2(z) / (2.0 * kPi * std::norm(b));
    }
    case KernelId::BergmanHalfPlane: {
      require_inside(d, zeta, "second argument");
      const cplx b = guard(std::conj(zeta[0]) - z[0], name);
      return -1.0 / (kPi * b * b);
    }
    case KernelId::BergmanQuarterPlane: {
      require_inside(d, zeta, "second argument");
      const cplx wbar = std::conj(zeta[0]);
      const cplx b = guard(wbar * wbar - z[0] * z[0], name);
      return -(4.0 * z[0] * wbar) / (kPi * b * b);
    }
    case KernelId::BergmanBall2: {
      require_inside(d, zeta, "second argument");
      const cplx b = guard(one_minus_dot(z, zeta), name);
      return 2.0 / (kPi * kPi * b * b * b);
    }
    case KernelId::SzegoBall2: {
      require_closed_ball(d, zeta);
      const cplx b = guard(one_minus_dot(z, zeta), name);
      return 1.0 / (2.0 * kPi * kPi * b * b);
    }
    case KernelId::PoissonSzegoBall2: {
      require_on_boundary(d, zeta);
      const cplx b = guard(one_minus_dot(z, zeta), name);
      const double t = one_minus_norm2(z);
      const double nb = std::norm(b);
      return t * t / (2.0 * kPi * kPi * nb * nb);
    }
    case KernelId::BergmanAnnulusApprox: return annulus_kernel_approx(z, zeta);
  }
  throw std::logic_error("unknown kernel id");
}

Kernel closed_form_kernel(KernelId id) {
  return Kernel(std::string(to_string(id)), domain_of(id), kind_of(id), Provenance::ClosedForm,
                [id](const ComplexPoint& z, const ComplexPoint& w) { return eval_closed_form(id, z, w); });
}

Kernel series_kernel(const SeriesKernel& series) {
  const Domain d = series.system().domain();
  return Kernel("series", d, series.kind(), Provenance::Series,
                [series, d](const ComplexPoint& z, const ComplexPoint& w) {
                  require_inside(d, z, "first argument");
                  if (series.kind() == KernelKind::Bergman) require_inside(d, w, "second argument");
                  return series(z, w);
                });
}

double poisson_szego_from(const Kernel& szego, const ComplexPoint& z, const ComplexPoint& zeta) {
  if (szego.kind() != KernelKind::Szego) throw std::invalid_argument("poisson_szego_from: kernel is not a Szego kernel");
  const cplx diag = szego(z, z);
  if (!(diag.real() > 0.0)) throw InvariantError("poisson_szego_from: S(z,z) is not positive");
  return std::norm(szego(z, zeta)) / diag.real();
}

namespace {

cplx annulus_lambda(const ComplexPoint& z, const ComplexPoint& zeta) {
  const Domain a = Domain::annulus();
  require_inside(a, z, "first argument");
  require_inside(a, zeta, "second argument");
  return z[0] * std::conj(zeta[0]);
}

}  // namespace

cplx annulus_I1(const ComplexPoint& z, const ComplexPoint& zeta) {
  const cplx b = guard(1.0 - annulus_lambda(z, zeta), "annulus I1");
  return 1.0 / (kPi * b * b);
}

cplx annulus_III1(const ComplexPoint& z, const ComplexPoint& zeta) {
  const cplx b = guard(4.0 - annulus_lambda(z, zeta), "annulus III1");
  return 4.0 / (kPi * b * b);
}

cplx annulus_kernel_approx(const ComplexPoint& z, const ComplexPoint& zeta) {
  return annulus_III1(z, zeta) + annulus_I1(z, zeta);
}

AnnulusErrorTerms annulus_error_terms(const ComplexPoint& z, const ComplexPoint& zeta, double tail_tol) {
  const cplx lambda = annulus_lambda(z, zeta);
  const double mod = std::abs(lambda);
  AnnulusErrorTerms out{};
  out.II = 1.0 / (2.0 * kPi * std::log(2.0) * lambda);

  // I2: j = -m, m >= 2. |term_m| <= (4/3)(m-1)/pi 4^{1-m} |lambda|^{-m}.
  {
    const cplx inv = 1.0 / lambda;
    cplx power = inv;  // lambda^{-m}
    for (int m = 2;; ++m) {
      power *= inv;
      const double q = std::pow(4.0, 1.0 - m);
      const double coef = ((m - 1.0) / kPi) * q / (1.0 - q);
      out.I2 += coef * power;
      const double ratio = (m + 1.0) / m / (4.0 * mod);
      const double next = (4.0 / 3.0) * (m / kPi) * std::pow(4.0, -m) * std::pow(mod, -(m + 1.0));
      if (ratio < 1.0 && next / (1.0 - ratio) <= tail_tol) break;
      if (m > 100000) throw std::runtime_error("annulus_error_terms: I2 did not converge");
    }
  }
  // III2: term_j = (j+1) / (16 pi (1 - 4^{-j-1})) (lambda/16)^j.
  {
    const cplx w = lambda / 16.0;
    cplx power = 1.0;
    for (int j = 0;; ++j) {
      const double coef = (j + 1.0) / (16.0 * kPi * (1.0 - std::pow(4.0, -(j + 1.0))));
      out.III2 += coef * power;
      power *= w;
      const double ratio = (j + 3.0) / (j + 2.0) * mod / 16.0;
      const double next = (4.0 / 3.0) * (j + 2.0) / (16.0 * kPi) * std::pow(mod / 16.0, j + 1.0);
      if (ratio < 1.0 && next / (1.0 - ratio) <= tail_tol) break;
      if (j > 100000) throw std::runtime_error("annulus_error_terms: III2 did not converge");
    }
  }
  return out;
}

ExtremalResult extremal_value(const OrthonormalSystem& system, const ComplexPoint& z) {
  require_inside(system.domain(), z, "point");
  const auto values = system.evaluate_all(z);
  ExtremalResult r;
  for (const cplx& v : values) r.value += std::norm(v);
  r.coefficients.assign(values.size(), cplx{});
  if (r.value > 0.0) {
    const double scale = 1.0 / std::sqrt(r.value);
    for (std::size_t k = 0; k < values.size(); ++k) r.coefficients[k] = std::conj(values[k]) * scale;
  }
  return r;
}

std::vector<double> default_blowup_deltas() {
  std::vector<double> d;
  for (int k = 6; k <= 13; ++k) d.push_back(std::ldexp(1.0, -k));
  return d;
}

BlowupReport blowup_probe(const Kernel& kernel, const std::function<ComplexPoint(double)>& path,
                          const std::vector<double>& deltas) {
  if (deltas.size() < 2) throw std::invalid_argument("blowup_probe: need at least two deltas");
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    if (!(deltas[i] > 0.0) || (i > 0 && !(deltas[i] < deltas[i - 1]))) {
      throw std::invalid_argument("blowup_probe: deltas must be positive and strictly decreasing");
    }
  }
  BlowupReport report;
  report.deltas = deltas;
  for (double delta : deltas) {
    const ComplexPoint p = path(delta);
    if (!kernel.domain().contains(p)) {
      std::ostringstream os;
      os << "blowup_probe: sample at delta=" << delta << " is outside the " << kernel.domain().name();
      throw DomainError(os.str());
    }
    const double v = std::abs(kernel(p, p));
    if (!std::isfinite(v) || !(v > 0.0)) {
      std::ostringstream os;
      os << "blowup_probe: |K| is not finite and positive at delta=" << delta;
      throw InvariantError(os.str());
    }
    report.values.push_back(v);
  }
  // Ordinary least squares of log|K| against log(1/delta).
  const double n = static_cast<double>(deltas.size());
  double sx = 0, sy = 0;
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    sx += -std::log(deltas[i]);
    sy += std::log(report.values[i]);
  }
  const double mx = sx / n, my = sy / n;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    const double dx = -std::log(deltas[i]) - mx;
    sxx += dx * dx;
    sxy += dx * (std::log(report.values[i]) - my);
  }
  report.fitted_exponent = sxy / sxx;
  report.fitted_constant = std::exp(my - report.fitted_exponent * mx);
  return report;
}

double poisson_szego_offdiagonal_sup(double radius, double eps) {
  if (!(radius >= 0.0 && radius < 1.0)) throw DomainError("poisson_szego_offdiagonal_sup: radius must lie in [0, 1)");
  if (!(eps > 0.0)) throw std::invalid_argument("poisson_szego_offdiagonal_sup: eps must be positive");
  const double c = 1.0 / (2.0 * kPi * kPi);
  const double s = 1.0 - radius * radius;
  if (radius == 0.0) return eps <= std::sqrt(2.0) ? c : 0.0;
  // |z - zeta| >= eps  <=>  Re zeta_1 <= (1 + r^2 - eps^2) / (2r); P grows with Re zeta_1 on the real axis.
  const double t = (1.0 + radius * radius - eps * eps) / (2.0 * radius);
  if (t < -1.0) return 0.0;
  const double d = 1.0 - radius * std::min(1.0, t);
  return c * s * s / (d * d * d * d);
}

}  // namespace bergkern
