#include "bergkern/verify.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <iomanip>
#include <limits>
#include <memory>
#include <random>
#include <sstream>
#include <stdexcept>

#include "bergkern/ballgeom.hpp"
#include "bergkern/basis.hpp"
#include "bergkern/catalog.hpp"
#include "bergkern/projections.hpp"
#include "bergkern/transport.hpp"

namespace bergkern {

std::string format_tolerance(double tol) {
  if (tol > 0.0) {
    const double e = std::round(std::log10(tol));
    if (std::abs(tol - std::pow(10.0, e)) <= 1e-15 * tol && e < -2) {
      return "1e" + std::to_string(static_cast<int>(e));
    }
  }
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof buf, tol);
  return std::string(buf, res.ptr);
}

std::string CheckResult::line() const {
  std::ostringstream out;
  out << name << ' ' << criterion << ": " << (pass ? "PASS" : "FAIL") << " (measured " << std::setprecision(4)
      << measured;
  if (!note.empty()) out << "; " << note;
  out << ')';
  return out.str();
}

CheckResult check_at_most(std::string name, double measured, double tolerance, std::string note) {
  return {std::move(name), "≤ " + format_tolerance(tolerance), measured, measured <= tolerance, std::move(note)};
}

CheckResult check_greater(std::string name, double measured, double bound, std::string note) {
  return {std::move(name), "> " + format_tolerance(bound), measured, measured > bound, std::move(note)};
}

CheckResult check_in_band(std::string name, double measured, double lo, double hi, std::string note) {
  return {std::move(name), "in [" + format_tolerance(lo) + ", " + format_tolerance(hi) + "]", measured,
          measured >= lo && measured <= hi, std::move(note)};
}

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"disc", "annulus", "transport", "projections", "ball"};
  return names;
}

std::vector<SuiteReport> run_suite(std::string_view name) {
  if (name == "disc") return {verify_disc()};
  if (name == "annulus") return {verify_annulus()};
  if (name == "transport") return {verify_transport()};
  if (name == "projections") return {verify_projections()};
  if (name == "ball") return {verify_ball()};
  if (name == "all") {
    return {verify_disc(), verify_annulus(), verify_transport(), verify_projections(), verify_ball()};
  }
  throw std::invalid_argument("unknown suite: " + std::string(name));
}

namespace {

using Rng = std::mt19937_64;
constexpr std::uint64_t kSeed = 20240611;
constexpr double kInf = std::numeric_limits<double>::infinity();

double uniform(Rng& rng, double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng); }

double rel_err(cplx a, cplx b) { return std::abs(a - b) / std::abs(b); }

std::string fixed(double v, int digits = 4) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(digits) << v;
  return out.str();
}

// 21 points on a golden-angle spiral with radii 0, 0.045, ..., 0.9.
std::vector<cplx> disc_spiral(double rmax, int count = 21) {
  std::vector<cplx> pts;
  for (int a = 0; a < count; ++a) pts.push_back(std::polar(rmax * a / (count - 1), 2.399963229728653 * a));
  return pts;
}

ComplexPoint random_ball_point(Rng& rng, double rmax) {
  std::normal_distribution<double> g;
  double v[4];
  double n2 = 0.0;
  for (double& x : v) {
    x = g(rng);
    n2 += x * x;
  }
  const double r = uniform(rng, 0.0, rmax) / std::sqrt(n2);
  return ComplexPoint(cplx(r * v[0], r * v[1]), cplx(r * v[2], r * v[3]));
}

ComplexPoint random_sphere_point(Rng& rng) {
  const double s = uniform(rng, 0.0, kPi / 2);
  return ComplexPoint(std::polar(std::cos(s), uniform(rng, 0.0, 2 * kPi)),
                      std::polar(std::sin(s), uniform(rng, 0.0, 2 * kPi)));
}

// |z| in {0, 0.2, ..., 0.8} times 8 fixed unit directions in C^2.
std::vector<ComplexPoint> ball_grid() {
  std::vector<ComplexPoint> pts;
  for (int ri = 0; ri <= 4; ++ri) {
    const double r = 0.2 * ri;
    for (int m = 0; m < 8; ++m) {
      const double a = (kPi / 2) * m / 7.0;
      pts.emplace_back(std::polar(r * std::cos(a), 0.7 * m), std::polar(r * std::sin(a), 1.3 * m));
    }
  }
  return pts;
}

}  // namespace

SuiteReport verify_disc() {
  SuiteReport report{"disc", {}};
  const auto bergman = assemble_series_kernel(disc_bergman_basis(200), KernelKind::Bergman);
  const auto pts = disc_spiral(0.9);
  double worst = 0.0;
  for (cplx z : pts) {
    for (cplx w : pts) worst = std::max(worst, rel_err(bergman(z, w), eval_closed_form(KernelId::BergmanDisc, z, w)));
  }
  report.checks.push_back(check_at_most("series-vs-closed-form N=200", worst, 1e-12, "21x21 pairs, rel"));

  const auto szego = assemble_series_kernel(disc_hardy_basis(200), KernelKind::Szego);
  worst = 0.0;
  for (cplx z : pts) {
    for (int k = 0; k < 21; ++k) {
      const cplx w = std::polar(1.0, 2 * kPi * k / 21.0);
      worst = std::max(worst, rel_err(szego(z, w), eval_closed_form(KernelId::SzegoDisc, z, w)));
    }
  }
  report.checks.push_back(check_at_most("szego-series N=200", worst, 1e-12,
                                        "|z| <= 0.9, |zeta| = 1, rel; the omitted tail is exactly |z conj(zeta)|^200"));
  worst = 0.0;
  for (cplx z : disc_spiral(0.85)) {
    for (int k = 0; k < 21; ++k) {
      const cplx w = std::polar(1.0, 2 * kPi * k / 21.0);
      worst = std::max(worst, rel_err(szego(z, w), eval_closed_form(KernelId::SzegoDisc, z, w)));
    }
  }
  report.checks.push_back(check_at_most("szego-series N=200, |z| <= 0.85", worst, 1e-12, "|zeta| = 1, rel"));

  Rng rng(kSeed);
  const Kernel s = closed_form_kernel(KernelId::SzegoDisc);
  worst = 0.0;
  for (int n = 0; n < 500; ++n) {
    const double r = uniform(rng, 0.0, 0.99), th = uniform(rng, 0.0, 2 * kPi), ps = uniform(rng, 0.0, 2 * kPi);
    const long double rr = r;
    const double classical = static_cast<double>(
        (1.0L - rr * rr) / (2.0L * kPi * (1.0L - 2.0L * rr * std::cos(static_cast<long double>(th) - ps) + rr * rr)));
    const double from_s = poisson_szego_from(s, std::polar(r, th), std::polar(1.0, ps));
    worst = std::max(worst, std::abs(from_s - classical) / classical);
  }
  report.checks.push_back(check_at_most("poisson-szego = poisson (polar identity)", worst, 1e-14, "500 samples, rel"));

  const auto system = std::make_shared<const OrthonormalSystem>(disc_bergman_basis(50));
  const SeriesKernel series50(system, KernelKind::Bergman);
  const ComplexPoint z0(0.4, 0.3);
  const ExtremalResult ext = extremal_value(*system, z0);
  report.checks.push_back(check_at_most("extremal value vs series K(z,z)",
                                        std::abs(ext.value - series50.diagonal(z0)) / ext.value, 1e-14, "N=50, rel"));
  const std::vector<cplx> phi = system->evaluate_all(z0);
  double excess = -1.0;
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<cplx> a(phi.size());
    double n2 = 0.0;
    for (cplx& c : a) {
      c = cplx(g(rng), g(rng));
      n2 += std::norm(c);
    }
    cplx f = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) f += a[k] / std::sqrt(n2) * phi[k];
    excess = std::max(excess, std::norm(f) - ext.value);
  }
  report.checks.push_back(check_at_most("random competitors above extremal value", excess, 1e-12, "1000 unit vectors"));

  const Kernel kd = closed_form_kernel(KernelId::BergmanDisc);
  const BlowupReport b = blowup_probe(kd, [](double d) { return ComplexPoint(1.0 - d, 0.0); }, default_blowup_deltas());
  report.checks.push_back(check_at_most("disc radial blowup |exponent - 2|", std::abs(b.fitted_exponent - 2.0), 0.02,
                                        "fitted " + fixed(b.fitted_exponent)));
  const double delta = std::ldexp(1.0, -10);
  const double c = kd(ComplexPoint(1.0 - delta, 0.0), ComplexPoint(1.0 - delta, 0.0)).real() * delta * delta;
  report.checks.push_back(check_at_most("disc constant K delta^2 vs 1/(4 pi) rel", std::abs(c * 4 * kPi - 1.0), 0.05,
                                        "delta = 2^-10"));
  return report;
}

SuiteReport verify_annulus() {
  SuiteReport report{"annulus", {}};
  const std::vector<std::pair<cplx, cplx>> pairs{{1.3, std::polar(1.6, 0.5)},
                                                 {1.5, 1.5},
                                                 {std::polar(1.1, 1.0), std::polar(1.9, -2.0)},
                                                 {1.95, std::polar(1.95, 0.3)},
                                                 {std::polar(1.02, 2.0), std::polar(1.01, 2.1)}};
  std::vector<cplx> grid;
  for (double r : {1.01, 1.2, 1.4, 1.6, 1.8, 1.99}) {
    for (int k = 0; k < 8; ++k) grid.push_back(std::polar(r, 2 * kPi * k / 8.0 + 0.1));
  }
  std::size_t order = annulus_truncation_order(cplx(1.99), cplx(1.99));
  for (const auto& [z, w] : pairs) order = std::max(order, annulus_truncation_order(z, w));
  const auto series = assemble_series_kernel(annulus_bergman_basis(order), KernelKind::Bergman);

  double worst = 0.0;
  for (const auto& [z, w] : pairs) {
    const AnnulusErrorTerms e = annulus_error_terms(z, w);
    const cplx decomposition = annulus_I1(z, w) + e.I2 + e.II + annulus_III1(z, w) + e.III2;
    worst = std::max(worst, std::abs(series(z, w) - decomposition));
  }
  report.checks.push_back(
      check_at_most("annulus series vs I1+I2+II+III1+III2", worst, 1e-9, "N = " + std::to_string(order)));

  worst = 0.0;
  for (double angle : {0.0, 1.0, 2.5, -2.0}) {
    const cplx z = std::polar(1.99, angle);
    const cplx s = series(z, z);
    worst = std::max(worst, std::abs(s - annulus_kernel_approx(z, z)) / std::abs(s));
  }
  report.checks.push_back(check_at_most("annulus |z| = 1.99 two-term approximation rel", worst, 0.01));

  worst = 0.0;
  for (cplx z : grid) {
    for (cplx w : grid) worst = std::max(worst, std::abs(series(z, w) - annulus_kernel_approx(z, w)));
  }
  report.checks.push_back(check_at_most("annulus global grid two-term approximation abs", worst, 0.5, "48x48 pairs"));
  return report;
}

SuiteReport verify_transport() {
  SuiteReport report{"transport", {}};
  Rng rng(kSeed + 1);
  auto random_u = [&] { return ComplexPoint(uniform(rng, -2.0, 2.0), uniform(rng, 0.05, 2.0)); };
  auto random_q = [&] { return ComplexPoint(std::polar(uniform(rng, 0.2, 1.5), uniform(rng, 0.05, kPi / 2 - 0.05))); };
  auto random_d = [&] { return ComplexPoint(std::polar(uniform(rng, 0.0, 0.9), uniform(rng, 0.0, 2 * kPi))); };
  auto random_a = [&] { return ComplexPoint(std::polar(uniform(rng, 1.05, 1.95), uniform(rng, 0.0, 2 * kPi))); };

  auto compare = [&](const Kernel& lhs, KernelId rhs, auto sampler) {
    double worst = 0.0;
    for (int n = 0; n < 200; ++n) {
      const ComplexPoint z = sampler(), w = sampler();
      worst = std::max(worst, rel_err(lhs(z, w), eval_closed_form(rhs, z, w)));
    }
    return worst;
  };
  const Kernel disc = closed_form_kernel(KernelId::BergmanDisc);
  report.checks.push_back(check_at_most("cayley pullback vs bergman-halfplane rel",
                                        compare(pullback_kernel(cayley(), disc), KernelId::BergmanHalfPlane, random_u),
                                        1e-12, "200 pairs"));
  report.checks.push_back(check_at_most(
      "square pullback vs bergman-quarterplane rel",
      compare(pullback_kernel(square(), closed_form_kernel(KernelId::BergmanHalfPlane)), KernelId::BergmanQuarterPlane,
              random_q),
      1e-12, "200 pairs"));
  report.checks.push_back(check_at_most("mobius(0.4) pullback vs bergman-disc rel",
                                        compare(pullback_kernel(mobius(0.4), disc), KernelId::BergmanDisc, random_d),
                                        1e-12, "200 pairs"));

  Eigen::Matrix2cd rot;
  rot << std::cos(0.3), -std::sin(0.3), std::sin(0.3), std::cos(0.3);
  double worst = 0.0;
  const std::vector<std::pair<ConformalMap, std::function<ComplexPoint()>>> maps{
      {cayley(), random_u},
      {square(), random_q},
      {mobius(0.4), random_d},
      {inversion(), random_a},
      {unitary2(rot), [&] { return random_ball_point(rng, 0.9); }}};
  for (const auto& [map, sampler] : maps) {
    for (int n = 0; n < 40; ++n) {
      const JacobianPair j = real_jacobian_det(map, sampler());
      worst = std::max(worst, std::abs(j.real_det - std::norm(j.complex_det)) / std::norm(j.complex_det));
    }
  }
  report.checks.push_back(check_at_most("real_det vs |complex_det|^2 rel", worst, 1e-6, "200 points, 5 maps"));

  Eigen::Matrix2cd diag = Eigen::Matrix2cd::Zero();
  diag(0, 0) = std::polar(1.0, 0.7);
  diag(1, 1) = std::polar(1.0, -0.7);
  worst = 0.0;
  for (int n = 0; n < 100; ++n) {
    const ComplexPoint z = random_ball_point(rng, 0.7), w = random_ball_point(rng, 0.7);
    worst = std::max({worst, unitary_invariance_check(diag, z, w), unitary_invariance_check(rot, z, w)});
  }
  report.checks.push_back(check_at_most("ball unitary invariance", worst, 1e-13, "100 pairs"));

  const BlowupReport half = blowup_probe(closed_form_kernel(KernelId::BergmanHalfPlane),
                                         [](double d) { return ComplexPoint(0.3, d); }, default_blowup_deltas());
  report.checks.push_back(check_at_most("halfplane vertical blowup |exponent - 2|", std::abs(half.fitted_exponent - 2.0),
                                        0.02, "fitted " + fixed(half.fitted_exponent)));
  const BlowupReport corner =
      blowup_probe(closed_form_kernel(KernelId::BergmanQuarterPlane),
                   [](double s) { return ComplexPoint(s / std::sqrt(2.0), s / std::sqrt(2.0)); }, default_blowup_deltas());
  report.checks.push_back(check_at_most("quarterplane corner blowup |exponent - 4|",
                                        std::abs(corner.fitted_exponent - 4.0), 0.05,
                                        "fitted " + fixed(corner.fitted_exponent) +
                                            " in 1/dist(z, 0); K = 1/(pi s^2) on the diagonal ray"));

  worst = 0.0;
  for (double d : {1.0, 0.5, 0.1, 1e-3}) {
    const ComplexPoint z(d, d);
    const double expected = 1.0 / (2 * kPi * d * d);
    worst = std::max(worst, rel_err(eval_closed_form(KernelId::BergmanQuarterPlane, z, z), expected));
  }
  report.checks.push_back(check_at_most("quarterplane diagonal = 1/(2 pi delta^2) rel", worst, 1e-14,
                                        "the printed variant 2/(pi i delta^2) is non-real on the diagonal and is "
                                        "not reproduced"));
  return report;
}

SuiteReport verify_projections() {
  SuiteReport report{"projections", {}};
  const QuadratureRule area = make_area_quadrature(Domain::disc(), 32, 128);
  const QuadratureRule circle = make_boundary_quadrature(Domain::disc(), 512);
  const auto pts = disc_spiral(0.85, 10);

  auto cubic = [](const ComplexPoint& w) { return w[0] * w[0] * w[0] + 2.0 * w[0]; };
  double worst = 0.0;
  for (cplx z : pts) worst = std::max(worst, std::abs(bergman_project(cubic, z, area).value - cubic(z)));
  report.checks.push_back(check_at_most("bergman reproduces z^3 + 2z", worst, 1e-8, "32x128 rule, 10 points"));

  const BoundaryFunction poly{[](const ComplexPoint& w) { return w[0] * w[0] * w[0] - 2.0 * w[0] + cplx(0.5, 0.25); },
                              "z^3 - 2z + 0.5 + 0.25i"};
  double szego_worst = 0.0, ps_worst = 0.0;
  for (cplx z : pts) {
    szego_worst = std::max(szego_worst, std::abs(szego_project(poly, z, circle).value - poly.eval(z)));
    ps_worst = std::max(ps_worst, std::abs(poisson_szego_extend(poly, z, circle).value - poly.eval(z)));
  }
  report.checks.push_back(check_at_most("szego reproduces boundary polynomial", szego_worst, 1e-10, "512 nodes"));
  report.checks.push_back(check_at_most("poisson-szego reproduces boundary polynomial", ps_worst, 1e-10, "512 nodes"));

  const ComplexPoint z(0.3, 0.1);
  report.checks.push_back(check_at_most(
      "S(conj zeta) = 0",
      std::abs(szego_project({[](const ComplexPoint& w) { return std::conj(w[0]); }, "conj"}, z, circle).value),
      1e-10));
  report.checks.push_back(check_at_most(
      "S(1) = 1",
      std::abs(szego_project({[](const ComplexPoint&) { return cplx(1.0); }, "one"}, ComplexPoint(0.5, 0.0), circle)
                   .value -
               1.0),
      1e-10));
  const ComplexPoint z2(0.2, -0.4);
  report.checks.push_back(check_at_most(
      "S(zeta) = z", std::abs(szego_project({[](const ComplexPoint& w) { return w[0]; }, "id"}, z2, circle).value - z2[0]),
      1e-10));

  const QuadratureRule fine = make_area_quadrature(Domain::disc(), 8, 1024);
  report.checks.push_back(check_at_most(
      "bergman idempotence, f = conj(z) + z^2",
      idempotence_check([](const ComplexPoint& w) { return std::conj(w[0]) + w[0] * w[0]; }, fine), 1e-8,
      "8x1024 rule"));
  return report;
}

SuiteReport verify_ball() {
  SuiteReport report{"ball", {}};
  const auto grid = ball_grid();
  report.checks.push_back(check_at_most(
      "g(0) = 3I", (bergman_metric(ComplexPoint(cplx(0), cplx(0))).g - 3.0 * Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff(),
      0.0));

  double det_err = 0.0, inv_err = 0.0, div = 0.0, fd = 0.0, min_eig = kInf;
  for (const ComplexPoint& z : grid) {
    const HermitianMetric2 g = bergman_metric(z);
    const InverseMetric inv = inverse_metric(z);
    const double s = 1.0 - z.norm2();
    det_err = std::max({det_err, std::abs(g.g.determinant().real() * s * s * s / 9.0 - 1.0),
                        std::abs(inv.det * s * s * s / 9.0 - 1.0)});
    inv_err = std::max(inv_err, (g.g * inv.inverse.g - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff());
    div = std::max(div, divergence_residual(z));
    fd = std::max(fd, metric_fd_deviation(z));
    min_eig = std::min(min_eig, g.min_eigenvalue());
  }
  report.checks.push_back(check_at_most("det g = 9/(1-|z|^2)^3 rel", det_err, 1e-12, "40-point grid"));
  report.checks.push_back(check_at_most("g g^-1 = I", inv_err, 1e-12));
  report.checks.push_back(check_at_most("divergence residual", div, 1e-5, "h = 1e-4"));
  report.checks.push_back(check_at_most("FD metric vs closed form", fd, 1e-5, "h = 1e-3"));
  report.checks.push_back(check_greater("metric min eigenvalue", min_eig, 0.0));

  Rng rng(kSeed + 2);
  double worst = 0.0, ratio_lo = kInf, ratio_hi = 0.0;
  for (int n = 0; n < 50; ++n) {
    const ComplexPoint z = random_ball_point(rng, 0.6), zeta = random_sphere_point(rng);
    const double r1 = annihilation_check(zeta, z, 1e-3);
    const double r2 = annihilation_check(zeta, z, 5e-4);
    worst = std::max(worst, r1);
    ratio_lo = std::min(ratio_lo, r1 / r2);
    ratio_hi = std::max(ratio_hi, r1 / r2);
  }
  report.checks.push_back(check_at_most("LP-annihilation rel", worst, 1e-3, "50 configurations, h = 1e-3"));
  report.checks.push_back(check_in_band("LP-annihilation halving ratio min", ratio_lo, 3.5, 4.5));
  report.checks.push_back(check_in_band("LP-annihilation halving ratio max", ratio_hi, 3.5, 4.5));

  const QuadratureRule sphere = make_boundary_quadrature(Domain::ball2(), 96);
  double mass_err = 0.0, min_p = kInf;
  for (int n = 0; n < 20; ++n) {
    const ComplexPoint z = random_ball_point(rng, 0.8);
    const cplx mass = integrate(sphere, [&](const ComplexPoint& zeta) {
      const cplx p = eval_closed_form(KernelId::PoissonSzegoBall2, z, zeta);
      min_p = std::min(min_p, p.real());
      return p;
    });
    mass_err = std::max(mass_err, std::abs(mass - 1.0));
  }
  report.checks.push_back(check_at_most("integral of P(z, .) over S^3 = 1", mass_err, 1e-6, "20 points, |z| <= 0.8"));
  report.checks.push_back(check_greater("P(z, zeta) minimum over samples", min_p, 0.0));

  std::vector<double> sups;
  for (int k = 1; k <= 10; ++k) sups.push_back(poisson_szego_offdiagonal_sup(1.0 - std::ldexp(1.0, -k), 0.5));
  auto max_ratio = [&sups](std::size_t from) {
    double m = 0.0;
    for (std::size_t k = from + 1; k < sups.size(); ++k) m = std::max(m, sups[k] / sups[k - 1]);
    return m;
  };
  report.checks.push_back(check_at_most("off-diagonal sup ratio along |z| = 1 - 2^-k, k = 1..10", max_ratio(0), 1.0,
                                        "eps = 0.5; the sup peaks at |z|^2 = 3/4 (k = 2..3)"));
  report.checks.push_back(check_at_most("off-diagonal sup ratio along |z| = 1 - 2^-k, k = 3..10", max_ratio(2), 1.0,
                                        "sup at k = 10: " + fixed(sups.back(), 8)));

  const ComplexPoint origin(cplx(0), cplx(0));
  report.checks.push_back(check_at_most(
      "L |z|^2 at 0 vs 8/3",
      std::abs(invariant_laplacian([](const ComplexPoint& w) { return cplx(w.norm2()); }, origin) - 8.0 / 3.0), 1e-6));
  double plurih = 0.0;
  for (int a = 0; a <= 3; ++a) {
    for (int b = 0; a + b <= 3; ++b) {
      auto u = [a, b](const ComplexPoint& w) { return cplx((std::pow(w[0], a) * std::pow(w[1], b)).real()); };
      for (const ComplexPoint& z : grid) {
        if (z.norm() > 0.7) continue;
        plurih = std::max(plurih, std::abs(invariant_laplacian(u, z)));
      }
    }
  }
  report.checks.push_back(check_at_most("L Re(z1^a z2^b), a+b <= 3", plurih, 1e-5));

  const QuadratureRule sphere32 = make_boundary_quadrature(Domain::ball2(), 32);
  const BoundaryFunction prod{[](const ComplexPoint& w) { return w[0] * w[1]; }, "z1 z2"};
  report.checks.push_back(check_at_most(
      "poisson-szego ball reproduces z1 z2",
      std::abs(poisson_szego_extend(prod, ComplexPoint(cplx(0.3), cplx(0, 0.2)), sphere32).value - cplx(0, 0.06)),
      1e-6));

  const DefiningFunction rho = ball2_defining_function();
  double levi_min = kInf;
  for (int n = 0; n < 100; ++n) {
    const ComplexPoint p = random_sphere_point(rng);
    const cplx t(uniform(rng, -1, 1), uniform(rng, -1, 1));
    const ComplexPoint w(-t * std::conj(p[1]), t * std::conj(p[0]));
    levi_min = std::min(levi_min, levi_form(rho, p, w));
  }
  report.checks.push_back(check_at_most(
      "levi form at (1,0) on (0,2i) vs 4",
      std::abs(levi_form(rho, ComplexPoint(cplx(1), cplx(0)), ComplexPoint(cplx(0), cplx(0, 2))) - 4.0), 1e-15));
  report.checks.push_back(check_greater("levi form minimum over tangent samples", levi_min, 0.0, "100 samples"));
  return report;
}

}  // namespace bergkern
