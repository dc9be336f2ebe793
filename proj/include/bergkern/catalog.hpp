#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bergkern/basis.hpp"
#include "bergkern/core.hpp"

namespace bergkern {

enum class Provenance { ClosedForm, Series, Transported };

/// An evaluatable two-point kernel K(z, zeta) tagged with its domain, kind and origin.
class Kernel {
 public:
  using Evaluator = std::function<cplx(const ComplexPoint&, const ComplexPoint&)>;

  Kernel(std::string name, Domain domain, KernelKind kind, Provenance provenance, Evaluator evaluate);

  const std::string& name() const noexcept { return name_; }
  Domain domain() const noexcept { return domain_; }
  KernelKind kind() const noexcept { return kind_; }
  Provenance provenance() const noexcept { return provenance_; }

  cplx operator()(const ComplexPoint& z, const ComplexPoint& zeta) const { return evaluate_(z, zeta); }

 private:
  std::string name_;
  Domain domain_;
  KernelKind kind_;
  Provenance provenance_;
  Evaluator evaluate_;
};

enum class KernelId {
  BergmanDisc,
  SzegoDisc,
  PoissonSzegoDisc,
  BergmanHalfPlane,
  BergmanQuarterPlane,
  BergmanBall2,
  SzegoBall2,
  PoissonSzegoBall2,
  BergmanAnnulusApprox,
};

std::string_view to_string(KernelId id) noexcept;
std::optional<KernelId> parse_kernel_id(std::string_view text);
const std::vector<KernelId>& all_kernel_ids();
Domain domain_of(KernelId id) noexcept;
KernelKind kind_of(KernelId id) noexcept;

/// Evaluations closer than this to a kernel singularity raise PoleError.
inline constexpr double kPoleGuard = 1e-13;

/// Closed-form kernels:
///   bergman-disc          (1/pi) (1 - z conj(w))^{-2}
///   szego-disc            (1/2pi) (1 - z conj(w))^{-1}
///   poisson-szego-disc    (1/2pi) (1 - |z|^2) / |1 - z conj(w)|^2
///   bergman-halfplane     -(1/pi) (conj(w) - z)^{-2}
///   bergman-quarterplane  -(1/pi) 4 z conj(w) (conj(w)^2 - z^2)^{-2}
///   bergman-ball2         (2/pi^2) (1 - z.conj(w))^{-3}
///   szego-ball2           (1/2pi^2) (1 - z.conj(w))^{-2}
///   poisson-szego-ball2   (1/2pi^2) (1 - |z|^2)^2 / |1 - z.conj(w)|^4
///   bergman-annulus-approx  two-term approximation, see annulus_kernel_approx()
/// Throws DomainError for arguments outside the admissible region and PoleError
/// near a singularity.
cplx eval_closed_form(KernelId id, const ComplexPoint& z, const ComplexPoint& zeta);

Kernel closed_form_kernel(KernelId id);
Kernel series_kernel(const SeriesKernel& series);

/// |S(z, zeta)|^2 / S(z, z) for a Szego kernel S.
double poisson_szego_from(const Kernel& szego, const ComplexPoint& z, const ComplexPoint& zeta);

/// (4/pi)(4 - z conj(w))^{-2} + (1/pi)(1 - z conj(w))^{-2}
cplx annulus_kernel_approx(const ComplexPoint& z, const ComplexPoint& zeta);

/// Pieces of the annulus kernel K = I1 + I2 + II + III1 + III2 with lambda = z conj(zeta):
///   I1   = (1/pi)(1 - lambda)^{-2}             (closed form, j <= -2 leading part)
///   I2   = sum_{j<=-2} ((j+1)/pi) 4^{j+1}/(4^{j+1}-1) lambda^j
///   II   = lambda^{-1} / (2 pi ln 2)
///   III1 = (4/pi)(4 - lambda)^{-2}
///   III2 = sum_{j>=0} (j+1) / (pi (4^{j+1}-1) 4^{j+1}) lambda^j
struct AnnulusErrorTerms {
  cplx II;
  cplx I2;
  cplx III2;
};
AnnulusErrorTerms annulus_error_terms(const ComplexPoint& z, const ComplexPoint& zeta, double tail_tol = 1e-15);
cplx annulus_I1(const ComplexPoint& z, const ComplexPoint& zeta);
cplx annulus_III1(const ComplexPoint& z, const ComplexPoint& zeta);

/// Truncated extremal value sum_k |phi_k(z)|^2 and the maximizing unit-norm
/// coefficient vector a_k = conj(phi_k(z)) / sqrt(sum |phi|^2).
struct ExtremalResult {
  double value = 0.0;
  std::vector<cplx> coefficients;
};
ExtremalResult extremal_value(const OrthonormalSystem& system, const ComplexPoint& z);

struct BlowupReport {
  std::vector<double> deltas;
  std::vector<double> values;
  double fitted_exponent = 0.0;
  double fitted_constant = 0.0;
};

/// 2^{-6}, ..., 2^{-13}
std::vector<double> default_blowup_deltas();

/// Samples |K(path(d), path(d))| and fits log|K| = e log(1/d) + log C by least squares.
BlowupReport blowup_probe(const Kernel& kernel, const std::function<ComplexPoint(double)>& path,
                          const std::vector<double>& deltas);

/// sup of the ball Poisson-Szego kernel P(z, zeta) over zeta in S^3 with |z - zeta| >= eps, |z| = radius.
/// Exact: the constraint reads Re zeta_1 <= (1 + r^2 - eps^2)/(2r) for z = (r, 0), and the sup sits on
/// the real axis of zeta_1. Returns 0 when no zeta qualifies.
double poisson_szego_offdiagonal_sup(double radius, double eps);

}  // namespace bergkern
