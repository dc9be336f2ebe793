#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <numbers>
#include <span>
#include <string_view>
#include <vector>

namespace bergkern {

using cplx = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;

/// A point of C^1 or C^2. The dimension is fixed at construction and every
/// coordinate is finite.
class ComplexPoint {
 public:
  ComplexPoint(cplx z);
  ComplexPoint(cplx z1, cplx z2);
  ComplexPoint(double re, double im) : ComplexPoint(cplx(re, im)) {}

  std::size_t dim() const noexcept { return dim_; }
  const cplx& operator[](std::size_t i) const { return coords_[i]; }
  std::span<const cplx> coords() const noexcept { return {coords_.data(), dim_}; }

  /// |z_1|^2 + ... + |z_n|^2
  double norm2() const noexcept;
  double norm() const noexcept;

 private:
  std::array<cplx, 2> coords_{};
  std::size_t dim_ = 1;
};

/// z . conj(w) = sum_j z_j conj(w_j)
cplx hermitian_dot(const ComplexPoint& z, const ComplexPoint& w);

enum class DomainTag { Disc, Annulus, HalfPlane, QuarterPlane, Ball2 };

/// Model domains: unit disc, annulus 1 < |z| < 2, upper half-plane, open
/// first quadrant, unit ball in C^2.
class Domain {
 public:
  constexpr explicit Domain(DomainTag tag) : tag_(tag) {}

  static constexpr Domain disc() { return Domain(DomainTag::Disc); }
  static constexpr Domain annulus() { return Domain(DomainTag::Annulus); }
  static constexpr Domain halfplane() { return Domain(DomainTag::HalfPlane); }
  static constexpr Domain quarterplane() { return Domain(DomainTag::QuarterPlane); }
  static constexpr Domain ball2() { return Domain(DomainTag::Ball2); }

  constexpr DomainTag tag() const noexcept { return tag_; }
  constexpr std::size_t dim() const noexcept { return tag_ == DomainTag::Ball2 ? 2 : 1; }
  std::string_view name() const noexcept;

  bool contains(const ComplexPoint& z) const;

  /// Signed distance to the boundary: positive inside, zero on the boundary.
  /// Throws DomainError for points outside the closed domain.
  double boundary_distance(const ComplexPoint& z) const;

  /// True when z lies on the topological boundary within `tol`.
  bool on_boundary(const ComplexPoint& z, double tol = 1e-10) const;

  friend constexpr bool operator==(Domain a, Domain b) { return a.tag_ == b.tag_; }

 private:
  /// Signed distance without the closed-domain check.
  double signed_distance(const ComplexPoint& z) const;

  DomainTag tag_;
};

enum class Measure { Area, Arc, Sphere3 };

struct QuadratureRule {
  Domain carrier;
  Measure measure;
  std::vector<ComplexPoint> nodes;
  std::vector<double> weights;

  std::size_t size() const noexcept { return nodes.size(); }
  double weight_sum() const;
  /// Exact total measure of the carrier: pi, 3 pi, 2 pi or 2 pi^2.
  double carrier_measure() const;
};

/// Relative tolerance on |weight_sum - carrier_measure| enforced at rule construction.
inline constexpr double kWeightSumTolerance = 1e-10;

/// Gauss-Legendre nodes and weights on [a, b].
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;
};
GaussLegendre gauss_legendre(std::size_t n, double a = -1.0, double b = 1.0);

/// Product rule on the disc (r in [0,1]) or annulus (r in [1,2]): Gauss-Legendre
/// in radius, uniform trapezoid in angle, weights r * dtheta * w_GL.
QuadratureRule make_area_quadrature(Domain domain, std::size_t n_radial, std::size_t n_angular);

/// Trapezoid rule on the unit circle (disc) or the product rule on S^3 in
/// coordinates (e^{i theta} cos s, e^{i phi} sin s) with element cos s sin s ds dtheta dphi
/// (ball2; n_nodes is the per-axis count).
QuadratureRule make_boundary_quadrature(Domain domain, std::size_t n_nodes);

using PointFunction = std::function<cplx(const ComplexPoint&)>;

/// sum_k w_k f(x_k). Throws std::domain_error naming the node index when f is not finite.
cplx integrate(const QuadratureRule& rule, const PointFunction& f);

/// Same as integrate() but with samples already evaluated at the rule nodes.
cplx integrate_samples(const QuadratureRule& rule, std::span<const cplx> values);

inline double boundary_distance(Domain domain, const ComplexPoint& z) {
  return domain.boundary_distance(z);
}

}  // namespace bergkern
