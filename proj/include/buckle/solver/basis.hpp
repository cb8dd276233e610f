#pragma once

#include "buckle/numerics/polynomial.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace buckle::solver {

using Cheb = numerics::ChebSeries<double>;
using Poly = numerics::RealPolynomial<double>;

/// Raised for solver failures: ill-conditioned bases, invalid sizes,
/// unsupported domains.
class SolverError : public std::runtime_error {
 public:
  explicit SolverError(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr int kMaxBasis1D = 40;
inline constexpr int kMaxBasisRadial = 28;

/// Clamped 1-D basis on [-1, 1]: phi_j(y) = (1 - y^2)^l T_j(y), j = 0..N-1.
///
/// Each phi_j and its derivatives through order l are stored exactly as
/// Chebyshev series (coefficients are dyadic rationals, so the products and
/// derivatives incur no rounding at the sizes allowed here).
class GalerkinBasis1D {
 public:
  GalerkinBasis1D(int order, int size);

  int order() const { return order_; }
  int size() const { return size_; }

  /// d^deriv phi_j / dy^deriv, 0 <= deriv <= order.
  const Cheb& function(int j, int deriv = 0) const { return derivs_.at(static_cast<std::size_t>(deriv)).at(static_cast<std::size_t>(j)); }

  /// Monomial form of the same derivative (for inspection at small sizes).
  Poly monomial(int j, int deriv = 0) const { return function(j, deriv).to_monomial(); }

  /// Largest |phi_j^{(a)}(+-1)| over all j and a < order.
  double max_boundary_trace() const;

 private:
  int order_;
  int size_;
  std::vector<std::vector<Cheb>> derivs_;  // [deriv][j]
};

enum class RadialGeometry { disc, cap };

/// One azimuthal-mode function on a disc or cap, stored through its
/// polynomial factor in the reference variable y in [-1, 1].
///
///  - disc: f(r) = r^m Q(s), s = r^2 = (1 + y) / 2, on the unit disc;
///  - cap:  f(x) = (1 - x^2)^{m/2} P(x), x = cos(theta) = x0 + beta (1 + y),
///          beta = (1 - x0) / 2, covering x0 <= x <= 1.
///
/// Only `poly` is stored; the prefactor is implied by (geometry, m).
struct RadialElement {
  RadialGeometry geometry = RadialGeometry::disc;
  int m = 0;
  double x0 = 0.0;  // cap boundary cos(theta0); unused for discs
  Cheb poly;

  /// Half-width of the physical variable's interval per unit of y.
  double scale() const { return geometry == RadialGeometry::disc ? 0.5 : (1.0 - x0) / 2.0; }
  /// Physical variable (s for discs, x for caps) as a function of y.
  Cheb physical_variable() const;

  /// Element whose factor is the given monomial polynomial in the physical
  /// variable (s = r^2 for discs, x = cos(theta) for caps).
  static RadialElement from_physical(RadialGeometry g, int m, double x0, const Poly& p);
  /// Factor expanded back into monomials of the physical variable.
  Poly physical_polynomial() const;

  /// d(poly)/d(physical variable).
  Cheb physical_derivative(const Cheb& p) const { return p.derivative() * (1.0 / scale()); }
};

/// Action of the mode-m Laplacian, in the same representation:
///  disc: Q -> 4 s Q'' + 4 (m + 1) Q'           (unit disc, ' = d/ds)
///  cap:  P -> (1 - x^2) P'' - 2 (m + 1) x P' - m (m + 1) P
RadialElement radial_laplacian_apply(const RadialElement& f);

/// Mode-m clamped basis of size N:
///  disc: Q_j = (1 - s)^l T_j(y);  cap: P_j = (x - x0)^l T_j(y).
class RadialBasis {
 public:
  RadialBasis(RadialGeometry geometry, int m, int order, int size, double x0 = 0.0);

  RadialGeometry geometry() const { return geometry_; }
  int m() const { return m_; }
  int order() const { return order_; }
  int size() const { return static_cast<int>(elements_.size()); }
  double x0() const { return x0_; }
  const RadialElement& element(int j) const { return elements_.at(static_cast<std::size_t>(j)); }

  /// Largest |d^a f_j / dx^a| at the clamped boundary over a < order,
  /// computed on the polynomial factor (the prefactor is smooth and nonzero
  /// there).
  double max_boundary_trace() const;

 private:
  RadialGeometry geometry_;
  int m_;
  int order_;
  double x0_;
  std::vector<RadialElement> elements_;
};

}  // namespace buckle::solver
