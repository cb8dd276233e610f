#include "buckle/solver/basis.hpp"

#include <algorithm>
#include <cmath>

namespace buckle::solver {

namespace {

Cheb power(const Cheb& base, int e) {
  Cheb r = Cheb::constant(1.0);
  for (int i = 0; i < e; ++i) r = r * base;
  return r;
}

}  // namespace

GalerkinBasis1D::GalerkinBasis1D(int order, int size) : order_(order), size_(size) {
  if (order < 1) throw SolverError("basis order must be >= 1");
  if (size < 0) throw SolverError("basis size must be >= 0");
  if (size > kMaxBasis1D) {
    throw SolverError("basis size " + std::to_string(size) + " exceeds the 1-D cap of " + std::to_string(kMaxBasis1D) +
                      " (basis too ill-conditioned, reduce N)");
  }
  const Cheb weight = power(Cheb::linear(1.0, 0.0) - Cheb::basis(1) * Cheb::basis(1), order);
  derivs_.assign(static_cast<std::size_t>(order) + 1, {});
  for (int j = 0; j < size; ++j) {
    Cheb f = weight * Cheb::basis(j);
    for (int a = 0; a <= order; ++a) {
      derivs_[static_cast<std::size_t>(a)].push_back(f);
      f = f.derivative();
    }
  }
}

double GalerkinBasis1D::max_boundary_trace() const {
  double worst = 0;
  for (int a = 0; a < order_; ++a)
    for (int j = 0; j < size_; ++j)
      for (double y : {-1.0, 1.0}) worst = std::max(worst, std::abs(function(j, a)(y)));
  return worst;
}

Cheb RadialElement::physical_variable() const {
  if (geometry == RadialGeometry::disc) return Cheb::linear(0.5, 0.5);
  const double beta = scale();
  return Cheb::linear(x0 + beta, beta);
}

RadialElement RadialElement::from_physical(RadialGeometry g, int m, double x0, const Poly& p) {
  RadialElement e{g, m, x0, {}};
  const Cheb v = e.physical_variable();
  Cheb acc;
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * v + Cheb::constant(*it);
  e.poly = acc;
  return e;
}

Poly RadialElement::physical_polynomial() const {
  const auto v = physical_variable().coefficients();  // v = a + b y
  const double a = v.size() > 0 ? v[0] : 0.0;
  const double b = v.size() > 1 ? v[1] : 1.0;
  return numerics::poly_compose_affine(poly.to_monomial(), -a / b, 1.0 / b);
}

RadialElement radial_laplacian_apply(const RadialElement& f) {
  if (f.m < 0) throw SolverError("radial element has negative azimuthal index");
  if (f.geometry == RadialGeometry::cap && !(f.x0 > -1.0 && f.x0 < 1.0)) {
    throw SolverError("cap element boundary x0 must lie in (-1, 1)");
  }
  const double m = f.m;
  const Cheb d1 = f.physical_derivative(f.poly);
  const Cheb d2 = f.physical_derivative(d1);
  const Cheb v = f.physical_variable();

  RadialElement out = f;
  if (f.geometry == RadialGeometry::disc) {
    out.poly = 4.0 * (v * d2) + (4.0 * (m + 1.0)) * d1;
  } else {
    const Cheb one_minus_x2 = Cheb::constant(1.0) - v * v;
    out.poly = one_minus_x2 * d2 - (2.0 * (m + 1.0)) * (v * d1) - (m * (m + 1.0)) * f.poly;
  }
  return out;
}

RadialBasis::RadialBasis(RadialGeometry geometry, int m, int order, int size, double x0)
    : geometry_(geometry), m_(m), order_(order), x0_(x0) {
  if (m < 0) throw SolverError("azimuthal index must be >= 0");
  if (order < 1) throw SolverError("basis order must be >= 1");
  if (size < 0) throw SolverError("basis size must be >= 0");
  if (size > kMaxBasisRadial) {
    throw SolverError("radial basis size " + std::to_string(size) + " exceeds the cap of " +
                      std::to_string(kMaxBasisRadial) + " (basis too ill-conditioned, reduce N)");
  }
  if (geometry == RadialGeometry::cap && !(x0 > -1.0 && x0 < 1.0)) {
    throw SolverError("cap boundary x0 must lie in (-1, 1)");
  }
  RadialElement proto{geometry, m, x0, {}};
  // Vanishing factor at the clamped boundary: 1 - s for discs, x - x0 for caps.
  const Cheb edge = geometry == RadialGeometry::disc ? Cheb::linear(0.5, -0.5) : Cheb::linear(proto.scale(), proto.scale());
  const Cheb weight = power(edge, order);
  for (int j = 0; j < size; ++j) {
    RadialElement e = proto;
    e.poly = weight * Cheb::basis(j);
    elements_.push_back(std::move(e));
  }
}

double RadialBasis::max_boundary_trace() const {
  const double y_edge = geometry_ == RadialGeometry::disc ? 1.0 : -1.0;
  double worst = 0;
  for (const RadialElement& e : elements_) {
    Cheb d = e.poly;
    for (int a = 0; a < order_; ++a) {
      worst = std::max(worst, std::abs(d(y_edge)));
      d = e.physical_derivative(d);
    }
  }
  return worst;
}

}  // namespace buckle::solver
