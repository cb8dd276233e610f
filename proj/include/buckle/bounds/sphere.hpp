#pragma once

#include "buckle/bounds/euclidean.hpp"
#include "buckle/numerics/int_polynomial.hpp"

#include <optional>
#include <vector>

namespace buckle::bounds {

using numerics::Int128;
using numerics::IntPolynomial;

/// F_q, G_q for q = 0..l-2 and the monic combination
/// t F_{l-2}(t) - G_{l-2}(t) = t^{l-1} + a_{l-2} t^{l-2} + ... + a_0.
struct SphereRecursion {
  int n = 2;
  int l = 2;
  std::vector<IntPolynomial> f;
  std::vector<IntPolynomial> g;
  IntPolynomial combination;
  /// a_0 .. a_{l-2}
  std::vector<Int128> a;
};

/// F_q and G_q for q = 0..q_max through the second-order recurrences
///   X_q = (2t - 2) X_{q-1} - (t^2 + 2t - n(n-2)) X_{q-2}
/// seeded with F_0 = G_0 = 1, F_1 = t - (n+2), G_1 = 3t + n - 2.
std::pair<std::vector<IntPolynomial>, std::vector<IntPolynomial>> fg_second_order(int q_max, int n);

/// The same pair through the coupled first-order recurrences
///   F_q = (t - n) F_{q-1} - 2 G_{q-1},  G_q = (t + n - 2) G_{q-1} + 2 t F_{q-1}
/// from F_0 = G_0 = 1.
std::pair<std::vector<IntPolynomial>, std::vector<IntPolynomial>> fg_coupled(int q_max, int n);

/// Builds both constructions, throws std::logic_error if they differ or the
/// combination is not monic of degree l - 1. IntegerOverflow propagates.
SphereRecursion fg_polys(int l, int n);

std::vector<Int128> aj_coefficients(int l, int n);

/// H = rho (1 - 1/(rho - (n-2))) + sum_j |a_j| rho^j, rho = Lambda^{1/(l-1)}.
/// Throws BoundsError unless rho > n - 2.
double h_value(double lambda, int l, int n);

/// Per-index sphere quantities, precondition-checked.
struct SphereTerms {
  double lhs = 0;        // sum g_i^2 w_i, w_i = 2 + (n-2)/(rho_i - (n-2))
  double weighted = 0;   // sum g_i^2 H_i
  double linear = 0;     // sum g_i (rho_i + (n-2)^2/4)
};

/// Requires a sphere spectrum, 1 <= k <= size - 1 and rho_i > n - 2, i <= k + 1.
SphereTerms thm12_terms(const Spectrum& spectrum, int k);

/// rhs - lhs of the sphere inequality at parameter delta > 0; >= 0 when it holds:
///   delta * weighted + linear / delta - lhs.
double thm12_residual(const Spectrum& spectrum, int k, double delta);

/// sqrt(linear / weighted), the minimizer of the right-hand side over delta.
/// Throws BoundsError when every gap vanishes or weighted <= 0.
double optimal_delta(const Spectrum& spectrum, int k);

struct SphereBound {
  double s_k = 0;
  std::vector<double> t;  // T_1..T_k
  double a = 0;
  double b = 0;
  /// a + sqrt(a^2 - b); empty when a^2 < b.
  std::optional<double> bound;
};

/// Closed-form bound on Lambda_{k+1}. Requires 1 <= k <= size.
SphereBound cor12_bound(const Spectrum& spectrum, int k);

/// Per-term factors of the order-two comparison at one eigenvalue:
///   sharper: delta + delta L (1 - 1/(L - (n-2))) - (n-2)/(L - (n-2))
///   older:   delta L + delta^2 (L - (n-2)) / (4 (delta L + n - 2))
double wx_factor_sharp(double lambda, int n, double delta);
double wx_factor_older(double lambda, int n, double delta);

struct WxComparison {
  double lhs = 0;       // 2 sum g_i^2
  double rhs_sharp = 0; // sum g_i^2 factor_sharp + (1/delta) sum g_i (L_i + (n-2)^2/4)
  double rhs_older = 0; // same with factor_older
};

/// Requires l = 2, delta > 0 and Lambda_i > n - 2.
WxComparison wx_comparator(const Spectrum& spectrum, int k, double delta);

/// 25 points per decade over [1e-2, 1e2], endpoints included.
std::vector<double> delta_grid();

}  // namespace buckle::bounds
