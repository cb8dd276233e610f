#pragma once

#include "buckle/core/spectrum.hpp"

#include <optional>
#include <span>

namespace buckle::bounds {

/// Raised when a bound is evaluated outside its preconditions.
class BoundsError : public std::invalid_argument {
 public:
  explicit BoundsError(const std::string& what) : std::invalid_argument(what) {}
};

/// 2 l^2 + (n - 4) l + 2 - n, the dimensional constant of the Euclidean
/// inequality. Equals n + 2 at l = 2.
long long coefficient_C(int l, int n);

/// Pieces of the Euclidean inequality at index k, with g_i = Lambda_{k+1} - Lambda_i:
///   lhs       = sum g_i^2
///   quadratic = sum g_i^2 Lambda_i^{(l-2)/(l-1)}
///   linear    = sum g_i   Lambda_i^{1/(l-1)}
///   rhs       = (2 / n) sqrt(C) sqrt(quadratic) sqrt(linear)
struct EuclideanTerms {
  double lhs = 0;
  double quadratic = 0;
  double linear = 0;
  double rhs = 0;
};

/// Requires a Euclidean spectrum and 1 <= k <= size - 1.
EuclideanTerms thm11_terms(const Spectrum& spectrum, int k);

/// lhs - rhs of the inequality; <= 0 when it holds.
double thm11_residual(const Spectrum& spectrum, int k);

/// Closed-form upper bounds on Lambda_{k+1} from Lambda_1..Lambda_k. Either
/// is empty when its discriminant is negative, i.e. the input cannot be a
/// buckling spectrum.
struct EuclideanBounds {
  std::optional<double> bound_a;
  std::optional<double> bound_b;
};

/// Requires a Euclidean spectrum and 1 <= k <= size.
EuclideanBounds cor11_bounds(const Spectrum& spectrum, int k);

/// Order-two comparator: sum g_i^2 - (4 (n + 2) / n^2) sum g_i Lambda_i.
/// Requires l = 2.
double chengyang_residual(const Spectrum& spectrum, int k);

/// (sum a_i^2)(sum a_i b_i c_i) - (sum a_i^2 b_i)(sum a_i c_i) for nonnegative
/// a nonincreasing and b, c nondecreasing. Nonnegative by the three-sequence
/// rearrangement inequality.
double lemma22_residual(std::span<const double> a, std::span<const double> b, std::span<const double> c);

/// (1/m)(sum a)(sum b) - sum a b for a nondecreasing and b nonincreasing;
/// nonnegative (reverse Chebyshev sum inequality).
double reverse_chebyshev_residual(std::span<const double> a, std::span<const double> b);

}  // namespace buckle::bounds
