#pragma once

#include "buckle/bounds/euclidean.hpp"
#include "buckle/core/solution.hpp"
#include "buckle/core/spectrum.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace buckle::bounds {

/// Default last k of a report: size - 1, or 1 for a single eigenvalue.
int default_k_max(const Spectrum& spectrum);

/// Evaluates the universal inequality and the closed-form bounds for
/// k = 1..min(k_max, size). Entries with k < size carry lambda_next_computed,
/// the residual and tightness ratios; k = size carries bounds only.
///
/// Euclidean: thm_residual is LHS - RHS of the inequality, bound_a and
/// bound_b are the two closed-form bounds.
/// Sphere: residual_at_delta_star is RHS - LHS at the optimal delta (>= 0 when
/// it holds), thm_residual its negation, residual_grid_min the smallest
/// RHS - LHS over delta_grid() and delta*, bound_a the closed-form bound and
/// bound_b empty.
///
/// Throws BoundsError when k_max < 1 or a sphere precondition fails.
BoundReport build_report(const Spectrum& spectrum, int k_max);

struct Violation {
  int k = 0;
  std::string check;
  std::string detail;
};

/// Every check that fails at relative tolerance `tol`, for k = 1..min(k_max, size - 1):
///   euclidean: LHS - RHS <= tol * sum g_i^2
///   sphere:    RHS - LHS >= -tol * sum g_i^2 w_i at delta* and on the delta grid
///   both:      each closed-form bound defined and >= (1 - tol) Lambda_{k+1}
/// A sphere precondition failure is reported as a violation at its k.
std::vector<Violation> verify_spectrum(const Spectrum& spectrum, int k_max, double tol);

/// Moment-chain checks for one eigenpair with moments mu_1..mu_l:
///   |mu_1 - 1| <= tol, |mu_l - Lambda| <= tol * Lambda,
///   -tol <= mu_k <= Lambda^{(k-1)/(l-1)} (1 + tol),
///   mu_k^2 <= mu_{k-1} mu_{k+1} + tol * max(mu_k^2, 1).
/// `index` is the 1-based eigenpair number used in messages.
std::vector<Violation> check_moment_chain(std::span<const double> mu, double lambda, int order, int index, double tol);

}  // namespace buckle::bounds
