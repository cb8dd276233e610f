#pragma once

#include "buckle/core/solution.hpp"
#include "buckle/solver/assembly.hpp"

#include <optional>
#include <vector>

namespace buckle::solver {

struct SolveOptions {
  int order = 2;
  /// Basis size per axis (intervals, rectangles) or per mode (discs, caps).
  int basis_size = 16;
  /// Number of eigenpairs returned, lowest first.
  int count = 8;
  /// Largest azimuthal index for discs and caps; defaults to max(8, count).
  std::optional<int> m_max;
  /// Solve azimuthal modes on worker threads. Results do not depend on it.
  bool parallel = true;
};

/// Lowest `count` eigenpairs of (-Delta)^l u = -Lambda Delta u with clamped
/// conditions of order l - 1.
///
/// Intervals and rectangles are solved as a single generalized problem. Discs
/// and caps are solved mode by mode for m = 0..m_max and merged in the order
/// (eigenvalue, m, intra-mode index); every m >= 1 eigenvalue enters twice.
/// When the largest kept eigenvalue exceeds the lowest eigenvalue of mode
/// m_max the result is flagged incomplete and carries a warning.
EigenSolution solve_buckling(const DomainSpec& domain, const SolveOptions& options);

/// mu_1..mu_l of eigenpair i (0-based), recomputed from its coefficient vector
/// with freshly assembled forms.
std::vector<double> moments(const EigenSolution& solution, std::size_t i);

struct SweepResult {
  std::vector<int> sizes;
  std::vector<std::vector<double>> spectra;
  /// rel_change[s][i] = |Lambda_i(N_{s+1}) - Lambda_i(N_s)| / Lambda_i(N_{s+1}).
  std::vector<std::vector<double>> rel_change;
  /// Largest successive relative change of each index across all steps.
  std::vector<double> max_rel_change;
  /// Every eigenvalue is nonincreasing in N up to 1e-10 relative slack.
  bool monotone = true;
};

/// Solves the same domain for each basis size in `sizes` (strictly
/// increasing) and reports successive relative differences.
SweepResult convergence_sweep(const DomainSpec& domain, SolveOptions options, const std::vector<int>& sizes);

}  // namespace buckle::solver
