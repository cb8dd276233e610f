#pragma once

#include "buckle/core/domain.hpp"
#include "buckle/core/spectrum.hpp"

#include <Eigen/Core>

#include <optional>
#include <utility>
#include <string>
#include <vector>

namespace buckle {

/// Eigenpairs of the order-l buckling problem on one domain.
///
/// Eigenvectors are basis coefficients normalized to unit Dirichlet form. For
/// discs and caps each eigenpair belongs to a single azimuthal mode; modes with
/// m >= 1 appear twice (cosine and sine partners share one coefficient vector).
struct EigenSolution {
  explicit EigenSolution(DomainSpec d, int order_l = 2, int n_basis = 0, int modes = 0)
      : domain(std::move(d)), order(order_l), basis_size(n_basis), m_max(modes) {}

  DomainSpec domain;
  int order = 2;
  int basis_size = 0;
  /// Largest azimuthal index solved; only meaningful for radial domains.
  int m_max = 0;

  std::vector<double> eigenvalues;
  std::vector<Eigen::VectorXd> eigenvectors;
  /// Azimuthal index per eigenpair (radial domains), empty otherwise.
  std::vector<int> modal_tags;
  /// Position of the eigenpair inside its mode's spectrum (radial domains).
  std::vector<int> mode_index;
  /// mu_1 .. mu_l per eigenpair, mu_k = int u (-Delta)^k u.
  std::vector<std::vector<double>> moments;

  std::vector<std::string> warnings;
  bool complete = true;

  std::size_t size() const { return eigenvalues.size(); }

  /// Spectrum view of the eigenvalues (dimension = spatial dimension of the
  /// domain). Throws ValidationError for empty solutions or 1-D domains.
  Spectrum to_spectrum() const {
    return validate_spectrum(domain.geometry(), domain.spatial_dimension(), order, eigenvalues);
  }
};

/// One row of a bound report. Unavailable quantities stay empty.
struct BoundEntry {
  int k = 0;
  std::optional<double> lambda_next_computed;
  /// LHS - RHS of the universal inequality at this k; <= 0 when it holds.
  std::optional<double> thm_residual;
  std::optional<double> bound_a;
  std::optional<double> bound_b;
  std::optional<double> tightness_a;
  std::optional<double> tightness_b;
  // Sphere only.
  std::optional<double> delta_star;
  std::optional<double> residual_at_delta_star;
  std::optional<double> residual_grid_min;
};

struct BoundReport {
  Geometry geometry = Geometry::euclidean;
  int dimension = 2;
  int order = 2;
  std::vector<BoundEntry> entries;
};

}  // namespace buckle
