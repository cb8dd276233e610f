#pragma once

#include "buckle/core/domain.hpp"
#include "buckle/numerics/dense.hpp"
#include "buckle/solver/basis.hpp"

#include <Eigen/Core>

#include <span>
#include <vector>

namespace buckle::solver {

using SymMatrix = numerics::DenseSymMatrix<double>;

/// A holds the order-l form, B the Dirichlet form, over the same basis.
struct AssembledForms {
  SymMatrix a;
  SymMatrix b;
};

/// G_ij = int_{-1}^{1} phi_i^{(a)} phi_j^{(b)} dy, by Gauss-Legendre with
/// N + 2l + 1 nodes (exact for these polynomial integrands).
Eigen::MatrixXd derivative_gram(const GalerkinBasis1D& basis, int a, int b);

/// The order-k energy form on a box with the given side lengths:
///   even k: int Delta^{k/2} u Delta^{k/2} v
///   odd k:  int <grad Delta^{(k-1)/2} u, grad Delta^{(k-1)/2} v>
/// over the tensor-product basis phi_{i_1}(x_1) ... phi_{i_d}(x_d), flat index
/// i_1 + N i_2 + N^2 i_3. One side gives the interval form.
Eigen::MatrixXd box_form(const GalerkinBasis1D& basis, std::span<const double> sides, int k);

/// Order-k form of one azimuthal mode on a disc of the given radius or on a
/// cap (radius ignored). The angular constant is omitted from every form.
Eigen::MatrixXd modal_form(const RadialBasis& basis, int k, double radius = 1.0);

AssembledForms assemble_interval(int order, double length, int size);
/// Spatial dimension len(sides) must be 2 or 3.
AssembledForms assemble_rectangle(int order, std::span<const double> sides, int size);
/// Disc or cap only.
AssembledForms assemble_modal(const DomainSpec& domain, int order, int m, int size);

/// Builds the mode basis matching a disc or cap domain.
RadialBasis make_radial_basis(const DomainSpec& domain, int order, int m, int size);

/// Forms of orders 1..l for the given domain and (for radial domains) mode.
/// Index k-1 holds the order-k form.
std::vector<Eigen::MatrixXd> form_ladder(const DomainSpec& domain, int order, int size, int m = 0);

}  // namespace buckle::solver
