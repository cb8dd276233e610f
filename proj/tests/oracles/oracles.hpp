#pragma once

#include <vector>

/// Reference values computed without any of the Galerkin machinery.
namespace buckle::oracle {

/// First positive root of tan(x/2) = x/2 by bisection on
/// sin(x/2) - (x/2) cos(x/2) over (2 pi, 3 pi).
double clamped_column_root();

/// J_1 by its power series.
double bessel_j1(double x);
/// First positive zero of J_1 by Newton from 3.8, with J_1' = J_0 - J_1 / x.
double bessel_j1_first_zero();

/// Lowest `count` eigenvalues of the clamped-plate buckling problem on the
/// unit square from a five-point finite-difference discretization with M
/// cells per side (ghost-point reflection for the clamped condition),
/// solved by subspace iteration on sparse LDL^T factors.
std::vector<double> fd_square(int cells, int count);

/// Richardson extrapolation of fd_square on M and 2M cells, assuming an
/// O(h^2) leading error.
std::vector<double> fd_square_extrapolated(int cells, int count);

}  // namespace buckle::oracle
