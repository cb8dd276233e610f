#include "oracles.hpp"

#include <Eigen/Dense>
#include <Eigen/SparseCholesky>
#include <Eigen/SparseCore>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace buckle::oracle {

double clamped_column_root() {
  auto f = [](double x) { return std::sin(x / 2) - (x / 2) * std::cos(x / 2); };
  double lo = 2 * std::numbers::pi + 1e-6, hi = 3 * std::numbers::pi - 1e-6;
  if (f(lo) * f(hi) > 0) throw std::logic_error("clamped_column_root: no sign change");
  for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    (f(lo) * f(mid) <= 0 ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

namespace {

double bessel_series(int order, double x) {
  // sum_k (-1)^k (x/2)^{2k+order} / (k! (k+order)!)
  double term = std::pow(x / 2, order);
  for (int j = 1; j <= order; ++j) term /= j;
  double sum = term;
  for (int k = 1; k < 200; ++k) {
    term *= -(x / 2) * (x / 2) / (double(k) * double(k + order));
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

}  // namespace

double bessel_j1(double x) { return bessel_series(1, x); }

double bessel_j1_first_zero() {
  double x = 3.8;
  for (int it = 0; it < 50; ++it) {
    const double j1 = bessel_series(1, x);
    const double step = j1 / (bessel_series(0, x) - j1 / x);
    x -= step;
    if (std::abs(step) < 1e-15 * x) break;
  }
  return x;
}

std::vector<double> fd_square(int cells, int count) {
  using Sparse = Eigen::SparseMatrix<double>;
  const int m = cells - 1;  // interior nodes per side
  const double h = 1.0 / cells;
  const int size = m * m;
  auto id = [m](int i, int j) { return i + m * j; };

  std::vector<Eigen::Triplet<double>> lap;
  Eigen::VectorXd boundary_sides = Eigen::VectorXd::Zero(size);
  for (int j = 0; j < m; ++j) {
    for (int i = 0; i < m; ++i) {
      const int p = id(i, j);
      lap.emplace_back(p, p, -4.0 / (h * h));
      const int nb[4][2] = {{i - 1, j}, {i + 1, j}, {i, j - 1}, {i, j + 1}};
      for (const auto& q : nb) {
        if (q[0] < 0 || q[0] >= m || q[1] < 0 || q[1] >= m) {
          boundary_sides(p) += 1.0;
        } else {
          lap.emplace_back(p, id(q[0], q[1]), 1.0 / (h * h));
        }
      }
    }
  }
  Sparse l(size, size);
  l.setFromTriplets(lap.begin(), lap.end());
  // Reflected ghost values u_{-1} = u_1 add 2/h^4 per boundary side adjacent to a node.
  Sparse k = l * l;
  for (int p = 0; p < size; ++p) k.coeffRef(p, p) += 2.0 * boundary_sides(p) / std::pow(h, 4);
  const Sparse mass = -l;

  Eigen::SimplicialLDLT<Sparse> solver(k);
  if (solver.info() != Eigen::Success) throw std::runtime_error("fd_square: factorization failed");

  const int block = count + 8;
  Eigen::MatrixXd x = Eigen::MatrixXd::Zero(size, block);
  for (int c = 0; c < block; ++c)
    for (int p = 0; p < size; ++p) x(p, c) = std::sin(0.37 * (p + 1) * (c + 1)) + 0.01 * c;

  Eigen::VectorXd prev = Eigen::VectorXd::Constant(count, 0.0);
  Eigen::VectorXd values;
  for (int it = 0; it < 500; ++it) {
    x = solver.solve(mass * x);
    const Eigen::MatrixXd kr = x.transpose() * (k * x);
    const Eigen::MatrixXd mr = x.transpose() * (mass * x);
    Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> ritz(kr, mr);
    x = x * ritz.eigenvectors();
    values = ritz.eigenvalues().head(count);
    if (((values - prev).array().abs() <= 1e-11 * values.array()).all()) break;
    prev = values;
  }
  return {values.data(), values.data() + values.size()};
}

std::vector<double> fd_square_extrapolated(int cells, int count) {
  const auto coarse = fd_square(cells, count);
  const auto fine = fd_square(2 * cells, count);
  std::vector<double> out(static_cast<std::size_t>(count));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = (4.0 * fine[i] - coarse[i]) / 3.0;
  return out;
}

}  // namespace buckle::oracle
