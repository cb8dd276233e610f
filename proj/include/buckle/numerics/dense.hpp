#pragma once

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace buckle::numerics {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Raised when a Cholesky pivot falls below the relative threshold.
class NotPositiveDefinite : public std::runtime_error {
 public:
  explicit NotPositiveDefinite(const std::string& what) : std::runtime_error(what) {}
};

/// Square symmetric matrix. The input is symmetrized as (A + A^T) / 2 on
/// construction, so the stored entries are exactly symmetric.
template <typename Scalar>
class DenseSymMatrix {
 public:
  DenseSymMatrix() = default;

  /// Evaluates the expression once, then stores (A + A^T) / 2.
  template <typename Derived>
  explicit DenseSymMatrix(const Eigen::MatrixBase<Derived>& a) : data_(a) {
    if (data_.rows() != data_.cols()) throw std::invalid_argument("DenseSymMatrix: matrix is not square");
    data_ = (data_ + data_.transpose()).eval() / Scalar(2);
  }

  static DenseSymMatrix identity(Eigen::Index n) { return DenseSymMatrix(Matrix<Scalar>::Identity(n, n)); }

  Eigen::Index size() const { return data_.rows(); }
  const Matrix<Scalar>& matrix() const { return data_; }
  Scalar operator()(Eigen::Index i, Eigen::Index j) const { return data_(i, j); }

  Scalar max_abs() const { return data_.size() == 0 ? Scalar(0) : data_.cwiseAbs().maxCoeff(); }

 private:
  Matrix<Scalar> data_;
};

template <typename Scalar>
struct SymEigResult {
  Vector<Scalar> values;   // ascending
  Matrix<Scalar> vectors;  // column i pairs with values(i)
  int sweeps = 0;
};

/// Lower-triangular L with A = L L^T. Throws NotPositiveDefinite when a pivot
/// is <= 1e-13 * max|A|.
template <typename Scalar>
Matrix<Scalar> cholesky(const DenseSymMatrix<Scalar>& a) {
  const Eigen::Index n = a.size();
  const Scalar threshold = Scalar(1e-13) * a.max_abs();
  Matrix<Scalar> l = Matrix<Scalar>::Zero(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    Scalar pivot = a(j, j);
    for (Eigen::Index k = 0; k < j; ++k) pivot -= l(j, k) * l(j, k);
    if (!(pivot > threshold)) {
      throw NotPositiveDefinite("cholesky: matrix is not positive definite (pivot " + std::to_string(double(pivot)) +
                                " at row " + std::to_string(j) + ")");
    }
    const Scalar d = std::sqrt(pivot);
    l(j, j) = d;
    for (Eigen::Index i = j + 1; i < n; ++i) {
      Scalar s = a(i, j);
      for (Eigen::Index k = 0; k < j; ++k) s -= l(i, k) * l(j, k);
      l(i, j) = s / d;
    }
  }
  return l;
}

namespace detail {

template <typename Scalar>
void sort_eigenpairs(Vector<Scalar>& values, Matrix<Scalar>& vectors) {
  const Eigen::Index n = values.size();
  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index(0));
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index x, Eigen::Index y) { return values(x) < values(y); });
  Vector<Scalar> sorted_values(n);
  Matrix<Scalar> sorted_vectors(vectors.rows(), n);
  for (Eigen::Index i = 0; i < n; ++i) {
    sorted_values(i) = values(order[static_cast<std::size_t>(i)]);
    sorted_vectors.col(i) = vectors.col(order[static_cast<std::size_t>(i)]);
  }
  values = std::move(sorted_values);
  vectors = std::move(sorted_vectors);
}

}  // namespace detail

/// Symmetric eigendecomposition by cyclic Jacobi rotations.
///
/// Sweeps visit every (p, q) pair with p < q in row order. Iteration stops once
/// the off-diagonal Frobenius norm drops to 1e-12 * ||A||_F, or after 100
/// sweeps. Rotation angles use the Rutishauser form (t = sign(theta) /
/// (|theta| + sqrt(theta^2 + 1))), which keeps |t| <= 1.
template <typename Scalar>
SymEigResult<Scalar> sym_eig(const DenseSymMatrix<Scalar>& input) {
  constexpr int kMaxSweeps = 100;
  const Eigen::Index n = input.size();
  Matrix<Scalar> a = input.matrix();
  Matrix<Scalar> v = Matrix<Scalar>::Identity(n, n);

  const Scalar frob = a.norm();
  const Scalar target = Scalar(1e-12) * frob;

  auto off_norm = [&]() {
    Scalar s = 0;
    for (Eigen::Index j = 0; j < n; ++j)
      for (Eigen::Index i = 0; i < n; ++i)
        if (i != j) s += a(i, j) * a(i, j);
    return std::sqrt(s);
  };

  int sweeps = 0;
  while (sweeps < kMaxSweeps && off_norm() > target) {
    ++sweeps;
    for (Eigen::Index p = 0; p < n - 1; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const Scalar apq = a(p, q);
        if (apq == Scalar(0)) continue;
        const Scalar app = a(p, p), aqq = a(q, q);
        // Negligible against both diagonal entries: zero it without rotating.
        const Scalar eps = std::numeric_limits<Scalar>::epsilon();
        if (std::abs(apq) < eps * eps * (std::abs(app) + std::abs(aqq))) {
          a(p, q) = a(q, p) = 0;
          continue;
        }
        const Scalar theta = (aqq - app) / (Scalar(2) * apq);
        const Scalar t = (theta >= 0 ? Scalar(1) : Scalar(-1)) / (std::abs(theta) + std::sqrt(theta * theta + Scalar(1)));
        const Scalar c = Scalar(1) / std::sqrt(t * t + Scalar(1));
        const Scalar s = t * c;

        // Columns p and q of A J; rows follow by symmetry.
        for (Eigen::Index k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const Scalar akp = a(k, p), akq = a(k, q);
          const Scalar np = c * akp - s * akq;
          const Scalar nq = s * akp + c * akq;
          a(k, p) = np;
          a(p, k) = np;
          a(k, q) = nq;
          a(q, k) = nq;
        }
        a(p, p) = app - t * apq;
        a(q, q) = aqq + t * apq;
        a(p, q) = a(q, p) = 0;

        for (Eigen::Index k = 0; k < n; ++k) {
          const Scalar vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  SymEigResult<Scalar> result;
  result.values = a.diagonal();
  result.vectors = std::move(v);
  result.sweeps = sweeps;
  detail::sort_eigenpairs(result.values, result.vectors);
  return result;
}

/// Generalized problem A v = lambda B v with B positive definite.
///
/// Reduced to a standard problem through B = L L^T: C = L^{-1} A L^{-T}, then
/// v = L^{-T} y for each eigenvector y of C. The returned vectors satisfy
/// V^T B V = I.
template <typename Scalar>
SymEigResult<Scalar> gen_sym_eig(const DenseSymMatrix<Scalar>& a, const DenseSymMatrix<Scalar>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("gen_sym_eig: size mismatch");
  const Matrix<Scalar> l = cholesky(b);
  const auto lower = l.template triangularView<Eigen::Lower>();
  Matrix<Scalar> tmp = lower.solve(a.matrix());                          // L^{-1} A
  Matrix<Scalar> c = lower.solve(tmp.transpose()).transpose();           // L^{-1} A L^{-T}
  SymEigResult<Scalar> reduced = sym_eig(DenseSymMatrix<Scalar>(c));
  reduced.vectors = lower.transpose().solve(reduced.vectors);
  return reduced;
}

}  // namespace buckle::numerics
