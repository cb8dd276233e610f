#pragma once

#include <Eigen/Core>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace buckle::numerics {

template <typename Scalar>
struct QuadratureRule {
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> nodes;
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> weights;

  Eigen::Index size() const { return nodes.size(); }
};

/// Gauss-Legendre rule on [-1, 1] with `npts` nodes, exact for polynomials of
/// degree <= 2*npts - 1. Nodes are ascending.
///
/// Roots of P_n are located by Newton iteration from the cosine guess
/// cos(pi (i - 1/4) / (n + 1/2)); the derivative comes from the standard
/// identity (1 - x^2) P_n' = n (P_{n-1} - x P_n).
template <typename Scalar = double>
QuadratureRule<Scalar> gauss_legendre(int npts) {
  if (npts < 1) throw std::invalid_argument("gauss_legendre: npts must be >= 1");

  QuadratureRule<Scalar> rule;
  rule.nodes.resize(npts);
  rule.weights.resize(npts);

  const Scalar pi = std::numbers::pi_v<Scalar>;
  const Scalar tol = Scalar(1e-15);
  const int half = (npts + 1) / 2;

  // Returns (P_n(x), P_n'(x)).
  auto legendre = [npts](Scalar x) {
    Scalar pk = x, pkm1 = 1;
    for (int k = 1; k < npts; ++k) {
      const Scalar next = (Scalar(2 * k + 1) * x * pk - Scalar(k) * pkm1) / Scalar(k + 1);
      pkm1 = pk;
      pk = next;
    }
    const Scalar dp = Scalar(npts) * (pkm1 - x * pk) / (Scalar(1) - x * x);
    return std::pair<Scalar, Scalar>{pk, dp};
  };

  for (int i = 0; i < half; ++i) {
    Scalar x = std::cos(pi * (Scalar(i) + Scalar(0.75)) / (Scalar(npts) + Scalar(0.5)));
    for (int iter = 0; iter < 100; ++iter) {
      const auto [p, dp] = legendre(x);
      const Scalar dx = p / dp;
      x -= dx;
      if (std::abs(dx) <= tol) break;
    }
    const Scalar dp = legendre(x).second;
    const Scalar w = Scalar(2) / ((Scalar(1) - x * x) * dp * dp);
    rule.nodes(i) = -x;
    rule.nodes(npts - 1 - i) = x;
    rule.weights(i) = w;
    rule.weights(npts - 1 - i) = w;
  }
  if (npts % 2 == 1) rule.nodes(npts / 2) = 0;
  return rule;
}

/// Gauss-Legendre rule mapped affinely onto [a, b].
template <typename Scalar = double>
QuadratureRule<Scalar> gauss_legendre(int npts, Scalar a, Scalar b) {
  QuadratureRule<Scalar> rule = gauss_legendre<Scalar>(npts);
  const Scalar half = (b - a) / 2, mid = (a + b) / 2;
  rule.nodes = (rule.nodes.array() * half + mid).matrix();
  rule.weights *= half;
  return rule;
}

}  // namespace buckle::numerics
