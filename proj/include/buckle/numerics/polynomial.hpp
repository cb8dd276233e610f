#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

namespace buckle::numerics {

/// Real polynomial in the monomial basis, coefficients in ascending powers.
/// Trailing zero coefficients are trimmed; the zero polynomial has no
/// coefficients.
template <typename Scalar>
class RealPolynomial {
 public:
  RealPolynomial() = default;
  RealPolynomial(std::initializer_list<Scalar> coeffs) : coeffs_(coeffs) { trim(); }
  explicit RealPolynomial(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static RealPolynomial constant(Scalar c) { return RealPolynomial({c}); }
  static RealPolynomial monomial(int power, Scalar c = Scalar(1)) {
    std::vector<Scalar> v(static_cast<std::size_t>(power) + 1, Scalar(0));
    v.back() = c;
    return RealPolynomial(std::move(v));
  }

  const std::vector<Scalar>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Scalar coefficient(int power) const {
    return power >= 0 && power <= degree() ? coeffs_[static_cast<std::size_t>(power)] : Scalar(0);
  }

  friend bool operator==(const RealPolynomial&, const RealPolynomial&) = default;

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == Scalar(0)) coeffs_.pop_back();
  }

  std::vector<Scalar> coeffs_;
};

template <typename Scalar>
RealPolynomial<Scalar> poly_diff(const RealPolynomial<Scalar>& p) {
  const auto& c = p.coefficients();
  if (c.size() <= 1) return {};
  std::vector<Scalar> d(c.size() - 1);
  for (std::size_t k = 1; k < c.size(); ++k) d[k - 1] = Scalar(k) * c[k];
  return RealPolynomial<Scalar>(std::move(d));
}

template <typename Scalar>
RealPolynomial<Scalar> poly_mul(const RealPolynomial<Scalar>& p, const RealPolynomial<Scalar>& q) {
  if (p.is_zero() || q.is_zero()) return {};
  const auto& a = p.coefficients();
  const auto& b = q.coefficients();
  std::vector<Scalar> r(a.size() + b.size() - 1, Scalar(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return RealPolynomial<Scalar>(std::move(r));
}

template <typename Scalar>
RealPolynomial<Scalar> poly_add(const RealPolynomial<Scalar>& p, const RealPolynomial<Scalar>& q, Scalar q_scale = 1) {
  const auto& a = p.coefficients();
  const auto& b = q.coefficients();
  std::vector<Scalar> r(std::max(a.size(), b.size()), Scalar(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += q_scale * b[i];
  return RealPolynomial<Scalar>(std::move(r));
}

/// Horner evaluation.
template <typename Scalar>
Scalar poly_eval(const RealPolynomial<Scalar>& p, Scalar x) {
  Scalar acc = 0;
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

/// p(a + b t) as a polynomial in t.
template <typename Scalar>
RealPolynomial<Scalar> poly_compose_affine(const RealPolynomial<Scalar>& p, Scalar a, Scalar b) {
  const RealPolynomial<Scalar> inner({a, b});
  RealPolynomial<Scalar> acc;
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = poly_add(poly_mul(acc, inner), RealPolynomial<Scalar>::constant(*it));
  return acc;
}

/// Polynomial stored as a Chebyshev series sum_k c_k T_k(y) on [-1, 1].
///
/// Used for the Galerkin bases: products, derivatives and multiplication by
/// low-degree factors stay well conditioned at the degrees the solver reaches,
/// where monomial coefficients of the same polynomials cancel catastrophically.
template <typename Scalar>
class ChebSeries {
 public:
  ChebSeries() = default;
  explicit ChebSeries(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static ChebSeries basis(int k) {
    std::vector<Scalar> v(static_cast<std::size_t>(k) + 1, Scalar(0));
    v.back() = Scalar(1);
    return ChebSeries(std::move(v));
  }
  static ChebSeries constant(Scalar c) { return ChebSeries(std::vector<Scalar>{c}); }
  /// a + b*y
  static ChebSeries linear(Scalar a, Scalar b) { return ChebSeries(std::vector<Scalar>{a, b}); }

  /// Converts a monomial polynomial in y.
  static ChebSeries from_monomial(const RealPolynomial<Scalar>& p) {
    ChebSeries acc;
    const auto& c = p.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc.times_y() + constant(*it);
    return acc;
  }

  const std::vector<Scalar>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  /// Clenshaw evaluation at y.
  Scalar operator()(Scalar y) const {
    Scalar b1 = 0, b2 = 0;
    for (std::size_t k = coeffs_.size(); k-- > 1;) {
      const Scalar b0 = Scalar(2) * y * b1 - b2 + coeffs_[k];
      b2 = b1;
      b1 = b0;
    }
    return coeffs_.empty() ? Scalar(0) : y * b1 - b2 + coeffs_[0];
  }

  /// d/dy via c'_{k-1} = c'_{k+1} + 2 k c_k, halving the k = 0 term.
  ChebSeries derivative() const {
    const int n = degree();
    if (n <= 0) return {};
    std::vector<Scalar> d(static_cast<std::size_t>(n) + 2, Scalar(0));
    for (int k = n; k >= 1; --k)
      d[static_cast<std::size_t>(k - 1)] = d[static_cast<std::size_t>(k + 1)] + Scalar(2 * k) * coeffs_[static_cast<std::size_t>(k)];
    d[0] /= Scalar(2);
    d.resize(static_cast<std::size_t>(n));
    return ChebSeries(std::move(d));
  }

  /// y * p, from y T_k = (T_{k+1} + T_{|k-1|}) / 2.
  ChebSeries times_y() const {
    if (coeffs_.empty()) return {};
    std::vector<Scalar> r(coeffs_.size() + 1, Scalar(0));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      if (k == 0) {
        r[1] += coeffs_[0];
      } else {
        r[k + 1] += coeffs_[k] / Scalar(2);
        r[k - 1] += coeffs_[k] / Scalar(2);
      }
    }
    return ChebSeries(std::move(r));
  }

  friend ChebSeries operator+(const ChebSeries& p, const ChebSeries& q) {
    std::vector<Scalar> r(std::max(p.coeffs_.size(), q.coeffs_.size()), Scalar(0));
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i) r[i] += p.coeffs_[i];
    for (std::size_t i = 0; i < q.coeffs_.size(); ++i) r[i] += q.coeffs_[i];
    return ChebSeries(std::move(r));
  }
  friend ChebSeries operator-(const ChebSeries& p, const ChebSeries& q) { return p + q * Scalar(-1); }
  friend ChebSeries operator*(const ChebSeries& p, Scalar s) {
    std::vector<Scalar> r = p.coeffs_;
    for (auto& c : r) c *= s;
    return ChebSeries(std::move(r));
  }
  friend ChebSeries operator*(Scalar s, const ChebSeries& p) { return p * s; }

  /// Product via T_i T_j = (T_{i+j} + T_{|i-j|}) / 2.
  friend ChebSeries operator*(const ChebSeries& p, const ChebSeries& q) {
    if (p.is_zero() || q.is_zero()) return {};
    std::vector<Scalar> r(p.coeffs_.size() + q.coeffs_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
      for (std::size_t j = 0; j < q.coeffs_.size(); ++j) {
        const Scalar half = p.coeffs_[i] * q.coeffs_[j] / Scalar(2);
        r[i + j] += half;
        r[i > j ? i - j : j - i] += half;
      }
    }
    return ChebSeries(std::move(r));
  }

  /// Monomial coefficients in y. Only sensible for low degrees.
  RealPolynomial<Scalar> to_monomial() const {
    RealPolynomial<Scalar> tkm1 = RealPolynomial<Scalar>::constant(1);
    RealPolynomial<Scalar> tk({Scalar(0), Scalar(1)});
    RealPolynomial<Scalar> acc;
    const RealPolynomial<Scalar> two_y({Scalar(0), Scalar(2)});
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      const RealPolynomial<Scalar>& t = (k == 0) ? tkm1 : tk;
      acc = poly_add(acc, t, coeffs_[k]);
      if (k >= 1) {
        RealPolynomial<Scalar> next = poly_add(poly_mul(two_y, tk), tkm1, Scalar(-1));
        tkm1 = std::move(tk);
        tk = std::move(next);
      }
    }
    return acc;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == Scalar(0)) coeffs_.pop_back();
  }

  std::vector<Scalar> coeffs_;
};

}  // namespace buckle::numerics
