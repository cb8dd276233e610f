#pragma once

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace buckle::numerics {

using Int128 = __int128;

/// Raised when an exact integer operation would leave the 128-bit range.
class IntegerOverflow : public std::overflow_error {
 public:
  explicit IntegerOverflow(const std::string& what) : std::overflow_error(what) {}
};

Int128 checked_add(Int128 a, Int128 b);
Int128 checked_mul(Int128 a, Int128 b);
std::string to_string(Int128 v);

/// Exact polynomial with 128-bit integer coefficients in ascending powers.
/// Every arithmetic step is overflow-checked; nothing wraps.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  IntPolynomial(std::initializer_list<long long> coeffs);
  explicit IntPolynomial(std::vector<Int128> coeffs);

  const std::vector<Int128>& coefficients() const { return coeffs_; }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Int128 coefficient(int power) const;
  Int128 leading() const { return coeffs_.empty() ? Int128(0) : coeffs_.back(); }

  /// Value at a real argument (Horner, in double).
  double evaluate(double t) const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;
  friend IntPolynomial operator+(const IntPolynomial& p, const IntPolynomial& q);
  friend IntPolynomial operator-(const IntPolynomial& p, const IntPolynomial& q);
  friend IntPolynomial operator*(const IntPolynomial& p, const IntPolynomial& q);
  friend IntPolynomial operator*(long long s, const IntPolynomial& p);

  /// Human-readable form in the variable `var`, highest power first.
  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();

  std::vector<Int128> coeffs_;
};

}  // namespace buckle::numerics
