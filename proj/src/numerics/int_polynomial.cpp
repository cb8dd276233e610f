#include "buckle/numerics/int_polynomial.hpp"

#include <algorithm>
#include <cstddef>

namespace buckle::numerics {

Int128 checked_add(Int128 a, Int128 b) {
  Int128 r;
  if (__builtin_add_overflow(a, b, &r)) throw IntegerOverflow("integer polynomial coefficient overflow (add)");
  return r;
}

Int128 checked_mul(Int128 a, Int128 b) {
  Int128 r;
  if (__builtin_mul_overflow(a, b, &r)) throw IntegerOverflow("integer polynomial coefficient overflow (mul)");
  return r;
}

std::string to_string(Int128 v) {
  if (v == 0) return "0";
  const bool negative = v < 0;
  // Work with the negative magnitude so the minimum value is representable.
  std::string digits;
  Int128 x = negative ? v : -v;
  while (x != 0) {
    const int d = -static_cast<int>(x % 10);
    digits.push_back(static_cast<char>('0' + d));
    x /= 10;
  }
  if (negative) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

IntPolynomial::IntPolynomial(std::initializer_list<long long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long long c : coeffs) coeffs_.push_back(c);
  trim();
}

IntPolynomial::IntPolynomial(std::vector<Int128> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Int128 IntPolynomial::coefficient(int power) const {
  return power >= 0 && power <= degree() ? coeffs_[static_cast<std::size_t>(power)] : Int128(0);
}

double IntPolynomial::evaluate(double t) const {
  double acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + static_cast<double>(*it);
  return acc;
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial operator+(const IntPolynomial& p, const IntPolynomial& q) {
  std::vector<Int128> r(std::max(p.coeffs_.size(), q.coeffs_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = checked_add(p.coefficient(int(i)), q.coefficient(int(i)));
  return IntPolynomial(std::move(r));
}

IntPolynomial operator-(const IntPolynomial& p, const IntPolynomial& q) { return p + (-1) * q; }

IntPolynomial operator*(const IntPolynomial& p, const IntPolynomial& q) {
  if (p.is_zero() || q.is_zero()) return {};
  std::vector<Int128> r(p.coeffs_.size() + q.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < q.coeffs_.size(); ++j)
      r[i + j] = checked_add(r[i + j], checked_mul(p.coeffs_[i], q.coeffs_[j]));
  return IntPolynomial(std::move(r));
}

IntPolynomial operator*(long long s, const IntPolynomial& p) {
  std::vector<Int128> r(p.coeffs_.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = checked_mul(Int128(s), p.coeffs_[i]);
  return IntPolynomial(std::move(r));
}

std::string IntPolynomial::to_string(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const Int128 c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    const Int128 mag = c < 0 ? -c : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1 || k == 0) out += numerics::to_string(mag);
    if (k >= 1) out += var;
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

}  // namespace buckle::numerics
