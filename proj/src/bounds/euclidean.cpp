#include "buckle/bounds/euclidean.hpp"

#include <cmath>
#include <string>

namespace buckle::bounds {

namespace {

void require_euclidean(const Spectrum& s) {
  if (s.geometry() != Geometry::euclidean) throw BoundsError("Euclidean bound needs a euclidean spectrum");
}

void require_residual_index(const Spectrum& s, int k) {
  if (k < 1 || static_cast<std::size_t>(k) + 1 > s.size()) {
    throw BoundsError("k = " + std::to_string(k) + " needs 1 <= k <= " + std::to_string(s.size() - 1));
  }
}

void require_bound_index(const Spectrum& s, int k) {
  if (k < 1 || static_cast<std::size_t>(k) > s.size()) {
    throw BoundsError("k = " + std::to_string(k) + " needs 1 <= k <= " + std::to_string(s.size()));
  }
}

bool nonincreasing(std::span<const double> v) {
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i] > v[i - 1]) return false;
  return true;
}

bool nondecreasing(std::span<const double> v) {
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i] < v[i - 1]) return false;
  return true;
}

bool nonnegative(std::span<const double> v) {
  for (double x : v)
    if (x < 0) return false;
  return true;
}

}  // namespace

long long coefficient_C(int l, int n) {
  if (l < 2 || n < 2) throw BoundsError("coefficient C needs l >= 2 and n >= 2");
  const long long ll = l, nn = n;
  return 2 * ll * ll + (nn - 4) * ll + 2 - nn;
}

EuclideanTerms thm11_terms(const Spectrum& spectrum, int k) {
  require_euclidean(spectrum);
  require_residual_index(spectrum, k);
  const int l = spectrum.order();
  const int n = spectrum.dimension();
  const double next = spectrum.lambda(static_cast<std::size_t>(k) + 1);
  const double p_low = double(l - 2) / double(l - 1);
  const double p_root = 1.0 / double(l - 1);

  EuclideanTerms t;
  for (int i = 1; i <= k; ++i) {
    const double li = spectrum.lambda(static_cast<std::size_t>(i));
    const double g = next - li;
    t.lhs += g * g;
    t.quadratic += g * g * std::pow(li, p_low);
    t.linear += g * std::pow(li, p_root);
  }
  const double c = static_cast<double>(coefficient_C(l, n));
  t.rhs = (2.0 / n) * std::sqrt(c) * std::sqrt(t.quadratic) * std::sqrt(t.linear);
  return t;
}

double thm11_residual(const Spectrum& spectrum, int k) {
  const EuclideanTerms t = thm11_terms(spectrum, k);
  return t.lhs - t.rhs;
}

EuclideanBounds cor11_bounds(const Spectrum& spectrum, int k) {
  require_euclidean(spectrum);
  require_bound_index(spectrum, k);
  const int l = spectrum.order();
  const double n = spectrum.dimension();
  const double kk = k;
  const double c = static_cast<double>(coefficient_C(l, spectrum.dimension()));

  double s1 = 0, sum_low = 0, sum_root = 0;
  for (int i = 1; i <= k; ++i) {
    const double li = spectrum.lambda(static_cast<std::size_t>(i));
    s1 += li;
    sum_low += std::pow(li, double(l - 2) / double(l - 1));
    sum_root += std::pow(li, 1.0 / double(l - 1));
  }
  const double mean = s1 / kk;
  double variance = 0;
  for (int i = 1; i <= k; ++i) {
    const double d = spectrum.lambda(static_cast<std::size_t>(i)) - mean;
    variance += d * d;
  }
  variance /= kk;

  EuclideanBounds out;
  const double shift = 2.0 * c * sum_low * sum_root / (kk * kk * n * n);
  const double disc_a = shift * shift - variance;
  if (disc_a >= 0) out.bound_a = mean + shift + std::sqrt(disc_a);

  const double ratio = 2.0 * c / (n * n);
  const double disc_b = (ratio * mean) * (ratio * mean) - (1.0 + 2.0 * ratio) * variance;
  if (disc_b >= 0) out.bound_b = (1.0 + ratio) * mean + std::sqrt(disc_b);
  return out;
}

double chengyang_residual(const Spectrum& spectrum, int k) {
  require_euclidean(spectrum);
  if (spectrum.order() != 2) throw BoundsError("the order-two comparator needs l = 2");
  require_residual_index(spectrum, k);
  const double n = spectrum.dimension();
  const double next = spectrum.lambda(static_cast<std::size_t>(k) + 1);
  double lhs = 0, lin = 0;
  for (int i = 1; i <= k; ++i) {
    const double li = spectrum.lambda(static_cast<std::size_t>(i));
    const double g = next - li;
    lhs += g * g;
    lin += g * li;
  }
  return lhs - 4.0 * (n + 2.0) / (n * n) * lin;
}

double lemma22_residual(std::span<const double> a, std::span<const double> b, std::span<const double> c) {
  if (a.empty() || a.size() != b.size() || a.size() != c.size()) {
    throw BoundsError("lemma22_residual: sequences must be nonempty and of equal length");
  }
  if (!nonnegative(a) || !nonnegative(b) || !nonnegative(c)) {
    throw BoundsError("lemma22_residual: sequences must be nonnegative");
  }
  if (!nonincreasing(a) || !nondecreasing(b) || !nondecreasing(c)) {
    throw BoundsError("lemma22_residual: need a nonincreasing, b and c nondecreasing");
  }
  // Equal to (sum a^2)(sum abc) - (sum a^2 b)(sum ac), summed over pairs
  //   sum_{i<j} a_i a_j (b_j - b_i)(a_i c_j - a_j c_i),
  // so every term keeps its sign in floating point and no cancellation occurs.
  double r = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) r += a[i] * a[j] * (b[j] - b[i]) * (a[i] * c[j] - a[j] * c[i]);
  return r;
}

double reverse_chebyshev_residual(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || a.size() != b.size()) {
    throw BoundsError("reverse_chebyshev_residual: sequences must be nonempty and of equal length");
  }
  if (!nondecreasing(a) || !nonincreasing(b)) {
    throw BoundsError("reverse_chebyshev_residual: need a nondecreasing and b nonincreasing");
  }
  // Pairwise form of (1/m)(sum a)(sum b) - sum ab: (1/m) sum_{i<j} (a_j - a_i)(b_i - b_j).
  double r = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) r += (a[j] - a[i]) * (b[i] - b[j]);
  return r / double(a.size());
}

}  // namespace buckle::bounds
