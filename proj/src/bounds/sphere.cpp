#include "buckle/bounds/sphere.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace buckle::bounds {

namespace {

void require_sphere(const Spectrum& s) {
  if (s.geometry() != Geometry::sphere) throw BoundsError("sphere bound needs a sphere spectrum");
}

void require_rho(double lambda, int l, int n) {
  const double rho = std::pow(lambda, 1.0 / double(l - 1));
  if (!(rho - double(n - 2) > 0)) {
    throw BoundsError("spectrum incompatible with sphere bound: Lambda^{1/(l-1)} = " + std::to_string(rho) +
                      " is not above n - 2 = " + std::to_string(n - 2));
  }
}

void require_params(int l, int n) {
  if (l < 2 || n < 2) throw BoundsError("sphere recursion needs l >= 2 and n >= 2");
}

const IntPolynomial& t_poly() {
  static const IntPolynomial t{0, 1};
  return t;
}

}  // namespace

std::pair<std::vector<IntPolynomial>, std::vector<IntPolynomial>> fg_second_order(int q_max, int n) {
  const long long nn = n;
  std::vector<IntPolynomial> f{IntPolynomial{1}}, g{IntPolynomial{1}};
  if (q_max >= 1) {
    f.push_back(IntPolynomial{-(nn + 2), 1});
    g.push_back(IntPolynomial{nn - 2, 3});
  }
  const IntPolynomial lead{-2, 2};                // 2t - 2
  const IntPolynomial tail{-nn * (nn - 2), 2, 1};  // t^2 + 2t - n(n-2)
  for (int q = 2; q <= q_max; ++q) {
    f.push_back(lead * f[q - 1] - tail * f[q - 2]);
    g.push_back(lead * g[q - 1] - tail * g[q - 2]);
  }
  return {f, g};
}

std::pair<std::vector<IntPolynomial>, std::vector<IntPolynomial>> fg_coupled(int q_max, int n) {
  const long long nn = n;
  std::vector<IntPolynomial> f{IntPolynomial{1}}, g{IntPolynomial{1}};
  const IntPolynomial t_minus_n{-nn, 1};
  const IntPolynomial t_plus{nn - 2, 1};
  for (int q = 1; q <= q_max; ++q) {
    f.push_back(t_minus_n * f[q - 1] - 2 * g[q - 1]);
    g.push_back(t_plus * g[q - 1] + 2 * (t_poly() * f[q - 1]));
  }
  return {f, g};
}

SphereRecursion fg_polys(int l, int n) {
  require_params(l, n);
  SphereRecursion r;
  r.n = n;
  r.l = l;
  auto [f, g] = fg_second_order(l - 2, n);
  const auto [f2, g2] = fg_coupled(l - 2, n);
  if (f != f2 || g != g2) {
    throw std::logic_error("F/G recursions disagree for l = " + std::to_string(l) + ", n = " + std::to_string(n));
  }
  r.combination = t_poly() * f.back() - g.back();
  if (r.combination.degree() != l - 1 || r.combination.leading() != 1) {
    throw std::logic_error("t F_{l-2} - G_{l-2} is not monic of degree l - 1");
  }
  for (int j = 0; j <= l - 2; ++j) r.a.push_back(r.combination.coefficient(j));
  r.f = std::move(f);
  r.g = std::move(g);
  return r;
}

std::vector<Int128> aj_coefficients(int l, int n) { return fg_polys(l, n).a; }

namespace {

double h_from_coefficients(double lambda, int l, int n, const std::vector<Int128>& a) {
  require_rho(lambda, l, n);
  const double rho = std::pow(lambda, 1.0 / double(l - 1));
  double h = rho * (1.0 - 1.0 / (rho - double(n - 2)));
  double power = 1.0;
  for (Int128 aj : a) {
    h += std::abs(static_cast<double>(aj)) * power;
    power *= rho;
  }
  return h;
}

}  // namespace

double h_value(double lambda, int l, int n) {
  require_params(l, n);
  return h_from_coefficients(lambda, l, n, aj_coefficients(l, n));
}

SphereTerms thm12_terms(const Spectrum& spectrum, int k) {
  require_sphere(spectrum);
  if (k < 1 || static_cast<std::size_t>(k) + 1 > spectrum.size()) {
    throw BoundsError("k = " + std::to_string(k) + " needs 1 <= k <= " + std::to_string(spectrum.size() - 1));
  }
  const int l = spectrum.order(), n = spectrum.dimension();
  const double c = n - 2;
  const auto a = aj_coefficients(l, n);
  const double next = spectrum.lambda(static_cast<std::size_t>(k) + 1);
  require_rho(next, l, n);

  SphereTerms t;
  for (int i = 1; i <= k; ++i) {
    const double li = spectrum.lambda(static_cast<std::size_t>(i));
    const double h = h_from_coefficients(li, l, n, a);
    const double rho = std::pow(li, 1.0 / double(l - 1));
    const double g = next - li;
    t.lhs += g * g * (2.0 + c / (rho - c));
    t.weighted += g * g * h;
    t.linear += g * (rho + c * c / 4.0);
  }
  return t;
}

double thm12_residual(const Spectrum& spectrum, int k, double delta) {
  if (!(delta > 0)) throw BoundsError("delta must be positive");
  const SphereTerms t = thm12_terms(spectrum, k);
  return delta * t.weighted + t.linear / delta - t.lhs;
}

double optimal_delta(const Spectrum& spectrum, int k) {
  const SphereTerms t = thm12_terms(spectrum, k);
  if (t.linear == 0 && t.weighted == 0) throw BoundsError("degenerate gaps: every Lambda_i equals Lambda_{k+1}");
  if (!(t.weighted > 0) || !(t.linear > 0)) throw BoundsError("no finite minimizing delta for these gaps");
  return std::sqrt(t.linear) / std::sqrt(t.weighted);
}

SphereBound cor12_bound(const Spectrum& spectrum, int k) {
  require_sphere(spectrum);
  if (k < 1 || static_cast<std::size_t>(k) > spectrum.size()) {
    throw BoundsError("k = " + std::to_string(k) + " needs 1 <= k <= " + std::to_string(spectrum.size()));
  }
  const int l = spectrum.order(), n = spectrum.dimension();
  const double c = n - 2;
  const auto a = aj_coefficients(l, n);
  const double kk = k;

  SphereBound out;
  const double rho_k = std::pow(spectrum.lambda(static_cast<std::size_t>(k)), 1.0 / double(l - 1));
  require_rho(spectrum.lambda(static_cast<std::size_t>(k)), l, n);
  out.s_k = 2.0 + c / (rho_k - c);

  double s1 = 0, s2 = 0, st = 0, stl = 0;
  for (int i = 1; i <= k; ++i) {
    const double li = spectrum.lambda(static_cast<std::size_t>(i));
    const double rho = std::pow(li, 1.0 / double(l - 1));
    const double ti = h_from_coefficients(li, l, n, a) * (rho + c * c / 4.0);
    out.t.push_back(ti);
    s1 += li;
    s2 += li * li;
    st += ti;
    stl += ti * li;
  }
  const double s_sq = out.s_k * out.s_k;
  out.a = s1 / kk + 2.0 / (kk * s_sq) * st;
  out.b = s2 / kk + 4.0 / (kk * s_sq) * stl;
  const double disc = out.a * out.a - out.b;
  if (disc >= 0) out.bound = out.a + std::sqrt(disc);
  return out;
}

double wx_factor_sharp(double lambda, int n, double delta) {
  const double c = n - 2;
  return delta + delta * lambda * (1.0 - 1.0 / (lambda - c)) - c / (lambda - c);
}

double wx_factor_older(double lambda, int n, double delta) {
  const double c = n - 2;
  return delta * lambda + delta * delta * (lambda - c) / (4.0 * (delta * lambda + c));
}

WxComparison wx_comparator(const Spectrum& spectrum, int k, double delta) {
  require_sphere(spectrum);
  if (spectrum.order() != 2) throw BoundsError("the order-two comparison needs l = 2");
  if (!(delta > 0)) throw BoundsError("delta must be positive");
  if (k < 1 || static_cast<std::size_t>(k) + 1 > spectrum.size()) {
    throw BoundsError("k = " + std::to_string(k) + " needs 1 <= k <= " + std::to_string(spectrum.size() - 1));
  }
  const int n = spectrum.dimension();
  const double c = n - 2;
  const double next = spectrum.lambda(static_cast<std::size_t>(k) + 1);
  WxComparison out;
  double tail = 0;
  for (int i = 1; i <= k; ++i) {
    const double li = spectrum.lambda(static_cast<std::size_t>(i));
    if (!(li > c)) throw BoundsError("spectrum incompatible with sphere bound: Lambda_i <= n - 2");
    const double g = next - li;
    out.lhs += 2.0 * g * g;
    out.rhs_sharp += g * g * wx_factor_sharp(li, n, delta);
    out.rhs_older += g * g * wx_factor_older(li, n, delta);
    tail += g * (li + c * c / 4.0);
  }
  out.rhs_sharp += tail / delta;
  out.rhs_older += tail / delta;
  return out;
}

std::vector<double> delta_grid() {
  std::vector<double> grid;
  for (int i = 0; i <= 100; ++i) grid.push_back(std::pow(10.0, -2.0 + i / 25.0));
  return grid;
}

}  // namespace buckle::bounds
