#include "buckle/bounds/report.hpp"

#include "buckle/bounds/sphere.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace buckle::bounds {

namespace {

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

std::optional<double> ratio(const std::optional<double>& bound, const std::optional<double>& next) {
  if (!bound || !next) return std::nullopt;
  return *bound / *next;
}

void fill_euclidean(const Spectrum& s, BoundEntry& e) {
  if (e.lambda_next_computed) e.thm_residual = thm11_residual(s, e.k);
  const EuclideanBounds b = cor11_bounds(s, e.k);
  e.bound_a = b.bound_a;
  e.bound_b = b.bound_b;
}

void fill_sphere(const Spectrum& s, BoundEntry& e) {
  if (e.lambda_next_computed) {
    const SphereTerms t = thm12_terms(s, e.k);
    auto at = [&](double delta) { return delta * t.weighted + t.linear / delta - t.lhs; };
    double grid_min = std::numeric_limits<double>::infinity();
    for (double d : delta_grid()) grid_min = std::min(grid_min, at(d));
    if (t.linear > 0 && t.weighted > 0) {
      const double ds = std::sqrt(t.linear) / std::sqrt(t.weighted);
      e.delta_star = ds;
      e.residual_at_delta_star = at(ds);
      grid_min = std::min(grid_min, at(ds));
    } else {
      // Every gap vanishes: both sides are zero for all delta.
      e.residual_at_delta_star = 0.0;
    }
    e.thm_residual = -*e.residual_at_delta_star;
    e.residual_grid_min = grid_min;
  }
  e.bound_a = cor12_bound(s, e.k).bound;
}

}  // namespace

int default_k_max(const Spectrum& spectrum) {
  return spectrum.size() > 1 ? static_cast<int>(spectrum.size()) - 1 : 1;
}

BoundReport build_report(const Spectrum& spectrum, int k_max) {
  if (k_max < 1) throw BoundsError("k_max must be >= 1");
  BoundReport report;
  report.geometry = spectrum.geometry();
  report.dimension = spectrum.dimension();
  report.order = spectrum.order();
  const int last = std::min<int>(k_max, static_cast<int>(spectrum.size()));
  for (int k = 1; k <= last; ++k) {
    BoundEntry e;
    e.k = k;
    if (static_cast<std::size_t>(k) < spectrum.size()) e.lambda_next_computed = spectrum.lambda(static_cast<std::size_t>(k) + 1);
    if (spectrum.geometry() == Geometry::euclidean) {
      fill_euclidean(spectrum, e);
    } else {
      fill_sphere(spectrum, e);
    }
    e.tightness_a = ratio(e.bound_a, e.lambda_next_computed);
    e.tightness_b = ratio(e.bound_b, e.lambda_next_computed);
    report.entries.push_back(e);
  }
  return report;
}

std::vector<Violation> verify_spectrum(const Spectrum& spectrum, int k_max, double tol) {
  std::vector<Violation> out;
  const int last = std::min<int>(k_max, static_cast<int>(spectrum.size()) - 1);
  auto check_bound = [&](int k, const char* name, const std::optional<double>& bound, double next) {
    if (!bound) {
      out.push_back({k, name, "undefined (negative discriminant)"});
    } else if (*bound < next * (1.0 - tol)) {
      out.push_back({k, name, "bound " + fmt(*bound) + " < Lambda_{k+1} = " + fmt(next)});
    }
  };
  for (int k = 1; k <= last; ++k) {
    const double next = spectrum.lambda(static_cast<std::size_t>(k) + 1);
    if (spectrum.geometry() == Geometry::euclidean) {
      const EuclideanTerms t = thm11_terms(spectrum, k);
      const double r = t.lhs - t.rhs;
      if (r > tol * t.lhs) out.push_back({k, "inequality", "LHS - RHS = " + fmt(r) + " > " + fmt(tol * t.lhs)});
      const EuclideanBounds b = cor11_bounds(spectrum, k);
      check_bound(k, "bound_a", b.bound_a, next);
      check_bound(k, "bound_b", b.bound_b, next);
      continue;
    }
    try {
      const SphereTerms t = thm12_terms(spectrum, k);
      const double slack = -tol * t.lhs;
      auto at = [&](double delta) { return delta * t.weighted + t.linear / delta - t.lhs; };
      if (t.linear > 0 && t.weighted > 0) {
        const double ds = std::sqrt(t.linear) / std::sqrt(t.weighted);
        if (at(ds) < slack) out.push_back({k, "inequality", "RHS - LHS at delta* = " + fmt(at(ds))});
      }
      for (double d : delta_grid()) {
        if (at(d) < slack) {
          out.push_back({k, "inequality", "RHS - LHS at delta = " + fmt(d) + " is " + fmt(at(d))});
          break;
        }
      }
      check_bound(k, "bound", cor12_bound(spectrum, k).bound, next);
    } catch (const BoundsError& e) {
      out.push_back({k, "precondition", e.what()});
    }
  }
  return out;
}

std::vector<Violation> check_moment_chain(std::span<const double> mu, double lambda, int order, int index, double tol) {
  std::vector<Violation> out;
  if (mu.size() != static_cast<std::size_t>(order)) {
    out.push_back({index, "moments", "expected " + std::to_string(order) + " moments, got " + std::to_string(mu.size())});
    return out;
  }
  if (std::abs(mu[0] - 1.0) > tol) out.push_back({index, "normalization", "mu_1 = " + fmt(mu[0])});
  if (std::abs(mu.back() - lambda) > tol * lambda) {
    out.push_back({index, "top moment", "mu_l = " + fmt(mu.back()) + " vs Lambda = " + fmt(lambda)});
  }
  for (int k = 1; k <= order; ++k) {
    const double m = mu[static_cast<std::size_t>(k - 1)];
    const double cap = std::pow(lambda, double(k - 1) / double(order - 1));
    if (m < -tol) out.push_back({index, "moment sign", "mu_" + std::to_string(k) + " = " + fmt(m)});
    if (m > cap * (1.0 + tol)) {
      out.push_back({index, "moment bound", "mu_" + std::to_string(k) + " = " + fmt(m) + " > " + fmt(cap)});
    }
    if (k > 1 && k < order) {
      const double lo = mu[static_cast<std::size_t>(k - 2)], hi = mu[static_cast<std::size_t>(k)];
      if (m * m > lo * hi + tol * std::max(m * m, 1.0)) {
        out.push_back({index, "log-convexity", "mu_" + std::to_string(k) + "^2 > mu_" + std::to_string(k - 1) + " mu_" +
                                                   std::to_string(k + 1)});
      }
    }
  }
  return out;
}

}  // namespace buckle::bounds
