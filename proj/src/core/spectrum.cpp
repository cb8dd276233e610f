#include "buckle/core/spectrum.hpp"

#include <algorithm>
#include <cmath>

namespace buckle {

std::string_view to_string(Geometry g) { return g == Geometry::euclidean ? "euclidean" : "sphere"; }

Geometry geometry_from_string(std::string_view s) {
  if (s == "euclidean") return Geometry::euclidean;
  if (s == "sphere") return Geometry::sphere;
  throw ValidationError("unknown geometry '" + std::string(s) + "'");
}

Spectrum validate_spectrum(Geometry geometry, int dimension, int order, std::vector<double> values) {
  if (dimension < 2) throw ValidationError("spectrum dimension must be >= 2, got " + std::to_string(dimension));
  if (order < 2) throw ValidationError("spectrum order must be >= 2, got " + std::to_string(order));
  if (values.empty()) throw ValidationError("spectrum has no eigenvalues");
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i]) || !(values[i] > 0)) {
      throw ValidationError("eigenvalue " + std::to_string(i + 1) + " is not a finite positive number");
    }
  }

  bool resorted = false;
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] < values[i - 1] * (1 - kOrderingTolerance)) resorted = true;
  }
  std::stable_sort(values.begin(), values.end());

  Spectrum s;
  s.geometry_ = geometry;
  s.dimension_ = dimension;
  s.order_ = order;
  s.values_ = std::move(values);
  s.resorted_ = resorted;
  return s;
}

Spectrum Spectrum::scaled(double t) const {
  std::vector<double> v(values_.begin(), values_.end());
  for (double& x : v) x *= t;
  return validate_spectrum(geometry_, dimension_, order_, std::move(v));
}

}  // namespace buckle
