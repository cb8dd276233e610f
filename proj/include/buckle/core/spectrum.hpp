#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace buckle {

enum class Geometry { euclidean, sphere };

std::string_view to_string(Geometry g);
Geometry geometry_from_string(std::string_view s);

/// Raised for spectra or parameters that break a documented invariant.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

/// Ascending list of positive buckling eigenvalues, repeated by multiplicity,
/// tagged with the ambient geometry, dimension n and order l.
///
/// Instances only come out of validate_spectrum and are immutable afterwards.
class Spectrum {
 public:
  Geometry geometry() const { return geometry_; }
  int dimension() const { return dimension_; }
  int order() const { return order_; }
  std::span<const double> values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  /// 1-based access matching the usual Lambda_i indexing.
  double lambda(std::size_t i) const { return values_.at(i - 1); }

  /// Set when validation had to reorder entries that were out of order by
  /// more than the round-off tolerance.
  bool resorted() const { return resorted_; }

  /// Copy with every eigenvalue multiplied by t > 0.
  Spectrum scaled(double t) const;

  /// Equality of the data; the resort flag is not compared.
  friend bool operator==(const Spectrum& a, const Spectrum& b) {
    return a.geometry_ == b.geometry_ && a.dimension_ == b.dimension_ && a.order_ == b.order_ && a.values_ == b.values_;
  }

 private:
  friend Spectrum validate_spectrum(Geometry, int, int, std::vector<double>);

  Geometry geometry_ = Geometry::euclidean;
  int dimension_ = 2;
  int order_ = 2;
  std::vector<double> values_;
  bool resorted_ = false;
};

/// Relative tolerance under which a descending pair is treated as round-off.
inline constexpr double kOrderingTolerance = 1e-12;

/// Checks n >= 2, l >= 2, a nonempty list of finite positive values, and sorts
/// ascending. Throws ValidationError otherwise.
Spectrum validate_spectrum(Geometry geometry, int dimension, int order, std::vector<double> values);
inline Spectrum validate_spectrum(const Spectrum& s) {
  return validate_spectrum(s.geometry(), s.dimension(), s.order(), {s.values().begin(), s.values().end()});
}

}  // namespace buckle
