#pragma once

#include "buckle/core/spectrum.hpp"

#include <string>
#include <variant>
#include <vector>

namespace buckle {

struct Interval {
  double length = 1.0;
};

/// Axis-aligned box [0, s_1] x ... x [0, s_d].
struct Rectangle {
  std::vector<double> sides;
};

struct Disc {
  double radius = 1.0;
};

/// Geodesic ball {theta <= polar_angle} on the unit two-sphere.
struct SphericalCap {
  double polar_angle = 1.0;
};

/// Canonical domain. Construct through the make_* helpers, which enforce
/// positive sizes and 0 < polar_angle < pi.
class DomainSpec {
 public:
  using Variant = std::variant<Interval, Rectangle, Disc, SphericalCap>;

  const Variant& variant() const { return value_; }

  template <typename T>
  bool is() const {
    return std::holds_alternative<T>(value_);
  }
  template <typename T>
  const T& as() const {
    return std::get<T>(value_);
  }

  /// Spatial dimension of the domain: 1 for intervals, the number of sides
  /// for rectangles, 2 for discs and caps.
  int spatial_dimension() const;
  Geometry geometry() const { return is<SphericalCap>() ? Geometry::sphere : Geometry::euclidean; }
  bool is_radial() const { return is<Disc>() || is<SphericalCap>(); }

  /// Short kind tag: "interval", "rectangle", "disc" or "cap".
  std::string kind() const;

  /// Same shape dilated by factor t. Caps cannot be dilated.
  DomainSpec dilated(double t) const;

  friend bool operator==(const DomainSpec& a, const DomainSpec& b);

 private:
  friend DomainSpec make_interval(double);
  friend DomainSpec make_rectangle(std::vector<double>);
  friend DomainSpec make_disc(double);
  friend DomainSpec make_cap(double);

  explicit DomainSpec(Variant v) : value_(std::move(v)) {}
  Variant value_;
};

DomainSpec make_interval(double length);
DomainSpec make_rectangle(std::vector<double> sides);
DomainSpec make_disc(double radius);
DomainSpec make_cap(double polar_angle);

}  // namespace buckle
