#include "buckle/core/domain.hpp"

#include <cmath>
#include <numbers>

namespace buckle {

namespace {

void require_positive(double v, const char* what) {
  if (!std::isfinite(v) || !(v > 0)) throw ValidationError(std::string(what) + " must be a finite positive number");
}

}  // namespace

DomainSpec make_interval(double length) {
  require_positive(length, "interval length");
  return DomainSpec(Interval{length});
}

DomainSpec make_rectangle(std::vector<double> sides) {
  if (sides.empty()) throw ValidationError("rectangle needs at least one side");
  for (double s : sides) require_positive(s, "rectangle side");
  return DomainSpec(Rectangle{std::move(sides)});
}

DomainSpec make_disc(double radius) {
  require_positive(radius, "disc radius");
  return DomainSpec(Disc{radius});
}

DomainSpec make_cap(double polar_angle) {
  if (!std::isfinite(polar_angle) || !(polar_angle > 0) || !(polar_angle < std::numbers::pi)) {
    throw ValidationError("cap polar angle must lie strictly inside (0, pi)");
  }
  return DomainSpec(SphericalCap{polar_angle});
}

int DomainSpec::spatial_dimension() const {
  if (is<Interval>()) return 1;
  if (is<Rectangle>()) return static_cast<int>(as<Rectangle>().sides.size());
  return 2;
}

std::string DomainSpec::kind() const {
  if (is<Interval>()) return "interval";
  if (is<Rectangle>()) return "rectangle";
  if (is<Disc>()) return "disc";
  return "cap";
}

DomainSpec DomainSpec::dilated(double t) const {
  require_positive(t, "dilation factor");
  if (is<Interval>()) return make_interval(as<Interval>().length * t);
  if (is<Rectangle>()) {
    std::vector<double> sides = as<Rectangle>().sides;
    for (double& s : sides) s *= t;
    return make_rectangle(std::move(sides));
  }
  if (is<Disc>()) return make_disc(as<Disc>().radius * t);
  throw ValidationError("spherical caps cannot be dilated");
}

bool operator==(const DomainSpec& a, const DomainSpec& b) {
  if (a.value_.index() != b.value_.index()) return false;
  if (a.is<Interval>()) return a.as<Interval>().length == b.as<Interval>().length;
  if (a.is<Rectangle>()) return a.as<Rectangle>().sides == b.as<Rectangle>().sides;
  if (a.is<Disc>()) return a.as<Disc>().radius == b.as<Disc>().radius;
  return a.as<SphericalCap>().polar_angle == b.as<SphericalCap>().polar_angle;
}

}  // namespace buckle
