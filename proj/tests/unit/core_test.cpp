#include "buckle/core/domain.hpp"
#include "buckle/core/solution.hpp"
#include "buckle/core/spectrum.hpp"

#include <gtest/gtest.h>

#include <numbers>

namespace {

using namespace buckle;

TEST(ValidateSpectrum, AcceptsWellFormedInput) {
  const Spectrum s = validate_spectrum(Geometry::euclidean, 2, 2, {1.0, 2.0});
  EXPECT_EQ(s.size(), 2u);
  EXPECT_DOUBLE_EQ(s.lambda(1), 1.0);
  EXPECT_DOUBLE_EQ(s.lambda(2), 2.0);
  EXPECT_FALSE(s.resorted());
}

TEST(ValidateSpectrum, ResortsWithWarningFlag) {
  const Spectrum s = validate_spectrum(Geometry::euclidean, 2, 2, {2.0, 1.0});
  EXPECT_TRUE(s.resorted());
  EXPECT_DOUBLE_EQ(s.lambda(1), 1.0);
  EXPECT_DOUBLE_EQ(s.lambda(2), 2.0);
}

TEST(ValidateSpectrum, RoundOffInversionIsNotFlagged) {
  const Spectrum s = validate_spectrum(Geometry::euclidean, 2, 2, {1.0, 1.0 - 1e-14});
  EXPECT_FALSE(s.resorted());
}

TEST(ValidateSpectrum, RejectsBadInput) {
  EXPECT_THROW(validate_spectrum(Geometry::euclidean, 2, 2, {-1.0}), ValidationError);
  EXPECT_THROW(validate_spectrum(Geometry::euclidean, 2, 2, {0.0}), ValidationError);
  EXPECT_THROW(validate_spectrum(Geometry::euclidean, 2, 2, {}), ValidationError);
  EXPECT_THROW(validate_spectrum(Geometry::euclidean, 1, 2, {1.0}), ValidationError);
  EXPECT_THROW(validate_spectrum(Geometry::euclidean, 2, 1, {1.0}), ValidationError);
  EXPECT_THROW(validate_spectrum(Geometry::euclidean, 2, 2, {std::numeric_limits<double>::infinity()}),
               ValidationError);
}

TEST(ValidateSpectrum, IsIdempotent) {
  const Spectrum s = validate_spectrum(Geometry::sphere, 3, 4, {5.0, 3.0, 3.0, 9.0});
  EXPECT_EQ(validate_spectrum(s), s);
  EXPECT_FALSE(validate_spectrum(s).resorted());
}

TEST(Spectrum, Scaling) {
  const Spectrum s = validate_spectrum(Geometry::euclidean, 2, 2, {1.0, 2.0}).scaled(3.0);
  EXPECT_DOUBLE_EQ(s.lambda(2), 6.0);
  EXPECT_THROW(s.lambda(3), std::out_of_range);
}

TEST(Geometry, StringRoundTrip) {
  EXPECT_EQ(geometry_from_string(to_string(Geometry::sphere)), Geometry::sphere);
  EXPECT_EQ(geometry_from_string("euclidean"), Geometry::euclidean);
  EXPECT_THROW(geometry_from_string("torus"), ValidationError);
}

TEST(DomainSpec, FactoriesValidate) {
  EXPECT_THROW(make_interval(0.0), ValidationError);
  EXPECT_THROW(make_rectangle({1.0, -2.0}), ValidationError);
  EXPECT_THROW(make_disc(-1.0), ValidationError);
  EXPECT_THROW(make_cap(0.0), ValidationError);
  EXPECT_THROW(make_cap(std::numbers::pi), ValidationError);
  EXPECT_NO_THROW(make_cap(1.0));
}

TEST(DomainSpec, Properties) {
  EXPECT_EQ(make_interval(1.0).spatial_dimension(), 1);
  EXPECT_EQ(make_rectangle({1, 2, 3}).spatial_dimension(), 3);
  EXPECT_EQ(make_disc(1.0).spatial_dimension(), 2);
  EXPECT_EQ(make_cap(1.0).geometry(), Geometry::sphere);
  EXPECT_EQ(make_disc(1.0).geometry(), Geometry::euclidean);
  EXPECT_TRUE(make_cap(1.0).is_radial());
  EXPECT_FALSE(make_rectangle({1, 1}).is_radial());
  EXPECT_EQ(make_rectangle({1, 2}).dilated(2.0), make_rectangle({2, 4}));
  EXPECT_EQ(make_disc(1.5).dilated(2.0), make_disc(3.0));
  EXPECT_THROW(make_cap(1.0).dilated(2.0), ValidationError);
  EXPECT_EQ(make_cap(1.0).kind(), "cap");
}

TEST(EigenSolution, SpectrumView) {
  EigenSolution sol(make_rectangle({1, 1}), 2, 4);
  sol.eigenvalues = {3.0, 1.0};
  const Spectrum s = sol.to_spectrum();
  EXPECT_EQ(s.dimension(), 2);
  EXPECT_TRUE(s.resorted());

  EigenSolution line(make_interval(1.0), 2, 4);
  line.eigenvalues = {1.0};
  EXPECT_THROW(line.to_spectrum(), ValidationError);
}

}  // namespace
