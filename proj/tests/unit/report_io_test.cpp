#include "buckle/bounds/report.hpp"
#include "buckle/io/files.hpp"
#include "buckle/solver/buckling.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>

namespace {

using namespace buckle;
using namespace buckle::bounds;

TEST(BuildReport, EuclideanHandExample) {
  const auto r = build_report(validate_spectrum(Geometry::euclidean, 2, 2, {1, 2}), 1);
  ASSERT_EQ(r.entries.size(), 1u);
  const BoundEntry& e = r.entries[0];
  EXPECT_EQ(e.k, 1);
  EXPECT_DOUBLE_EQ(*e.lambda_next_computed, 2.0);
  EXPECT_NEAR(*e.thm_residual, -1.0, 1e-15);
  EXPECT_NEAR(*e.bound_a, 5.0, 1e-14);
  EXPECT_NEAR(*e.bound_b, 5.0, 1e-14);
  EXPECT_NEAR(*e.tightness_a, 2.5, 1e-14);
  EXPECT_FALSE(e.delta_star);
}

TEST(BuildReport, SphereHandExample) {
  const auto r = build_report(validate_spectrum(Geometry::sphere, 2, 2, {2, 3}), 1);
  const BoundEntry& e = r.entries.at(0);
  EXPECT_NEAR(*e.delta_star, 1.0, 1e-15);
  EXPECT_NEAR(*e.residual_at_delta_star, 2.0, 1e-14);
  EXPECT_NEAR(*e.thm_residual, -2.0, 1e-14);
  EXPECT_NEAR(*e.bound_a, 6.0, 1e-14);
  EXPECT_FALSE(e.bound_b);
  EXPECT_LE(*e.residual_grid_min, *e.residual_at_delta_star + 1e-12);
  EXPECT_GE(*e.residual_grid_min, *e.residual_at_delta_star - 1e-12);
}

TEST(BuildReport, SingleEigenvalueGivesBoundsOnly) {
  const auto r = build_report(validate_spectrum(Geometry::euclidean, 2, 2, {1}), 1);
  ASSERT_EQ(r.entries.size(), 1u);
  EXPECT_FALSE(r.entries[0].lambda_next_computed);
  EXPECT_FALSE(r.entries[0].thm_residual);
  EXPECT_FALSE(r.entries[0].tightness_a);
  EXPECT_NEAR(*r.entries[0].bound_a, 5.0, 1e-14);
}

TEST(BuildReport, KRangeAndErrors) {
  const Spectrum s = validate_spectrum(Geometry::euclidean, 2, 2, {1, 2, 3, 4});
  EXPECT_EQ(build_report(s, default_k_max(s)).entries.size(), 3u);
  EXPECT_EQ(build_report(s, 10).entries.size(), 4u);
  EXPECT_THROW(build_report(s, 0), BoundsError);
  EXPECT_THROW(build_report(validate_spectrum(Geometry::sphere, 4, 2, {1, 3}), 1), BoundsError);
}

TEST(VerifySpectrum, SolverSpectrumPassesAndCorruptionFails) {
  solver::SolveOptions o;
  o.basis_size = 12;
  o.count = 8;
  const Spectrum s = solver::solve_buckling(make_rectangle({1, 1}), o).to_spectrum();
  EXPECT_TRUE(verify_spectrum(s, 7, 1e-8).empty());
  std::vector<double> v(s.values().begin(), s.values().end());
  v[2] = v[1] * 1.0000001;
  v[3] *= 100;
  const auto bad = verify_spectrum(validate_spectrum(Geometry::euclidean, 2, 2, v), 7, 1e-8);
  ASSERT_FALSE(bad.empty());
}

TEST(MomentChain, Checks) {
  EXPECT_TRUE(check_moment_chain(std::vector<double>{1.0, 2.0, 4.0}, 4.0, 3, 1, 1e-8).empty());
  EXPECT_FALSE(check_moment_chain(std::vector<double>{1.1, 2.0, 4.0}, 4.0, 3, 1, 1e-8).empty());
  EXPECT_FALSE(check_moment_chain(std::vector<double>{1.0, 2.5, 4.0}, 4.0, 3, 1, 1e-8).empty());
  EXPECT_FALSE(check_moment_chain(std::vector<double>{1.0, 4.0}, 5.0, 2, 1, 1e-8).empty());
  EXPECT_FALSE(check_moment_chain(std::vector<double>{1.0}, 5.0, 2, 1, 1e-8).empty());
}

TEST(FormatDouble, ShortestRoundTrip) {
  EXPECT_EQ(io::format_double(5.0), "5");
  EXPECT_EQ(io::format_double(0.1), "0.1");
  EXPECT_EQ(io::format_double(-2.5), "-2.5");
  std::mt19937_64 rng(1);
  for (int i = 0; i < 1000; ++i) {
    const double x = std::exp(std::uniform_real_distribution<>(-30, 30)(rng));
    EXPECT_EQ(std::stod(io::format_double(x)), x);
  }
}

TEST(SpectrumFile, RoundTripIsBitExact) {
  solver::SolveOptions o;
  o.basis_size = 14;
  o.count = 6;
  const auto sol = solver::solve_buckling(make_disc(1.3), o);
  const io::SpectrumFile f = io::spectrum_file_from_solution(sol);
  const io::Json j = io::spectrum_to_json(f);
  EXPECT_EQ(j["format"], io::kSpectrumFormat);
  EXPECT_EQ(j["normalization"], "dirichlet");
  const io::SpectrumFile back = io::spectrum_from_json(io::Json::parse(io::dump(j)));
  EXPECT_EQ(back.eigenvalues, sol.eigenvalues);
  EXPECT_EQ(*back.domain, sol.domain);
  EXPECT_EQ(back.to_spectrum(), sol.to_spectrum());
  EXPECT_EQ(io::dump(io::spectrum_to_json(back)), io::dump(j));
}

TEST(SpectrumFile, SchemaErrors) {
  EXPECT_THROW(io::spectrum_from_json(io::Json::parse(R"({"format":"other/1"})")), io::FormatError);
  EXPECT_THROW(io::spectrum_from_json(io::Json::parse(R"({"format":"buckle-spectrum/1","geometry":"euclidean"})")),
               io::FormatError);
  EXPECT_THROW(io::spectrum_from_json(io::Json::parse(
                   R"({"format":"buckle-spectrum/1","geometry":"flat","dimension":2,"order":2,"eigenvalues":[1]})")),
               io::FormatError);
  EXPECT_THROW(io::spectrum_from_json(io::Json::parse(
                   R"({"format":"buckle-spectrum/1","geometry":"euclidean","dimension":2,"order":2,"eigenvalues":"x"})")),
               io::FormatError);
  EXPECT_THROW(io::domain_from_json(io::Json::parse(R"({"kind":"torus"})")), io::FormatError);
  EXPECT_THROW(io::read_json("/nonexistent/spectrum.json"), io::FormatError);
}

TEST(ReportFile, JsonAndCsvLayout) {
  const auto r = build_report(validate_spectrum(Geometry::euclidean, 2, 2, {1}), 1);
  const io::Json j = io::report_to_json(r);
  EXPECT_EQ(j["format"], io::kReportFormat);
  EXPECT_TRUE(j["entries"][0]["thm_residual"].is_null());
  EXPECT_EQ(io::report_to_csv(r),
            "k,lambda_next_computed,thm_residual,bound_a,bound_b,tightness_a,tightness_b\n1,,,5,5,,\n");

  const auto rs = build_report(validate_spectrum(Geometry::sphere, 2, 2, {2, 3}), 1);
  EXPECT_EQ(io::report_to_csv(rs),
            "k,lambda_next_computed,thm_residual,bound_a,bound_b,tightness_a,tightness_b,delta_star,"
            "residual_at_delta_star\n1,3,-2,6,,2,,1,2\n");
  const io::Json js = io::report_to_json(rs);
  std::vector<std::string> keys;
  for (const auto& [key, value] : js["entries"][0].items()) keys.push_back(key);
  EXPECT_EQ(keys, (std::vector<std::string>{"k", "lambda_next_computed", "thm_residual", "bound_a", "bound_b",
                                            "tightness_a", "tightness_b", "delta_star", "residual_at_delta_star",
                                            "residual_grid_min"}));
}

TEST(SolutionFile, RoundTripPreservesMoments) {
  solver::SolveOptions o;
  o.order = 3;
  o.basis_size = 10;
  o.count = 4;
  const auto sol = solver::solve_buckling(make_cap(1.1), o);
  const EigenSolution back = io::solution_from_json(io::Json::parse(io::dump(io::solution_to_json(sol))));
  EXPECT_EQ(back.domain, sol.domain);
  EXPECT_EQ(back.eigenvalues, sol.eigenvalues);
  EXPECT_EQ(back.modal_tags, sol.modal_tags);
  for (std::size_t i = 0; i < sol.size(); ++i) {
    EXPECT_EQ(back.eigenvectors[i], sol.eigenvectors[i]);
    EXPECT_EQ(solver::moments(back, i), sol.moments[i]);
  }
}

}  // namespace
