#pragma once

#include "buckle/core/solution.hpp"

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace buckle::io {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSpectrumFormat = "buckle-spectrum/1";
inline constexpr const char* kReportFormat = "buckle-report/1";
inline constexpr const char* kSolutionFormat = "buckle-solution/1";

/// Malformed file content or a schema mismatch.
class FormatError : public std::runtime_error {
 public:
  explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

/// Shortest decimal that parses back to the same double.
std::string format_double(double x);

Json domain_to_json(const DomainSpec& domain);
/// Throws FormatError for unknown kinds or ValidationError for bad sizes.
DomainSpec domain_from_json(const Json& j);

/// Raw spectrum file content. Interval solutions carry dimension 1, which the
/// bound engines do not accept, so the file layer does not validate.
struct SpectrumFile {
  Geometry geometry = Geometry::euclidean;
  int dimension = 2;
  int order = 2;
  std::vector<double> eigenvalues;
  std::optional<DomainSpec> domain;

  /// Throws ValidationError when the content breaks a Spectrum invariant.
  Spectrum to_spectrum() const { return validate_spectrum(geometry, dimension, order, eigenvalues); }
};

SpectrumFile spectrum_file_from_solution(const EigenSolution& solution);

Json spectrum_to_json(const SpectrumFile& file);
SpectrumFile spectrum_from_json(const Json& j);

Json report_to_json(const BoundReport& report);
/// Header `k,lambda_next_computed,thm_residual,bound_a,bound_b,tightness_a,tightness_b`,
/// plus `,delta_star,residual_at_delta_star` for sphere reports. Empty cells
/// for missing values.
std::string report_to_csv(const BoundReport& report);

Json solution_to_json(const EigenSolution& solution);
EigenSolution solution_from_json(const Json& j);

/// Throws FormatError when the file is missing or not valid JSON.
Json read_json(const std::filesystem::path& path);
/// Writes the text verbatim; throws std::runtime_error on I/O failure.
void write_text(const std::filesystem::path& path, const std::string& text);
/// Pretty-printed with two-space indentation and a trailing newline.
std::string dump(const Json& j);

}  // namespace buckle::io
