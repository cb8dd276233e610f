#include "buckle/io/files.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace buckle::io {

namespace {

template <typename T>
T field(const Json& j, const char* key) {
  if (!j.contains(key)) throw FormatError(std::string("missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("field \"") + key + "\": " + e.what());
  }
}

void expect_format(const Json& j, const char* format) {
  if (!j.is_object()) throw FormatError("expected a JSON object");
  const auto tag = field<std::string>(j, "format");
  if (tag != format) throw FormatError("format tag \"" + tag + "\", expected \"" + format + "\"");
}

Geometry geometry_field(const Json& j) {
  try {
    return geometry_from_string(field<std::string>(j, "geometry"));
  } catch (const ValidationError& e) {
    throw FormatError(e.what());
  }
}

Json optional_number(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

void csv_cell(std::ostringstream& os, const std::optional<double>& v) {
  os << ',';
  if (v) os << format_double(*v);
}

}  // namespace

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

Json domain_to_json(const DomainSpec& domain) {
  Json j;
  j["kind"] = domain.kind();
  if (domain.is<Interval>()) j["length"] = domain.as<Interval>().length;
  if (domain.is<Rectangle>()) j["sides"] = domain.as<Rectangle>().sides;
  if (domain.is<Disc>()) j["radius"] = domain.as<Disc>().radius;
  if (domain.is<SphericalCap>()) j["polar_angle"] = domain.as<SphericalCap>().polar_angle;
  return j;
}

DomainSpec domain_from_json(const Json& j) {
  if (!j.is_object()) throw FormatError("domain must be an object");
  const auto kind = field<std::string>(j, "kind");
  if (kind == "interval") return make_interval(field<double>(j, "length"));
  if (kind == "rectangle") return make_rectangle(field<std::vector<double>>(j, "sides"));
  if (kind == "disc") return make_disc(field<double>(j, "radius"));
  if (kind == "cap") return make_cap(field<double>(j, "polar_angle"));
  throw FormatError("unknown domain kind \"" + kind + "\"");
}

SpectrumFile spectrum_file_from_solution(const EigenSolution& solution) {
  return {solution.domain.geometry(), solution.domain.spatial_dimension(), solution.order, solution.eigenvalues,
          solution.domain};
}

Json spectrum_to_json(const SpectrumFile& file) {
  Json j;
  j["format"] = kSpectrumFormat;
  j["geometry"] = std::string(to_string(file.geometry));
  j["dimension"] = file.dimension;
  j["order"] = file.order;
  j["eigenvalues"] = file.eigenvalues;
  if (file.domain) j["domain"] = domain_to_json(*file.domain);
  j["normalization"] = "dirichlet";
  return j;
}

SpectrumFile spectrum_from_json(const Json& j) {
  expect_format(j, kSpectrumFormat);
  SpectrumFile f;
  f.geometry = geometry_field(j);
  f.dimension = field<int>(j, "dimension");
  f.order = field<int>(j, "order");
  f.eigenvalues = field<std::vector<double>>(j, "eigenvalues");
  if (j.contains("domain")) f.domain = domain_from_json(j.at("domain"));
  if (j.contains("normalization") && field<std::string>(j, "normalization") != "dirichlet") {
    throw FormatError("unsupported normalization, expected \"dirichlet\"");
  }
  return f;
}

Json report_to_json(const BoundReport& report) {
  const bool sphere = report.geometry == Geometry::sphere;
  Json j;
  j["format"] = kReportFormat;
  j["geometry"] = std::string(to_string(report.geometry));
  j["dimension"] = report.dimension;
  j["order"] = report.order;
  Json entries = Json::array();
  for (const BoundEntry& e : report.entries) {
    Json row;
    row["k"] = e.k;
    row["lambda_next_computed"] = optional_number(e.lambda_next_computed);
    row["thm_residual"] = optional_number(e.thm_residual);
    row["bound_a"] = optional_number(e.bound_a);
    row["bound_b"] = optional_number(e.bound_b);
    row["tightness_a"] = optional_number(e.tightness_a);
    row["tightness_b"] = optional_number(e.tightness_b);
    if (sphere) {
      row["delta_star"] = optional_number(e.delta_star);
      row["residual_at_delta_star"] = optional_number(e.residual_at_delta_star);
      row["residual_grid_min"] = optional_number(e.residual_grid_min);
    }
    entries.push_back(std::move(row));
  }
  j["entries"] = std::move(entries);
  return j;
}

std::string report_to_csv(const BoundReport& report) {
  const bool sphere = report.geometry == Geometry::sphere;
  std::ostringstream os;
  os << "k,lambda_next_computed,thm_residual,bound_a,bound_b,tightness_a,tightness_b";
  if (sphere) os << ",delta_star,residual_at_delta_star";
  os << '\n';
  for (const BoundEntry& e : report.entries) {
    os << e.k;
    for (const auto* v : {&e.lambda_next_computed, &e.thm_residual, &e.bound_a, &e.bound_b, &e.tightness_a,
                          &e.tightness_b}) {
      csv_cell(os, *v);
    }
    if (sphere) {
      csv_cell(os, e.delta_star);
      csv_cell(os, e.residual_at_delta_star);
    }
    os << '\n';
  }
  return os.str();
}

Json solution_to_json(const EigenSolution& s) {
  Json j;
  j["format"] = kSolutionFormat;
  j["domain"] = domain_to_json(s.domain);
  j["order"] = s.order;
  j["basis_size"] = s.basis_size;
  if (s.domain.is_radial()) j["m_max"] = s.m_max;
  j["complete"] = s.complete;
  j["warnings"] = s.warnings;
  Json pairs = Json::array();
  for (std::size_t i = 0; i < s.size(); ++i) {
    Json p;
    p["eigenvalue"] = s.eigenvalues[i];
    if (!s.modal_tags.empty()) {
      p["m"] = s.modal_tags[i];
      p["mode_index"] = s.mode_index[i];
    }
    p["moments"] = s.moments[i];
    const Eigen::VectorXd& v = s.eigenvectors[i];
    p["coefficients"] = std::vector<double>(v.data(), v.data() + v.size());
    pairs.push_back(std::move(p));
  }
  j["eigenpairs"] = std::move(pairs);
  return j;
}

EigenSolution solution_from_json(const Json& j) {
  expect_format(j, kSolutionFormat);
  EigenSolution s(domain_from_json(field<Json>(j, "domain")), field<int>(j, "order"), field<int>(j, "basis_size"),
                  j.contains("m_max") ? field<int>(j, "m_max") : 0);
  if (j.contains("complete")) s.complete = field<bool>(j, "complete");
  if (j.contains("warnings")) s.warnings = field<std::vector<std::string>>(j, "warnings");
  const auto pairs = field<Json>(j, "eigenpairs");
  if (!pairs.is_array()) throw FormatError("\"eigenpairs\" must be an array");
  for (const Json& p : pairs) {
    s.eigenvalues.push_back(field<double>(p, "eigenvalue"));
    if (s.domain.is_radial()) {
      s.modal_tags.push_back(field<int>(p, "m"));
      s.mode_index.push_back(field<int>(p, "mode_index"));
    }
    s.moments.push_back(field<std::vector<double>>(p, "moments"));
    const auto c = field<std::vector<double>>(p, "coefficients");
    s.eigenvectors.push_back(Eigen::Map<const Eigen::VectorXd>(c.data(), static_cast<Eigen::Index>(c.size())));
  }
  return s;
}

Json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace buckle::io
