#include "buckle/cli/commands.hpp"

#include "buckle/bounds/euclidean.hpp"
#include "buckle/bounds/report.hpp"
#include "buckle/bounds/sphere.hpp"
#include "buckle/io/files.hpp"
#include "buckle/solver/buckling.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <optional>
#include <set>

namespace buckle::cli {

namespace {

struct SolveFlags {
  std::string domain;
  int order = 2;
  int basis = 16;
  int count = 8;
  std::optional<int> m_max;
  std::optional<int> n;
  std::optional<double> theta0;
  std::vector<double> sides;
  double radius = 1.0;
  double length = 1.0;
  std::string out;
  std::string solution;
};

struct BoundsFlags {
  std::string in;
  std::string out;
  std::string csv;
  std::optional<int> k_max;
};

struct VerifyFlags {
  std::string in;
  std::string solution;
  double tolerance = 1e-8;
  std::optional<int> k_max;
};

struct CoeffsFlags {
  int order = 0;
  int n = 0;
};

/// Usage problems detected after parsing.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
  } else {
    io::write_text(path, text);
  }
}

DomainSpec domain_from_flags(const SolveFlags& f) {
  if (f.domain == "interval") return make_interval(f.length);
  if (f.domain == "rectangle") {
    if (!f.sides.empty()) {
      if (f.n && *f.n != static_cast<int>(f.sides.size())) throw UsageError("--n disagrees with the number of --sides");
      return make_rectangle(f.sides);
    }
    return make_rectangle(std::vector<double>(static_cast<std::size_t>(f.n.value_or(2)), 1.0));
  }
  if (f.domain == "disc") return make_disc(f.radius);
  if (f.domain == "cap") {
    if (!f.theta0) throw UsageError("--domain cap needs --theta0");
    return make_cap(*f.theta0);
  }
  throw UsageError("unknown domain \"" + f.domain + "\"");
}

int cmd_solve(const SolveFlags& f, std::ostream& out, std::ostream& err) {
  const DomainSpec domain = domain_from_flags(f);
  solver::SolveOptions opt;
  opt.order = f.order;
  opt.basis_size = f.basis;
  opt.count = f.count;
  opt.m_max = f.m_max;
  const EigenSolution sol = solver::solve_buckling(domain, opt);
  for (const std::string& w : sol.warnings) err << "warning: " << w << '\n';
  emit(f.out, io::dump(io::spectrum_to_json(io::spectrum_file_from_solution(sol))), out);
  if (!f.solution.empty()) io::write_text(f.solution, io::dump(io::solution_to_json(sol)));
  return kPass;
}

Spectrum load_spectrum(const std::string& path) {
  if (path.empty()) throw io::FormatError("--in path is empty");
  return io::spectrum_from_json(io::read_json(path)).to_spectrum();
}

int cmd_bounds(const BoundsFlags& f, std::ostream& out, std::ostream& err) {
  const Spectrum s = load_spectrum(f.in);
  if (s.resorted()) err << "warning: eigenvalues were out of order and have been sorted\n";
  const BoundReport report = bounds::build_report(s, f.k_max.value_or(bounds::default_k_max(s)));
  emit(f.out, io::dump(io::report_to_json(report)), out);
  if (!f.csv.empty()) emit(f.csv, io::report_to_csv(report), out);
  return kPass;
}

int cmd_verify(const VerifyFlags& f, std::ostream& out, std::ostream& err) {
  if (!(f.tolerance >= 0)) throw UsageError("--tolerance must be >= 0");
  const Spectrum s = load_spectrum(f.in);
  if (s.resorted()) err << "warning: eigenvalues were out of order and have been sorted\n";
  const int k_max = f.k_max.value_or(static_cast<int>(s.size()) - 1);
  const std::vector<bounds::Violation> violations = bounds::verify_spectrum(s, k_max, f.tolerance);
  std::vector<bounds::Violation> moment_violations;
  std::size_t moment_checks = 0;
  if (!f.solution.empty()) {
    const EigenSolution sol = io::solution_from_json(io::read_json(f.solution));
    for (std::size_t i = 0; i < sol.size(); ++i) {
      const std::vector<double> mu = solver::moments(sol, i);
      auto v = bounds::check_moment_chain(mu, sol.eigenvalues[i], sol.order, static_cast<int>(i) + 1, f.tolerance);
      moment_violations.insert(moment_violations.end(), v.begin(), v.end());
      ++moment_checks;
    }
  }

  out << "checked k = 1.." << std::max(0, std::min<int>(k_max, static_cast<int>(s.size()) - 1)) << " ("
      << to_string(s.geometry()) << ", n = " << s.dimension() << ", l = " << s.order() << ")";
  if (moment_checks) out << " and " << moment_checks << " moment chains";
  out << '\n';
  if (violations.empty() && moment_violations.empty()) {
    out << "PASS\n";
    return kPass;
  }
  std::set<int> ks, pairs;
  for (const auto& v : violations) {
    out << "violation k = " << v.k << " [" << v.check << "]: " << v.detail << '\n';
    ks.insert(v.k);
  }
  for (const auto& v : moment_violations) {
    out << "violation eigenpair " << v.k << " [" << v.check << "]: " << v.detail << '\n';
    pairs.insert(v.k);
  }
  out << "FAIL:";
  if (!ks.empty()) {
    out << " violated k =";
    for (int k : ks) out << ' ' << k;
  }
  if (!pairs.empty()) {
    out << (ks.empty() ? "" : ";") << " moment checks failed for eigenpairs";
    for (int i : pairs) out << ' ' << i;
  }
  out << '\n';
  return kViolation;
}

int cmd_coeffs(const CoeffsFlags& f, std::ostream& out) {
  if (f.order < 2) throw UsageError("--l must be >= 2");
  if (f.n < 2) throw UsageError("--n must be >= 2");
  const bounds::SphereRecursion r = bounds::fg_polys(f.order, f.n);
  out << "l = " << f.order << ", n = " << f.n << '\n';
  out << "C = " << bounds::coefficient_C(f.order, f.n) << '\n';
  for (std::size_t q = 0; q < r.f.size(); ++q) {
    out << "F_" << q << "(t) = " << r.f[q].to_string("t") << '\n';
    out << "G_" << q << "(t) = " << r.g[q].to_string("t") << '\n';
  }
  out << "t F_" << f.order - 2 << " - G_" << f.order - 2 << " = " << r.combination.to_string("t") << '\n';
  out << "a = [";
  for (std::size_t j = 0; j < r.a.size(); ++j) out << (j ? ", " : "") << numerics::to_string(r.a[j]);
  out << "]\n";
  return kPass;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Buckling eigenvalues and universal-inequality checks"};
  app.name("buckle");
  app.require_subcommand(1);

  SolveFlags sf;
  auto* solve = app.add_subcommand("solve", "Compute the lowest buckling eigenvalues of a domain");
  solve->add_option("--domain", sf.domain, "interval | rectangle | disc | cap")
      ->required()
      ->check(CLI::IsMember({"interval", "rectangle", "disc", "cap"}));
  solve->add_option("--l", sf.order, "Order l >= 2")->check(CLI::Range(2, 64));
  solve->add_option("--basis", sf.basis, "Basis size per axis or per mode")->check(CLI::PositiveNumber);
  solve->add_option("--count", sf.count, "Number of eigenvalues")->check(CLI::NonNegativeNumber);
  solve->add_option("--m-max", sf.m_max, "Largest azimuthal index (disc, cap)")->check(CLI::NonNegativeNumber);
  solve->add_option("--n", sf.n, "Rectangle dimension when --sides is omitted")->check(CLI::Range(2, 3));
  solve->add_option("--theta0", sf.theta0, "Cap polar angle in (0, pi)");
  solve->add_option("--sides", sf.sides, "Rectangle side lengths");
  solve->add_option("--radius", sf.radius, "Disc radius");
  solve->add_option("--length", sf.length, "Interval length");
  solve->add_option("--out", sf.out, "Spectrum file (stdout if omitted)");
  solve->add_option("--solution", sf.solution, "Also write eigenvectors and moments");

  BoundsFlags bf;
  auto* bnd = app.add_subcommand("bounds", "Evaluate residuals and closed-form bounds for a spectrum");
  bnd->add_option("--in", bf.in, "Spectrum file")->required();
  bnd->add_option("--out", bf.out, "Report file (stdout if omitted)");
  bnd->add_option("--csv", bf.csv, "Also write the report as CSV");
  bnd->add_option("--k-max", bf.k_max, "Last k")->check(CLI::PositiveNumber);

  VerifyFlags vf;
  auto* ver = app.add_subcommand("verify", "Exit 0 iff every applicable inequality holds");
  ver->add_option("--in", vf.in, "Spectrum file")->required();
  ver->add_option("--solution", vf.solution, "Solution dump for moment-chain checks");
  ver->add_option("--tolerance", vf.tolerance, "Relative tolerance");
  ver->add_option("--k-max", vf.k_max, "Last k")->check(CLI::PositiveNumber);

  CoeffsFlags cf;
  auto* coeffs = app.add_subcommand("coeffs", "Print C(l, n) and the sphere recursion coefficients");
  coeffs->add_option("--l", cf.order, "Order l >= 2")->required();
  coeffs->add_option("--n", cf.n, "Dimension n >= 2")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*solve) return cmd_solve(sf, out, err);
    if (*bnd) return cmd_bounds(bf, out, err);
    if (*ver) return cmd_verify(vf, out, err);
    return cmd_coeffs(cf, out);
  } catch (const solver::SolverError& e) {
    err << "solver error: " << e.what() << '\n';
    return kViolation;
  } catch (const numerics::IntegerOverflow& e) {
    err << "overflow: " << e.what() << '\n';
    return kViolation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace buckle::cli
