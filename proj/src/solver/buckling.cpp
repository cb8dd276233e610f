#include "buckle/solver/buckling.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace buckle::solver {

namespace {

constexpr Eigen::Index kMaxBoxDofs = 1600;

struct ModeSolution {
  Eigen::VectorXd values;
  Eigen::MatrixXd vectors;
  std::vector<Eigen::MatrixXd> forms;
};

ModeSolution solve_forms(std::vector<Eigen::MatrixXd> forms) {
  const SymMatrix a(forms.back());
  const SymMatrix b(forms.front());
  try {
    auto eig = numerics::gen_sym_eig(a, b);
    return {std::move(eig.values), std::move(eig.vectors), std::move(forms)};
  } catch (const numerics::NotPositiveDefinite& e) {
    throw SolverError(std::string("basis too ill-conditioned, reduce N (") + e.what() + ")");
  }
}

std::vector<double> moment_chain(const std::vector<Eigen::MatrixXd>& forms, const Eigen::VectorXd& v) {
  std::vector<double> mu;
  mu.reserve(forms.size());
  for (const Eigen::MatrixXd& f : forms) mu.push_back(v.dot(f * v));
  return mu;
}

void check_common(const SolveOptions& options) {
  if (options.order < 2) throw SolverError("order l must be >= 2");
  if (options.count < 0) throw SolverError("count must be >= 0");
  if (options.basis_size < 1) throw SolverError("basis size must be >= 1");
}

EigenSolution solve_box(const DomainSpec& domain, const SolveOptions& options) {
  const int d = domain.spatial_dimension();
  if (domain.is<Rectangle>() && d != 2 && d != 3) throw SolverError("rectangle dimension must be 2 or 3");
  Eigen::Index total = 1;
  for (int i = 0; i < d; ++i) total *= options.basis_size;
  if (total > kMaxBoxDofs) {
    throw SolverError("tensor basis has " + std::to_string(total) + " functions, above the limit of " +
                      std::to_string(kMaxBoxDofs));
  }
  if (options.count > total) {
    throw SolverError("count " + std::to_string(options.count) + " exceeds the basis size " + std::to_string(total));
  }

  EigenSolution sol(domain, options.order, options.basis_size);
  if (options.count == 0) return sol;

  const ModeSolution ms = solve_forms(form_ladder(domain, options.order, options.basis_size));
  for (int i = 0; i < options.count; ++i) {
    const Eigen::VectorXd v = ms.vectors.col(i);
    sol.eigenvalues.push_back(ms.values(i));
    sol.eigenvectors.push_back(v);
    sol.moments.push_back(moment_chain(ms.forms, v));
  }
  return sol;
}

EigenSolution solve_radial(const DomainSpec& domain, const SolveOptions& options) {
  const int m_max = options.m_max.value_or(std::max(8, options.count));
  if (m_max < 0) throw SolverError("m_max must be >= 0");
  const long long available = static_cast<long long>(options.basis_size) * (1 + 2LL * m_max);
  if (options.count > available) {
    throw SolverError("count " + std::to_string(options.count) + " exceeds the " + std::to_string(available) +
                      " eigenpairs available from modes 0.." + std::to_string(m_max));
  }

  EigenSolution sol(domain, options.order, options.basis_size, m_max);
  if (options.count == 0) return sol;

  auto solve_mode = [&](int m) {
    return solve_forms(form_ladder(domain, options.order, options.basis_size, m));
  };
  std::vector<ModeSolution> modes;
  modes.reserve(static_cast<std::size_t>(m_max) + 1);
  if (options.parallel) {
    std::vector<std::future<ModeSolution>> pending;
    for (int m = 0; m <= m_max; ++m) pending.push_back(std::async(std::launch::async, solve_mode, m));
    for (auto& f : pending) modes.push_back(f.get());
  } else {
    for (int m = 0; m <= m_max; ++m) modes.push_back(solve_mode(m));
  }

  // (eigenvalue, m, intra-mode index, copy); m >= 1 pairs enter twice.
  std::vector<std::tuple<double, int, int, int>> merged;
  for (int m = 0; m <= m_max; ++m) {
    const Eigen::VectorXd& vals = modes[static_cast<std::size_t>(m)].values;
    for (Eigen::Index i = 0; i < vals.size(); ++i) {
      merged.emplace_back(vals(i), m, static_cast<int>(i), 0);
      if (m >= 1) merged.emplace_back(vals(i), m, static_cast<int>(i), 1);
    }
  }
  std::sort(merged.begin(), merged.end());

  for (int i = 0; i < options.count; ++i) {
    [[maybe_unused]] const auto& [value, m, idx, copy] = merged[static_cast<std::size_t>(i)];
    const ModeSolution& ms = modes[static_cast<std::size_t>(m)];
    const Eigen::VectorXd v = ms.vectors.col(idx);
    sol.eigenvalues.push_back(value);
    sol.eigenvectors.push_back(v);
    sol.modal_tags.push_back(m);
    sol.mode_index.push_back(idx);
    sol.moments.push_back(moment_chain(ms.forms, v));
  }

  const double lowest_last_mode = modes.back().values(0);
  if (sol.eigenvalues.back() > lowest_last_mode) {
    sol.complete = false;
    std::ostringstream msg;
    msg.precision(17);
    msg << "spectrum may be missing modes: largest kept eigenvalue " << sol.eigenvalues.back()
        << " exceeds the lowest eigenvalue " << lowest_last_mode << " of mode m_max = " << m_max
        << "; increase m_max";
    sol.warnings.push_back(msg.str());
  }
  return sol;
}

}  // namespace

EigenSolution solve_buckling(const DomainSpec& domain, const SolveOptions& options) {
  check_common(options);
  return domain.is_radial() ? solve_radial(domain, options) : solve_box(domain, options);
}

std::vector<double> moments(const EigenSolution& solution, std::size_t i) {
  if (i >= solution.size()) throw std::out_of_range("moments: eigenpair index out of range");
  const int m = solution.modal_tags.empty() ? 0 : solution.modal_tags[i];
  const auto forms = form_ladder(solution.domain, solution.order, solution.basis_size, m);
  const Eigen::VectorXd& v = solution.eigenvectors[i];
  if (v.size() != forms.front().rows()) throw SolverError("moments: eigenvector length does not match the basis");
  return moment_chain(forms, v);
}

SweepResult convergence_sweep(const DomainSpec& domain, SolveOptions options, const std::vector<int>& sizes) {
  for (std::size_t s = 1; s < sizes.size(); ++s) {
    if (sizes[s] <= sizes[s - 1]) throw std::invalid_argument("convergence_sweep: sizes must be strictly increasing");
  }
  SweepResult out;
  out.sizes = sizes;
  for (int n : sizes) {
    options.basis_size = n;
    out.spectra.push_back(solve_buckling(domain, options).eigenvalues);
  }
  out.max_rel_change.assign(static_cast<std::size_t>(options.count), 0.0);
  for (std::size_t s = 1; s < out.spectra.size(); ++s) {
    const auto& prev = out.spectra[s - 1];
    const auto& next = out.spectra[s];
    std::vector<double> change(next.size());
    for (std::size_t i = 0; i < next.size(); ++i) {
      change[i] = std::abs(next[i] - prev[i]) / next[i];
      out.max_rel_change[i] = std::max(out.max_rel_change[i], change[i]);
      if (next[i] > prev[i] * (1 + 1e-10)) out.monotone = false;
    }
    out.rel_change.push_back(std::move(change));
  }
  return out;
}

}  // namespace buckle::solver
