#include "buckle/solver/assembly.hpp"

#include "buckle/numerics/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace buckle::solver {

namespace {

Eigen::MatrixXd values_at(const GalerkinBasis1D& basis, int deriv, const Eigen::VectorXd& nodes) {
  Eigen::MatrixXd v(nodes.size(), basis.size());
  for (int j = 0; j < basis.size(); ++j) {
    const Cheb& f = basis.function(j, deriv);
    for (Eigen::Index q = 0; q < nodes.size(); ++q) v(q, j) = f(nodes(q));
  }
  return v;
}

Eigen::MatrixXd kron(const Eigen::MatrixXd& x, const Eigen::MatrixXd& y) {
  Eigen::MatrixXd r(x.rows() * y.rows(), x.cols() * y.cols());
  for (Eigen::Index i = 0; i < x.rows(); ++i)
    for (Eigen::Index j = 0; j < x.cols(); ++j) r.block(i * y.rows(), j * y.cols(), y.rows(), y.cols()) = x(i, j) * y;
  return r;
}

double factorial(int n) {
  double r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

/// All multi-indices of length d summing to p, with their multinomial weights.
void multi_indices(int d, int p, std::vector<std::pair<std::vector<int>, double>>& out) {
  std::vector<int> alpha(static_cast<std::size_t>(d), 0);
  std::function<void(int, int)> rec = [&](int axis, int left) {
    if (axis == d - 1) {
      alpha[static_cast<std::size_t>(axis)] = left;
      double w = factorial(p);
      for (int a : alpha) w /= factorial(a);
      out.emplace_back(alpha, w);
      return;
    }
    for (int a = 0; a <= left; ++a) {
      alpha[static_cast<std::size_t>(axis)] = a;
      rec(axis + 1, left - a);
    }
  };
  rec(0, p);
}

int modal_quadrature_points(const RadialBasis& basis, const std::vector<RadialElement>& g) {
  int deg = 0;
  for (const RadialElement& e : g) deg = std::max(deg, e.poly.degree());
  for (int j = 0; j < basis.size(); ++j) deg = std::max(deg, basis.element(j).poly.degree());
  const int l = basis.order();
  const int by_rule = basis.size() + 2 * l * ((l + 1) / 2) + basis.m() + 4;
  return std::max(by_rule, deg + basis.m() + 3);
}

}  // namespace

Eigen::MatrixXd derivative_gram(const GalerkinBasis1D& basis, int a, int b) {
  if (a < 0 || b < 0 || a > basis.order() || b > basis.order()) {
    throw SolverError("derivative_gram: derivative orders must lie in 0..l");
  }
  const int n = basis.size();
  if (n == 0) return Eigen::MatrixXd(0, 0);
  const auto rule = numerics::gauss_legendre<double>(n + 2 * basis.order() + 1);
  const Eigen::MatrixXd va = values_at(basis, a, rule.nodes);
  const Eigen::MatrixXd vb = a == b ? va : values_at(basis, b, rule.nodes);
  return va.transpose() * rule.weights.asDiagonal() * vb;
}

Eigen::MatrixXd box_form(const GalerkinBasis1D& basis, std::span<const double> sides, int k) {
  if (k < 1 || k > basis.order()) throw SolverError("box_form: form order must lie in 1..l");
  const int d = static_cast<int>(sides.size());
  const int n = basis.size();
  Eigen::Index total = 1;
  for (int i = 0; i < d; ++i) total *= n;
  if (n == 0) return Eigen::MatrixXd(0, 0);

  // Reference Grams G^{(a,b)}, a, b <= k.
  std::vector<std::vector<Eigen::MatrixXd>> ref(static_cast<std::size_t>(k) + 1);
  for (int a = 0; a <= k; ++a)
    for (int b = 0; b <= k; ++b) ref[static_cast<std::size_t>(a)].push_back(derivative_gram(basis, a, b));

  // Physical Gram on axis `axis`: d/dx = (2/s) d/dy, dx = (s/2) dy.
  auto axis_gram = [&](int axis, int a, int b) -> Eigen::MatrixXd {
    const double s = sides[static_cast<std::size_t>(axis)];
    return std::pow(2.0 / s, a + b) * (s / 2.0) * ref[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
  };
  auto tensor = [&](const std::vector<int>& da, const std::vector<int>& db) {
    Eigen::MatrixXd acc = axis_gram(d - 1, da[static_cast<std::size_t>(d - 1)], db[static_cast<std::size_t>(d - 1)]);
    for (int axis = d - 2; axis >= 0; --axis)
      acc = kron(acc, axis_gram(axis, da[static_cast<std::size_t>(axis)], db[static_cast<std::size_t>(axis)]));
    return acc;
  };

  const int p = k / 2;
  std::vector<std::pair<std::vector<int>, double>> alphas;
  multi_indices(d, p, alphas);

  Eigen::MatrixXd form = Eigen::MatrixXd::Zero(total, total);
  const int gradient_axes = (k % 2 == 1) ? d : 1;
  for (int e = 0; e < gradient_axes; ++e) {
    for (const auto& [alpha, wa] : alphas) {
      for (const auto& [beta, wb] : alphas) {
        std::vector<int> da(alpha), db(beta);
        for (int& x : da) x *= 2;
        for (int& x : db) x *= 2;
        if (k % 2 == 1) {
          da[static_cast<std::size_t>(e)] += 1;
          db[static_cast<std::size_t>(e)] += 1;
        }
        form += wa * wb * tensor(da, db);
      }
    }
  }
  return form;
}

Eigen::MatrixXd modal_form(const RadialBasis& basis, int k, double radius) {
  if (k < 1 || k > basis.order()) throw SolverError("modal_form: form order must lie in 1..l");
  const int n = basis.size();
  if (n == 0) return Eigen::MatrixXd(0, 0);
  const int m = basis.m();
  const int p = k / 2;

  std::vector<RadialElement> g;
  g.reserve(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    RadialElement e = basis.element(j);
    for (int i = 0; i < p; ++i) e = radial_laplacian_apply(e);
    g.push_back(std::move(e));
  }

  const auto rule = numerics::gauss_legendre<double>(modal_quadrature_points(basis, g));
  const Eigen::Index nq = rule.size();
  const bool disc = basis.geometry() == RadialGeometry::disc;
  const RadialElement& proto = basis.element(0);
  const double dvar_dy = proto.scale();  // ds/dy or dx/dy
  const Cheb var = proto.physical_variable();

  Eigen::VectorXd v(nq);
  for (Eigen::Index q = 0; q < nq; ++q) v(q) = var(rule.nodes(q));

  Eigen::MatrixXd form;
  if (k % 2 == 0) {
    // disc: s^m Q Q (r dr = ds / 2);  cap: (1 - x^2)^m P P dx
    Eigen::MatrixXd vals(nq, n);
    Eigen::VectorXd w(nq);
    for (Eigen::Index q = 0; q < nq; ++q) {
      const double weight = disc ? 0.5 * std::pow(v(q), m) : std::pow(1.0 - v(q) * v(q), m);
      w(q) = rule.weights(q) * dvar_dy * weight;
      for (int j = 0; j < n; ++j) vals(q, j) = g[static_cast<std::size_t>(j)].poly(rule.nodes(q));
    }
    form = vals.transpose() * w.asDiagonal() * vals;
  } else {
    // Gradient energy of h = Delta^p f: radial-derivative part plus m^2 angular part.
    //  disc: h = r^m Q, |h_r|^2 r dr = s^{m-1} (m Q + 2 s Q')^2 ds / 2,
    //        m^2 h^2 / r^2 r dr = m^2 s^{m-1} Q^2 ds / 2;
    //  cap:  h = (1-x^2)^{m/2} P, (1-x^2) h_x^2 dx = (1-x^2)^{m-1} (-m x P + (1-x^2) P')^2 dx,
    //        m^2 h^2 / (1-x^2) dx = m^2 (1-x^2)^{m-1} P^2 dx.
    Eigen::MatrixXd radial(nq, n), angular(nq, n);
    Eigen::VectorXd w_radial(nq), w_angular(nq);
    std::vector<Cheb> dg;
    for (const RadialElement& e : g) dg.push_back(e.physical_derivative(e.poly));
    for (Eigen::Index q = 0; q < nq; ++q) {
      const double y = rule.nodes(q), x = v(q);
      const double base = rule.weights(q) * dvar_dy;
      for (int j = 0; j < n; ++j) {
        const double val = g[static_cast<std::size_t>(j)].poly(y);
        const double der = dg[static_cast<std::size_t>(j)](y);
        if (disc) {
          radial(q, j) = m == 0 ? 2.0 * der : m * val + 2.0 * x * der;
        } else {
          radial(q, j) = m == 0 ? der : -m * x * val + (1.0 - x * x) * der;
        }
        angular(q, j) = val;
      }
      if (disc) {
        w_radial(q) = base * 0.5 * (m == 0 ? x : std::pow(x, m - 1));
        w_angular(q) = base * 0.5 * (m == 0 ? 0.0 : double(m) * m * std::pow(x, m - 1));
      } else {
        const double c = 1.0 - x * x;
        w_radial(q) = base * (m == 0 ? c : std::pow(c, m - 1));
        w_angular(q) = base * (m == 0 ? 0.0 : double(m) * m * std::pow(c, m - 1));
      }
    }
    form = radial.transpose() * w_radial.asDiagonal() * radial + angular.transpose() * w_angular.asDiagonal() * angular;
  }
  if (disc && radius != 1.0) form *= std::pow(radius, 2.0 - 2.0 * k);
  return form;
}

AssembledForms assemble_interval(int order, double length, int size) {
  if (size < 1) throw SolverError("basis size must be >= 1");
  const GalerkinBasis1D basis(order, size);
  const double sides[] = {length};
  return {SymMatrix(box_form(basis, sides, order)), SymMatrix(box_form(basis, sides, 1))};
}

AssembledForms assemble_rectangle(int order, std::span<const double> sides, int size) {
  if (sides.size() != 2 && sides.size() != 3) throw SolverError("rectangle dimension must be 2 or 3");
  if (size < 1) throw SolverError("basis size must be >= 1");
  const GalerkinBasis1D basis(order, size);
  return {SymMatrix(box_form(basis, sides, order)), SymMatrix(box_form(basis, sides, 1))};
}

RadialBasis make_radial_basis(const DomainSpec& domain, int order, int m, int size) {
  if (domain.is<Disc>()) return RadialBasis(RadialGeometry::disc, m, order, size);
  if (domain.is<SphericalCap>()) {
    return RadialBasis(RadialGeometry::cap, m, order, size, std::cos(domain.as<SphericalCap>().polar_angle));
  }
  throw SolverError("modal assembly needs a disc or a spherical cap");
}

AssembledForms assemble_modal(const DomainSpec& domain, int order, int m, int size) {
  if (size < 1) throw SolverError("basis size must be >= 1");
  const RadialBasis basis = make_radial_basis(domain, order, m, size);
  const double radius = domain.is<Disc>() ? domain.as<Disc>().radius : 1.0;
  return {SymMatrix(modal_form(basis, order, radius)), SymMatrix(modal_form(basis, 1, radius))};
}

std::vector<Eigen::MatrixXd> form_ladder(const DomainSpec& domain, int order, int size, int m) {
  std::vector<Eigen::MatrixXd> forms;
  if (domain.is_radial()) {
    const RadialBasis basis = make_radial_basis(domain, order, m, size);
    const double radius = domain.is<Disc>() ? domain.as<Disc>().radius : 1.0;
    for (int k = 1; k <= order; ++k) forms.push_back(modal_form(basis, k, radius));
    return forms;
  }
  const GalerkinBasis1D basis(order, size);
  std::vector<double> sides;
  if (domain.is<Interval>()) {
    sides = {domain.as<Interval>().length};
  } else {
    sides = domain.as<Rectangle>().sides;
    if (sides.size() != 2 && sides.size() != 3) throw SolverError("rectangle dimension must be 2 or 3");
  }
  for (int k = 1; k <= order; ++k) forms.push_back(box_form(basis, sides, k));
  return forms;
}

}  // namespace buckle::solver
