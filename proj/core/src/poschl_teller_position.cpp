#include "cstates/poschl_teller_position.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <locale>
#include <numbers>
#include <ostream>
#include <sstream>

#include "cstates/errors.hpp"
#include "cstates/specfun.hpp"

namespace cstates {

namespace {

void check_inside(const PTParameters& p, double x) {
  if (!(x > 0.0 && x < p.width())) throw_domain("x must lie strictly inside (0, pi a)");
}

double wavefunction(double kappa, double kappa_prime, double a, std::size_t n, double x) {
  const double half = 0.5 * x / a;
  const double shape = std::pow(std::cos(half), kappa_prime) * std::pow(std::sin(half), kappa);
  const double poly = jacobi_p(static_cast<int>(n), kappa - 0.5, kappa_prime - 0.5, std::cos(x / a));
  return shape * poly / std::sqrt(eigenfunction_norm(kappa, kappa_prime, n, a));
}

double second_difference(const std::function<double(double)>& f, double x, double h) {
  return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
}

double first_difference(const std::function<double(double)>& f, double x, double h) {
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

double grid_norm(const InteriorRule& rule, const std::function<double(double)>& f) {
  double s = 0.0;
  for (std::size_t i = 0; i < rule.xs.size(); ++i) {
    const double v = f(rule.xs[i]);
    s += rule.weights[i] * v * v;
  }
  return std::sqrt(s);
}

InteriorRule fd_rule(const PTParameters& p) { return interior_rule(p, 200, 10.0 * kFdStep); }

}  // namespace

PTParameters::PTParameters(double kappa_, double kappa_prime_, double a_)
    : kappa(kappa_), kappa_prime(kappa_prime_), a(a_) {
  if (!(kappa > 1.0 && kappa_prime > 1.0)) throw_domain("Poschl-Teller requires kappa, kappa' > 1");
  if (!(a > 0.0)) throw_domain("box scale a must be positive");
}

double PTParameters::width() const { return std::numbers::pi * a; }

double potential(const PTParameters& p, double x) {
  check_inside(p, x);
  const double half = 0.5 * x / p.a;
  const double s = std::sin(half);
  const double c = std::cos(half);
  const double k = p.kappa;
  const double kp = p.kappa_prime;
  return (k * (k - 1.0) / (s * s) + kp * (kp - 1.0) / (c * c) - (k + kp) * (k + kp)) /
         (4.0 * p.a * p.a);
}

double superpotential(const PTParameters& p, double x) {
  check_inside(p, x);
  const double half = 0.5 * x / p.a;
  return (p.kappa_prime * std::tan(half) - p.kappa / std::tan(half)) / (2.0 * p.a);
}

double superpotential_derivative(const PTParameters& p, double x) {
  check_inside(p, x);
  const double half = 0.5 * x / p.a;
  const double s = std::sin(half);
  const double c = std::cos(half);
  return (p.kappa_prime / (c * c) + p.kappa / (s * s)) / (4.0 * p.a * p.a);
}

double partner_potential(const PTParameters& p, double x) {
  const double w = superpotential(p, x);
  return w * w + superpotential_derivative(p, x);
}

double eigenfunction_norm(double kappa, double kappa_prime, std::size_t n, double a) {
  const double nn = static_cast<double>(n);
  return a * std::exp(std::lgamma(nn + kappa + 0.5) + std::lgamma(nn + kappa_prime + 0.5) -
                      std::lgamma(nn + 1.0) - std::lgamma(nn + kappa + kappa_prime)) /
         (2.0 * nn + kappa + kappa_prime);
}

double eigenfunction(const PTParameters& p, std::size_t n, double x) {
  check_inside(p, x);
  if (n > 50) throw_domain("eigenfunction supports n <= 50");
  return wavefunction(p.kappa, p.kappa_prime, p.a, n, x);
}

double partner_eigenfunction(const PTParameters& p, std::size_t n, double x) {
  check_inside(p, x);
  if (n > 50) throw_domain("partner_eigenfunction supports n <= 50");
  return wavefunction(p.kappa + 1.0, p.kappa_prime + 1.0, p.a, n, x);
}

void GridFunction::write_csv(std::ostream& os) const {
  std::ostringstream buf;
  buf.imbue(std::locale::classic());
  buf.precision(17);
  buf << "x,value\n";
  for (std::size_t i = 0; i < xs.size(); ++i) buf << xs[i] << ',' << values[i] << '\n';
  os << buf.str();
}

GridFunction sample_eigenfunction(const PTParameters& p, std::size_t n, std::size_t count,
                                  bool partner) {
  if (count == 0) throw_domain("grid needs at least one point");
  GridFunction g;
  g.xs.reserve(count);
  g.values.reserve(count);
  const double step = p.width() / static_cast<double>(count + 1);
  for (std::size_t i = 1; i <= count; ++i) {
    const double x = step * static_cast<double>(i);
    g.xs.push_back(x);
    g.values.push_back(partner ? partner_eigenfunction(p, n, x) : eigenfunction(p, n, x));
  }
  return g;
}

InteriorRule interior_rule(const PTParameters& p, int order, double margin) {
  const QuadratureRule q = gauss_legendre(order);
  const double lo = margin;
  const double hi = p.width() - margin;
  InteriorRule r;
  r.xs.resize(q.nodes.size());
  r.weights.resize(q.nodes.size());
  for (std::size_t i = 0; i < q.nodes.size(); ++i) {
    r.xs[i] = 0.5 * (lo + hi) + 0.5 * (hi - lo) * q.nodes[i];
    r.weights[i] = 0.5 * (hi - lo) * q.weights[i];
  }
  return r;
}

FactorizationResidual factorization_residual(const PTParameters& p, std::size_t n) {
  if (n > 10) throw_domain("factorization_residual supports n <= 10");
  const InteriorRule rule = fd_rule(p);
  const double e_next = static_cast<double>(n + 1) * (static_cast<double>(n + 1) + p.nu());
  auto lower = [&](std::size_t level, double x) {
    auto psi = [&](double t) { return eigenfunction(p, level, t); };
    return first_difference(psi, x, kFdStep) + superpotential(p, x) * psi(x);
  };
  FactorizationResidual out;
  out.r1 = grid_norm(rule, [&](double x) {
    return lower(n + 1, x) + std::sqrt(e_next) * partner_eigenfunction(p, n, x);
  });
  out.r2 = grid_norm(rule, [&](double x) { return lower(0, x); });
  return out;
}

double schrodinger_residual(const PTParameters& p, std::size_t n) {
  if (n == 0) throw_domain("schrodinger_residual divides by E_n; use n >= 1");
  const InteriorRule rule = fd_rule(p);
  const double e = static_cast<double>(n) * (static_cast<double>(n) + p.nu());
  auto psi = [&](double t) { return eigenfunction(p, n, t); };
  return grid_norm(rule, [&](double x) {
    return (-second_difference(psi, x, kFdStep) + potential(p, x) * psi(x)) / e - psi(x);
  });
}

double rayleigh_quotient(const PTParameters& p, std::size_t n) {
  const InteriorRule rule = fd_rule(p);
  auto psi = [&](double t) { return eigenfunction(p, n, t); };
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < rule.xs.size(); ++i) {
    const double x = rule.xs[i];
    const double v = psi(x);
    num += rule.weights[i] * v * (-second_difference(psi, x, kFdStep) + potential(p, x) * v);
    den += rule.weights[i] * v * v;
  }
  return num / den;
}

Eigen::MatrixXd gram_matrix(const PTParameters& p, std::size_t n_max, int order) {
  const InteriorRule rule = interior_rule(p, order, 1e-6 * p.width());
  const auto dim = static_cast<Eigen::Index>(n_max + 1);
  Eigen::MatrixXd values(static_cast<Eigen::Index>(rule.xs.size()), dim);
  for (std::size_t i = 0; i < rule.xs.size(); ++i) {
    for (std::size_t n = 0; n <= n_max; ++n) {
      values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(n)) =
          eigenfunction(p, n, rule.xs[i]);
    }
  }
  const Eigen::VectorXd w = Eigen::Map<const Eigen::VectorXd>(rule.weights.data(),
                                                              static_cast<Eigen::Index>(rule.weights.size()));
  return values.transpose() * w.asDiagonal() * values;
}

Eigen::MatrixXcd overlap_matrix(const PTParameters& p, std::size_t n_max) {
  if (n_max > 20) throw_domain("overlap_matrix supports n_max <= 20");
  const InteriorRule rule = interior_rule(p, 400, 1e-6 * p.width());
  const auto rows = static_cast<Eigen::Index>(rule.xs.size());
  const auto dim = static_cast<Eigen::Index>(n_max + 1);
  Eigen::MatrixXd psi(rows, dim);
  Eigen::MatrixXd theta(rows, dim);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index n = 0; n < dim; ++n) {
      const double x = rule.xs[static_cast<std::size_t>(i)];
      psi(i, n) = eigenfunction(p, static_cast<std::size_t>(n), x);
      theta(i, n) = partner_eigenfunction(p, static_cast<std::size_t>(n), x);
    }
  }
  const Eigen::VectorXd w =
      Eigen::Map<const Eigen::VectorXd>(rule.weights.data(), static_cast<Eigen::Index>(rule.weights.size()));
  const Eigen::MatrixXd u = psi.transpose() * w.asDiagonal() * theta;
  return u.cast<std::complex<double>>();
}

double partner_relation_residual(const PTParameters& p) {
  const InteriorRule rule = interior_rule(p, 64, 1e-3 * p.width());
  double worst = 0.0;
  for (double x : rule.xs) {
    const double lhs = partner_potential(p, x) - potential(p, x);
    const double rhs = 2.0 * superpotential_derivative(p, x);
    worst = std::max(worst, std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
  }
  return worst;
}

}  // namespace cstates
