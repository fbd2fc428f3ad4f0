#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <iosfwd>
#include <vector>

namespace cstates {

// Trigonometric Poschl-Teller well on (0, pi a), H = -d^2/dx^2 + V.
struct PTParameters {
  double kappa = 2.0;
  double kappa_prime = 2.0;
  double a = 1.0;

  PTParameters() = default;
  PTParameters(double kappa_, double kappa_prime_, double a_ = 1.0);

  double width() const;  // pi a
  double nu() const { return kappa + kappa_prime; }
};

// (1/4a^2)[k(k-1)/sin^2(x/2a) + k'(k'-1)/cos^2(x/2a)] - (k+k')^2/4a^2.
double potential(const PTParameters& p, double x);

// W = -psi_0'/psi_0 = (1/2a)[k' tan(x/2a) - k cot(x/2a)], so that V = W^2 - W'.
double superpotential(const PTParameters& p, double x);
double superpotential_derivative(const PTParameters& p, double x);

// V_+ = W^2 + W', the potential of the partner Hamiltonian A- A+.
double partner_potential(const PTParameters& p, double x);

// c_n = a Gamma(n+k+1/2) Gamma(n+k'+1/2) / (n! Gamma(n+k+k') (2n+k+k')).
double eigenfunction_norm(double kappa, double kappa_prime, std::size_t n, double a = 1.0);

// c_n^{-1/2} cos^{k'}(x/2a) sin^{k}(x/2a) P_n^{(k-1/2, k'-1/2)}(cos(x/a)).
double eigenfunction(const PTParameters& p, std::size_t n, double x);

// Same form with (k+1, k'+1); eigenvalue (n+1)(n+1+k+k') of A- A+.
double partner_eigenfunction(const PTParameters& p, std::size_t n, double x);

struct GridFunction {
  std::vector<double> xs;
  std::vector<double> values;

  // Two columns "x,value" with a header line; '.' decimal regardless of locale.
  void write_csv(std::ostream& os) const;
};

// count points evenly spaced strictly inside the box.
GridFunction sample_eigenfunction(const PTParameters& p, std::size_t n, std::size_t count,
                                  bool partner = false);

// Gauss-Legendre nodes mapped to (margin, pi a - margin).
struct InteriorRule {
  std::vector<double> xs;
  std::vector<double> weights;
};

InteriorRule interior_rule(const PTParameters& p, int order, double margin);

inline constexpr double kFdStep = 1e-5;

struct FactorizationResidual {
  double r1 = 0.0;  // || A- psi_{n+1} + sqrt(E_{n+1}) theta_n ||
  double r2 = 0.0;  // || A- psi_0 ||
};

// A- = d/dx + W with central differences (h = 1e-5, margin 10h). With the Jacobi sign
// convention above, A- maps psi_{n+1} to -sqrt(E_{n+1}) theta_n.
FactorizationResidual factorization_residual(const PTParameters& p, std::size_t n);

// || (-psi_n'' + V psi_n)/E_n - psi_n ||, n >= 1.
double schrodinger_residual(const PTParameters& p, std::size_t n);

// <psi_n| -d^2 + V |psi_n> by quadrature with finite-difference second derivatives.
double rayleigh_quotient(const PTParameters& p, std::size_t n);

// <psi_i|psi_j>, i, j = 0..n_max, 200-point rule with margin 1e-6 pi a.
Eigen::MatrixXd gram_matrix(const PTParameters& p, std::size_t n_max, int order = 200);

// U_nm = <psi_n|theta_m>, n, m = 0..n_max.
Eigen::MatrixXcd overlap_matrix(const PTParameters& p, std::size_t n_max);

// max |V_+ - V_- - 2 W'| / max(1, |2 W'|) over an interior grid.
double partner_relation_residual(const PTParameters& p);

}  // namespace cstates
