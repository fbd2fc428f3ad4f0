#include <cmath>
#include <numbers>
#include <variant>

#include "cstates/poschl_teller_position.hpp"
#include "cstates/specfun.hpp"
#include "suite_runner.hpp"

namespace cstates::cli::detail {

void position_suite(const SpectrumModel& m, const ToleranceTable& tol, Runner& run) {
  const std::string label = m.describe();
  const auto* pt = std::get_if<PoschlTeller>(&m.kind());
  if (!pt) {
    run.skip("position[" + label + "]", tol.gram, "no position-space Poschl-Teller form");
    return;
  }
  const PTParameters p(pt->kappa, pt->kappa_prime);

  run.check("gram_identity[" + label + " n<=8]", tol.gram, [&] {
    const Eigen::MatrixXd g = gram_matrix(p, 8);
    return (g - Eigen::MatrixXd::Identity(9, 9)).cwiseAbs().maxCoeff();
  });
  run.check("partner_gram_identity[" + label + " n<=5]", tol.gram, [&] {
    const InteriorRule rule = interior_rule(p, 200, 1e-6 * p.width());
    double worst = 0.0;
    for (std::size_t i = 0; i <= 5; ++i) {
      for (std::size_t j = 0; j <= 5; ++j) {
        double s = 0.0;
        for (std::size_t k = 0; k < rule.xs.size(); ++k) {
          s += rule.weights[k] * partner_eigenfunction(p, i, rule.xs[k]) *
               partner_eigenfunction(p, j, rule.xs[k]);
        }
        worst = std::max(worst, std::abs(s - (i == j ? 1.0 : 0.0)));
      }
    }
    return worst;
  });
  run.check("riccati[" + label + "]", tol.riccati, [&] {
    const InteriorRule rule = interior_rule(p, 64, 1e-3 * p.width());
    double worst = 0.0;
    for (double x : rule.xs) {
      const double w = superpotential(p, x);
      const double v = potential(p, x);
      worst = std::max(worst, std::abs(w * w - superpotential_derivative(p, x) - v) /
                                  std::max(1.0, std::abs(v)));
    }
    return worst;
  });
  run.check("partner_relation[" + label + "]", tol.partner,
            [&] { return partner_relation_residual(p); });
  for (std::size_t n = 0; n <= 4; ++n) {
    const std::string tag = "[" + label + " n=" + std::to_string(n) + "]";
    run.check("factorization_r1" + tag, tol.finite_difference,
              [&] { return factorization_residual(p, n).r1; });
    if (n == 0) {
      run.check("factorization_r2[" + label + "]", tol.finite_difference,
                [&] { return factorization_residual(p, 0).r2; });
      continue;
    }
    run.check("schrodinger" + tag, tol.finite_difference, [&] { return schrodinger_residual(p, n); });
    run.check("rayleigh_quotient" + tag, tol.rayleigh, [&] {
      const double e = static_cast<double>(n) * (static_cast<double>(n) + p.nu());
      return std::abs(rayleigh_quotient(p, n) - e) / e;
    });
  }
  run.check("overlap_row_norm[" + label + " n=0 n_max=20]", tol.overlap_row,
            [&] { return std::abs(overlap_matrix(p, 20).row(0).squaredNorm() - 1.0); });
}

void specfun_suite(const ToleranceTable& tol, Runner& run) {
  run.check("kummer_transformation", tol.special_kummer, [&] {
    double worst = 0.0;
    for (const cplx a : {cplx(0.5), cplx(-1.3, 0.4), cplx(2.2), cplx(3.0, -1.0)}) {
      for (const cplx b : {cplx(1.5), cplx(3.1), cplx(0.7, 0.2), cplx(5.0)}) {
        for (const cplx z : {cplx(-4.5), cplx(2.5), cplx(1.0, 3.0), cplx(-2.0, -2.0), cplx(0.0, 5.0)}) {
          const cplx lhs = hyp1f1(a, b, z);
          const cplx rhs = std::exp(z) * hyp1f1(b - a, b, -z);
          worst = std::max(worst, std::abs(lhs - rhs) / std::abs(lhs));
        }
      }
    }
    return worst;
  });
  run.check("bessel_wronskian", tol.wronskian, [&] {
    double worst = 0.0;
    for (const double nu : {0.0, 0.7, 2.0, 4.2}) {
      for (const double x : {0.5, 1.0, 5.0, 20.0}) {
        // x (I_nu K_{nu+1} + I_{nu+1} K_nu) = 1, combined in the log domain.
        const double t1 = std::exp(log_bessel_i(nu, x) + log_bessel_k(nu + 1.0, x));
        const double t2 = std::exp(log_bessel_i(nu + 1.0, x) + log_bessel_k(nu, x));
        worst = std::max(worst, std::abs(x * (t1 + t2) - 1.0));
      }
    }
    return worst;
  });
  run.check("jacobi_symmetry", tol.jacobi_symmetry, [&] {
    double worst = 0.0;
    const double params[][2] = {{0.5, 1.5}, {2.0, -0.5}, {3.5, 3.2}, {0.0, 0.0}};
    for (const auto& ab : params) {
      for (int n = 0; n <= 12; ++n) {
        for (double x = -1.0; x <= 1.0; x += 0.125) {
          const double lhs = jacobi_p(n, ab[0], ab[1], -x);
          const double rhs = (n % 2 ? -1.0 : 1.0) * jacobi_p(n, ab[1], ab[0], x);
          worst = std::max(worst, std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
        }
      }
    }
    return worst;
  });
  run.check("quadrature_exactness", tol.quadrature, [&] {
    double worst = 0.0;
    for (const int order : {2, 3, 5, 16, 64, 200, 400}) {
      const QuadratureRule q = gauss_legendre(order);
      double wsum = 0.0;
      for (double w : q.weights) wsum += w;
      worst = std::max(worst, std::abs(wsum - 2.0));
      // Chebyshev T_k integrates to (1 + (-1)^k)/(1 - k^2) over [-1, 1].
      for (int k = 0; k <= 2 * order - 1; k += std::max(1, order / 8)) {
        const double exact = k == 1 ? 0.0 : (k % 2 ? 0.0 : 2.0 / (1.0 - double(k) * k));
        const double got = q.integrate([k](double x) { return std::cos(k * std::acos(x)); }, -1.0, 1.0);
        worst = std::max(worst, std::abs(got - exact));
      }
    }
    return worst;
  });
  run.check("gauss_summation", tol.wronskian, [&] {
    return std::abs(hyp2f1(0.5, 0.5, 1.5, 1.0) - std::numbers::pi / 2.0);
  });
}

}  // namespace cstates::cli::detail
