#include <cmath>
#include <numbers>

#include "cstates/fockspace.hpp"
#include "cstates/gazeau_klauder.hpp"
#include "cstates/specfun.hpp"
#include "suite_runner.hpp"

namespace cstates::cli::detail {

namespace {

// Deterministic spread of test vectors: Gaussian envelopes of varying width with
// quasi-random phases (golden-ratio sequence).
CVector probe_vector(std::size_t k, std::size_t n_max) {
  const double width = 2.0 + static_cast<double>(k % 5);
  const double centre = static_cast<double>(k % 3);
  CVector c(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) {
    const double x = (static_cast<double>(n) - centre) / width;
    const double phase = 2.0 * std::numbers::pi *
                         std::fmod(std::numbers::phi * static_cast<double>((k + 1) * (n + 3)), 1.0);
    c[n] = std::polar(std::exp(-x * x), phase);
  }
  return c;
}

}  // namespace

void ladder_suite(const SpectrumModel& m, const ToleranceTable& tol, Runner& run) {
  const std::string tag = "[" + m.describe() + "]";
  const std::size_t n_max = window_cap(m, 40);
  const LadderRep rep = build_ladder(m.with_alpha(0.3), n_max);

  run.check("hermiticity" + tag, tol.hermiticity, [&] {
    return (rep.a_plus_matrix() - rep.a_minus_matrix().adjoint()).cwiseAbs().maxCoeff();
  });
  run.check("number_operator" + tag, tol.ladder, [&] {
    const Eigen::MatrixXcd h = rep.a_plus_matrix() * rep.a_minus_matrix();
    double worst = 0.0;
    for (std::size_t n = 0; n <= n_max; ++n) {
      const auto i = static_cast<Eigen::Index>(n);
      const double e = energy(m, n);
      worst = std::max(worst, std::abs(h(i, i) - e) / std::max(1.0, e));
    }
    return worst;
  });
  run.check("commutator_gap" + tag, tol.ladder, [&] {
    const Eigen::MatrixXcd a = rep.a_minus_matrix();
    const Eigen::MatrixXcd ad = rep.a_plus_matrix();
    const Eigen::MatrixXcd c = a * ad - ad * a;
    double worst = 0.0;
    // The last diagonal entry sees the truncation edge.
    for (std::size_t n = 0; n < n_max; ++n) {
      const auto i = static_cast<Eigen::Index>(n);
      const double g = level_gap(m, n);
      worst = std::max(worst, std::abs(c(i, i) - g) / g);
    }
    return worst;
  });
  run.check("rs_inequality" + tag, tol.rs_inequality, [&] {
    double worst = 0.0;
    for (std::size_t k = 0; k < 50; ++k) {
      const FockVector v = make_fock_vector(probe_vector(k, n_max));
      const UncertaintyReport r = uncertainty(rep, v);
      worst = std::max(worst, (r.rs_bound - r.rs_product) / r.rs_product);
    }
    return std::max(0.0, worst);
  });
  run.check("gis_oracle_equation" + tag, tol.gis_equation, [&] {
    const cplx z = 1.0;
    const cplx lambda = 2.0;
    return with_growing_window(60, window_cap(m, 400), [&](std::size_t n) {
      const LadderRep r = build_ladder(m, n);
      return gis_equation_residual(r, gis_recurrence_oracle(r, z, lambda), z, lambda);
    });
  });
}

void gk_suite(const SpectrumModel& m, const ToleranceTable& tol, Runner& run) {
  const std::string label = m.describe();
  const std::size_t cap = window_cap(m, 800);
  std::vector<cplx> zs{0.5, {1.0, 1.0}, std::polar(3.0, std::numbers::pi / 7.0)};
  if (m.is_custom()) zs = {0.5, {0.5, 0.5}};

  for (const cplx z : zs) {
    for (const double alpha : {0.0, 0.3}) {
      const std::string tag = "[" + label + " z=" + fmt(z) + " alpha=" + fmt(alpha) + "]";
      auto state = [&] {
        return with_growing_window(60, cap, [&](std::size_t n) { return gk_state(m, z, alpha, n); });
      };
      run.check("eigen_residual" + tag, tol.gk_eigen, [&] {
        const GKState s = state();
        return eigen_residual(build_ladder(m.with_alpha(alpha), s.vector.n_max()), s.vector, z);
      });
      run.check("tail_bound" + tag, tol.gk_tail, [&] { return state().vector.tail_bound; });
      run.check("action_identity" + tag, tol.action, [&] {
        const GKState s = state();
        return std::abs(action_identity(s, build_ladder(m.with_alpha(alpha), s.vector.n_max())));
      });
    }
  }

  run.check("temporal_stability[" + label + "]", tol.temporal, [&] {
    const std::size_t n = window_cap(m, 80);
    const cplx z = m.is_custom() ? cplx(0.5) : cplx(1.0);
    const GKState s = gk_state(m, z, 0.2, n);
    const GKState moved = evolve(s, 0.7);
    const GKState twice = evolve(evolve(s, 0.3), 0.4);
    const GKState direct = gk_state(m, z, 0.9, n);
    double worst = 0.0;
    for (std::size_t k = 0; k <= n; ++k) {
      const cplx phased = s.vector.coeffs[k] * std::polar(1.0, -energy(m, k) * 0.7);
      worst = std::max({worst, std::abs(moved.vector.coeffs[k] - phased),
                        std::abs(moved.vector.coeffs[k] - twice.vector.coeffs[k]),
                        std::abs(moved.vector.coeffs[k] - direct.vector.coeffs[k])});
    }
    return worst;
  });

  if (const auto nu = m.nu()) {
    for (const double r : {0.5, 1.0, 2.0, 3.0, 4.0}) {
      run.check("pt_norm_closed_form[" + label + " r=" + fmt(r) + "]", tol.pt_norm, [&] {
        const double closed = pt_norm_closed(*nu, r);
        return std::abs(pt_norm_direct(m, r, 150) - closed) / closed;
      });
    }
    const RadialMeasure measure = pt_measure_nu(*nu);
    for (std::size_t n = 0; n <= 10; ++n) {
      run.check("identity_moment[" + label + " n=" + std::to_string(n) + "]", tol.gk_moment,
                [&] { return identity_moment_check(m, measure, n).residual; });
    }
  } else if (m.is_harmonic()) {
    // Flat measure d^2z/pi: the radial moment is 2 int r^{2n+1} e^{-r^2} dr / n!.
    for (std::size_t n = 0; n <= 10; ++n) {
      run.check("identity_moment[" + label + " n=" + std::to_string(n) + "]", tol.gk_moment, [&] {
        const double nn = static_cast<double>(n);
        auto f = [&](double r) {
          if (r <= 0.0) return 0.0;
          return 2.0 * std::exp((2.0 * nn + 1.0) * std::log(r) - r * r - std::lgamma(nn + 1.0));
        };
        return std::abs(gauss_legendre(400).integrate(f, 0.0, 12.0) - 1.0);
      });
    }
  } else {
    run.skip("identity_moment[" + label + "]", tol.gk_moment, "no closed measure");
  }

  for (const double alpha : {0.0, 0.3}) {
    run.check("bargmann_multiplication[" + label + " alpha=" + fmt(alpha) + "]",
              tol.bargmann_multiplication, [&] {
                const std::size_t n = window_cap(m, 60);
                const GKState s = gk_state(m, 0.4, alpha, n);
                const LadderRep rep = build_ladder(m.with_alpha(alpha), n);
                FockVector raised{rep.raise(s.vector.coeffs, true), 0.0};
                const cplx w(0.7, 0.2);
                const cplx lhs = bargmann_eval(m, raised, w, alpha);
                const cplx rhs = w * bargmann_eval(m, s.vector, w, alpha);
                return std::abs(lhs - rhs) / std::abs(rhs);
              });
  }
}

}  // namespace cstates::cli::detail
