#include <cmath>
#include <numbers>

#include "cstates/gazeau_klauder.hpp"
#include "cstates/intelligent.hpp"
#include "suite_runner.hpp"

namespace cstates::cli::detail {

namespace {

const std::vector<cplx>& lambda_grid() {
  static const std::vector<cplx> g{1.0, 2.0, {0.5, 0.5}, std::polar(1.0, std::numbers::pi / 6.0),
                                   std::polar(1.0, -std::numbers::pi / 3.0)};
  return g;
}

const std::vector<cplx>& z_grid() {
  static const std::vector<cplx> g{0.0, 1.0, {0.0, 2.0}, std::polar(1.5, std::numbers::pi / 4.0)};
  return g;
}

// Taylor coefficients t_0..t_count-1 of f on the circle |x| = rho by the trapezoid rule.
template <class F>
std::vector<cplx> cauchy_taylor(F&& f, double rho, std::size_t count, int points = 256) {
  std::vector<cplx> samples(static_cast<std::size_t>(points));
  for (int k = 0; k < points; ++k) {
    samples[static_cast<std::size_t>(k)] =
        f(std::polar(rho, 2.0 * std::numbers::pi * k / points));
  }
  std::vector<cplx> t(count);
  for (std::size_t n = 0; n < count; ++n) {
    cplx acc = 0.0;
    for (int k = 0; k < points; ++k) {
      acc += samples[static_cast<std::size_t>(k)] *
             std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>(n) * k / points);
    }
    t[n] = acc / (static_cast<double>(points) * std::pow(rho, static_cast<double>(n)));
  }
  return t;
}

// Second moments weight level n by roughly E_n, so a tail that is fine for the coefficients
// (1e-10) still shows up at 1e-8 in the variances. Moment checks ask for much less.
inline constexpr double kMomentTail = 1e-16;

}  // namespace

void gis_suite(const SpectrumModel& m, const ToleranceTable& tol, Runner& run) {
  const std::string label = m.describe();
  const std::size_t cap = window_cap(m, 640);

  for (const cplx lambda : lambda_grid()) {
    for (const cplx z : z_grid()) {
      const std::string tag =
          "[" + label + " lambda=" + fmt(lambda) + " z=" + fmt(z) + "]";
      const GISParameters params = gis_parameters(z, lambda);
      auto closed = [&](double tail) {
        return with_growing_window(
            80, cap, [&](std::size_t n) { return gis_coefficients(m, params, n, tail); });
      };
      run.check("closed_vs_oracle" + tag, tol.gis_closed, [&] {
        const FockVector d = closed(kUncertaintyTailTol);
        const FockVector o = gis_recurrence_oracle(build_ladder(m, d.n_max()), z, lambda);
        cplx phase = d.coeffs[0] / o.coeffs[0];
        phase /= std::abs(phase);
        double worst = 0.0;
        for (std::size_t n = 0; n <= 15; ++n) {
          worst = std::max(worst, std::abs(d.coeffs[n] - phase * o.coeffs[n]));
        }
        return worst;
      });
      auto rs = [&] {
        const FockVector d = closed(kMomentTail);
        return verify_rs(build_ladder(m, d.n_max()), d, params);
      };
      run.check("rs_equality" + tag, tol.rs_equality, [&] { return rs().equality_gap_rel; });
      run.check("ratio_law" + tag, tol.rs_ratio, [&] { return rs().ratio_law; });
      run.check("phase_law" + tag, tol.rs_ratio, [&] { return rs().phase_law; });
    }
  }

  run.check("closed_vs_oracle[" + label + " lambda=2 z=1 alpha=0.4]", tol.gis_closed, [&] {
    const FockVector d = gis_coefficients(m, gis_parameters(1.0, 2.0, 0.4), window_cap(m, 80));
    const FockVector o = gis_recurrence_oracle(build_ladder(m.with_alpha(0.4), d.n_max()), 1.0, 2.0);
    double worst = 0.0;
    for (std::size_t n = 0; n <= 15; ++n) worst = std::max(worst, std::abs(d.coeffs[n] - o.coeffs[n]));
    return worst;
  });

  for (const double theta : {std::numbers::pi / 6.0, -std::numbers::pi / 6.0,
                             std::numbers::pi / 3.0, -std::numbers::pi / 3.0}) {
    const std::string tag = "[" + label + " theta=" + fmt(theta) + "]";
    const GISParameters params = gis_parameters(1.0, std::polar(1.0, theta));
    auto check = [&] {
      const FockVector d = with_growing_window(
          80, cap, [&](std::size_t n) { return gis_coefficients(m, params, n, kMomentTail); });
      return verify_rs(build_ladder(m, d.n_max()), d, params);
    };
    run.check("coherent_balance" + tag, tol.coherent, [&] { return check().coherent_balance; });
    run.check("coherent_variance" + tag, tol.coherent, [&] { return check().coherent_var; });
    run.check("coherent_mean_f" + tag, tol.coherent, [&] { return check().coherent_f; });
  }

  run.check("lambda_one_mean_f[" + label + "]", tol.coherent, [&] {
    const GISParameters params = gis_parameters({0.8, 0.3}, 1.0);
    const FockVector d = with_growing_window(
        80, cap, [&](std::size_t n) { return gis_coefficients(m, params, n, kMomentTail); });
    const UncertaintyReport r = uncertainty(build_ladder(m, d.n_max()), d);
    return std::abs(r.mean_f) / std::abs(r.mean_g);
  });

  if (m.is_harmonic()) {
    run.check("harmonic_vacuum_variance[" + label + "]", tol.harmonic_vacuum, [&] {
      const GISParameters params = gis_parameters({0.8, 0.3}, 1.0);
      const FockVector d = gis_coefficients(m, params, 80);
      const UncertaintyReport r = uncertainty(build_ladder(m, 80), d);
      return std::max(std::abs(2.0 * r.var_x - 1.0), std::abs(2.0 * r.var_p - 1.0));
    });
    // z = 0: exp(c a+^2/2)|0> with c = (lambda-1)/(lambda+1).
    for (const double lambda : {0.5, 2.0, 3.0}) {
      run.check("squeezed_vacuum[" + label + " lambda=" + fmt(lambda) + "]", tol.harmonic_vacuum,
                [&] {
                  const std::size_t n_max = 160;
                  const FockVector d = gis_coefficients(m, gis_parameters(0.0, lambda), n_max);
                  const double c = (lambda - 1.0) / (lambda + 1.0);
                  CVector ref(n_max + 1, 0.0);
                  for (std::size_t k = 0; 2 * k <= n_max; ++k) {
                    const double kk = static_cast<double>(k);
                    ref[2 * k] = std::pow(c, kk) *
                                 std::exp(0.5 * std::lgamma(2.0 * kk + 1.0) - kk * std::log(2.0) -
                                          std::lgamma(kk + 1.0));
                  }
                  const FockVector e = make_fock_vector(ref);
                  double worst = 0.0;
                  for (std::size_t n = 0; n <= n_max; ++n) {
                    worst = std::max(worst, std::abs(d.coeffs[n] - e.coeffs[n]));
                  }
                  return worst;
                });
    }
  }

  const auto nu = m.nu();
  if (!nu) {
    run.skip("analytic_representations[" + label + "]", tol.bargmann_taylor,
             "the hypergeometric forms exist for the Poschl-Teller family only");
    return;
  }

  for (const cplx lambda : {cplx(2.0), cplx(0.5, 0.5), std::polar(1.0, std::numbers::pi / 6.0)}) {
    run.check("bargmann_taylor[" + label + " lambda=" + fmt(lambda) + "]", tol.bargmann_taylor,
              [&] {
                const cplx zp(1.0, 0.3);
                const std::size_t count = 11;
                const auto t = cauchy_taylor(
                    [&](cplx x) { return gis_bargmann_function(*nu, zp, lambda, x); }, 2.0, count);
                const FockVector d = gis_coefficients(m, gis_parameters(zp, lambda), 80);
                const auto logs = log_energy_products(m, count);
                double worst = 0.0;
                for (std::size_t n = 1; n < count; ++n) {
                  const cplx from_function = t[n] * std::exp(0.5 * logs[n]) / t[0];
                  const cplx from_closed = d.coeffs[n] / d.coeffs[0];
                  worst = std::max(worst, std::abs(from_function - from_closed) / std::abs(from_closed));
                }
                return worst;
              });
  }
  run.check("kummer_sign[" + label + "]", tol.kummer, [&] {
    double worst = 0.0;
    for (const cplx lambda : {cplx(2.0), cplx(0.5, 0.5)}) {
      for (const cplx x : {cplx(0.7), cplx(-1.2, 0.5), cplx(0.0, 2.0)}) {
        const cplx up = gis_bargmann_function(*nu, 1.0, lambda, x, +1);
        const cplx down = gis_bargmann_function(*nu, 1.0, lambda, x, -1);
        worst = std::max(worst, std::abs(up - down) / std::abs(up));
      }
    }
    return worst;
  });
  run.check("bargmann_lambda_one[" + label + "]", tol.kummer, [&] {
    // 0F1(;nu+1; z z') against the Gazeau-Klauder Bargmann series with f_n = z'^n/sqrt(E(n)).
    const cplx zp(0.5, 0.2);
    const cplx x(0.3, -0.4);
    const std::size_t n_max = 60;
    const auto logs = log_energy_products(m, n_max);
    CVector f(n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n) {
      f[n] = std::pow(zp, static_cast<double>(n)) * std::exp(-0.5 * logs[n]);
    }
    const cplx series = bargmann_eval(m, FockVector{f, 0.0}, x, 0.0);
    return std::abs(gis_bargmann_function(*nu, zp, 1.0, x) - series) / std::abs(series);
  });
  run.check("bargmann_lambda_limit[" + label + "]", tol.lambda_limit, [&] {
    const cplx zp(0.5, 0.2);
    const cplx x(0.3, -0.4);
    return std::abs(gis_bargmann_function(*nu, zp, 1.0 + 1e-8, x) -
                    gis_bargmann_function(*nu, zp, 1.0, x));
  });

  for (const cplx lambda : {cplx(2.0), cplx(0.5, 0.5), std::polar(1.0, std::numbers::pi / 6.0)}) {
    const std::string tag = "[" + label + " lambda=" + fmt(lambda) + "]";
    const cplx zp(0.5, 0.0);
    run.check("disk_expansion_vs_taylor" + tag, tol.disk_taylor, [&] {
      const std::size_t count = 21;
      const FockVector e = gis_disk_expansion(*nu, zp, lambda, count - 1, 0.0, false);
      const auto t = cauchy_taylor(
          [&](cplx x) { return gis_disk_function(*nu, zp, lambda, DiskPoint(x)); }, 0.5, count);
      double worst = 0.0;
      double scale = 0.0;
      for (std::size_t n = 0; n < count; ++n) {
        const double nn = static_cast<double>(n);
        const double w = std::exp(0.5 * (std::lgamma(nn + 1.0) + std::lgamma(*nu + 1.0) -
                                         std::lgamma(nn + *nu + 1.0)));
        worst = std::max(worst, std::abs(e.coeffs[n] - w * t[n]));
        scale = std::max(scale, std::abs(e.coeffs[n]));
      }
      return worst / scale;
    });
    run.check("disk_expansion_vs_closed_form" + tag, tol.gis_closed, [&] {
      const FockVector e = gis_disk_expansion(*nu, zp, lambda, 80);
      const FockVector d = gis_coefficients(m, gis_parameters(zp, lambda), 80);
      cplx phase = d.coeffs[0] / e.coeffs[0];
      phase /= std::abs(phase);
      double worst = 0.0;
      for (std::size_t n = 0; n <= 30; ++n) worst = std::max(worst, std::abs(d.coeffs[n] - phase * e.coeffs[n]));
      return worst;
    });
  }
  run.check("disk_lambda_limit[" + label + "]", tol.lambda_limit, [&] {
    const cplx zp(0.5, 0.0);
    const DiskPoint zeta(0.3);
    return std::abs(gis_disk_function(*nu, zp, 1.0 + 1e-8, zeta) - std::exp(zeta.zeta * zp));
  });
  for (const double zeta : {0.3, 0.5, 0.8}) {
    run.check("laplace_bridge[" + label + " zeta=" + fmt(zeta) + "]", tol.laplace, [&] {
      double worst = 0.0;
      for (std::size_t n = 0; n <= 8; ++n) worst = std::max(worst, laplace_bridge(*nu, n, zeta));
      return worst;
    });
  }
}

}  // namespace cstates::cli::detail
