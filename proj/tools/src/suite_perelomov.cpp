#include <cmath>

#include "cstates/perelomov.hpp"
#include "suite_runner.hpp"

namespace cstates::cli::detail {

namespace {

inline constexpr double kOdeStep = 1e-4;
inline constexpr std::size_t kCnLevels = 10;

double max_rel(const std::vector<double>& a, const std::vector<double>& b) {
  double worst = 0.0;
  for (std::size_t n = 0; n < std::min(a.size(), b.size()); ++n) {
    worst = std::max(worst, std::abs(a[n] - b[n]) / std::abs(b[n]));
  }
  return worst;
}

}  // namespace

void perelomov_suite(const SpectrumModel& m, const ToleranceTable& tol, Runner& run) {
  const std::string label = m.describe();
  const bool closed = m.is_harmonic() || m.is_pt_family();
  const std::vector<double> radii =
      m.is_custom() ? std::vector<double>{0.3, 1.0} : std::vector<double>{0.3, 1.0, 2.0, 3.0};
  const std::size_t levels = m.is_custom() ? 5 : kCnLevels;

  // One integration serves every radius; a failure is reported on each ODE case.
  std::vector<DisplacementCoeffs> ode;
  std::string ode_error;
  try {
    ode = cn_ode_path(m, radii, levels, kOdeStep);
  } catch (const std::exception& e) {
    ode_error = e.what();
  }

  // The expansions do not depend on r; build them once.
  std::vector<CnExpansion> expansions;
  std::string series_error;
  try {
    for (std::size_t n = 0; n <= levels; ++n) expansions.emplace_back(m, n);
  } catch (const std::exception& e) {
    series_error = e.what();
  }

  for (std::size_t i = 0; i < radii.size(); ++i) {
    const double r = radii[i];
    const std::string tag = "[" + label + " r=" + fmt(r) + "]";
    auto series = [&] {
      if (!series_error.empty()) throw Error(ErrorKind::convergence, series_error);
      std::vector<double> v;
      for (const auto& e : expansions) v.push_back(e.evaluate(r).value);
      return v;
    };
    auto ode_values = [&] {
      if (!ode_error.empty()) throw Error(ErrorKind::integration, ode_error);
      return ode[i].values;
    };
    auto closed_values = [&] {
      std::vector<double> v(levels + 1);
      for (std::size_t n = 0; n <= levels; ++n) {
        v[n] = m.is_harmonic() ? cn_ho_closed(n, r) : cn_pt_closed(*m.nu(), n, r);
      }
      return v;
    };
    run.check("series_vs_ode" + tag, tol.cn_agreement,
              [&] { return max_rel(ode_values(), series()); });
    if (closed) {
      run.check("series_vs_closed" + tag, tol.cn_agreement,
                [&] { return max_rel(series(), closed_values()); });
      run.check("ode_vs_closed" + tag, tol.cn_agreement,
                [&] { return max_rel(ode_values(), closed_values()); });
    }
    if (m.is_harmonic()) {
      // F_n = 1/(E(n) c_n^2) must equal n! e^{r^2}.
      run.check("harmonic_F_n" + tag, tol.ho_norm, [&] {
        const auto c = series();
        double worst = 0.0;
        for (std::size_t n = 0; n <= levels; ++n) {
          const double nn = static_cast<double>(n);
          const double log_f = -std::lgamma(nn + 1.0) - 2.0 * std::log(c[n]);
          worst = std::max(worst, std::abs(std::expm1(log_f - std::lgamma(nn + 1.0) - r * r)));
        }
        return worst;
      });
    }
  }

  if (closed) {
    run.check("state_norm[" + label + "]", tol.state_norm, [&] {
      return std::abs(perelomov_state(m, {1.0, 0.5}, 0.3, 400).norm() - 1.0);
    });
  }

  const auto nu = m.nu();
  if (!nu) {
    run.skip("disk_identity[" + label + "]", tol.disk_moment, "no unit-disk representation");
    return;
  }
  for (std::size_t n = 0; n <= 10; ++n) {
    run.check("disk_identity[" + label + " n=" + std::to_string(n) + "]", tol.disk_moment,
              [&] { return disk_identity_check(*nu, n).residual; });
  }
  run.check("kernel_normalization[" + label + "]", tol.disk_kernel, [&] {
    double worst = 0.0;
    for (const cplx zeta : {cplx(0.0), cplx(0.3, 0.4), cplx(-0.7, 0.1), cplx(0.0, -0.95)}) {
      const DiskPoint p(zeta);
      worst = std::max(worst, std::abs(disk_kernel(*nu, p, p, 0.4, 0.4) - 1.0));
    }
    return worst;
  });
  run.check("kernel_reproducing[" + label + "]", tol.disk_reproducing, [&] {
    return disk_reproducing_residual(*nu, DiskPoint({0.3, 0.1}), DiskPoint({-0.2, 0.4}), 0.1,
                                     0.5, 0.3);
  });
}

}  // namespace cstates::cli::detail
