#include "cstates/perelomov.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "cstates/errors.hpp"
#include "cstates/specfun.hpp"

namespace cstates {

double pi_nested(const SpectrumModel& model, std::size_t m, std::size_t j) {
  if (j == 0) return 1.0;
  if (m == 0) return 0.0;
  // row[k] = pi(k, level); level 0 is 1 everywhere (pi(0,0) only enters with weight zero).
  const std::size_t width = m + j + 1;
  std::vector<double> row(width, 1.0);
  for (std::size_t level = 1; level <= j; ++level) {
    const std::size_t top = m + (j - level);
    std::vector<double> next(top + 1, 0.0);
    for (std::size_t k = 1; k <= top; ++k) {
      next[k] = next[k - 1] + energy(model, k) * row[k + 1];
    }
    row.swap(next);
  }
  return row[m];
}

const char* to_string(CnMethod method) {
  switch (method) {
    case CnMethod::series: return "series";
    case CnMethod::ode: return "ode";
    case CnMethod::closed_pt: return "closed_pt";
    case CnMethod::closed_ho: return "closed_ho";
  }
  return "unknown";
}

std::vector<DisplacementCoeffs> cn_ode_path(const SpectrumModel& model,
                                            const std::vector<double>& r_targets,
                                            std::size_t n_max, double step) {
  for (double r : r_targets) {
    if (!(r >= kOdeStart) || r > 5.0) throw_domain("cn_ode requires 1e-3 <= r_target <= 5");
  }
  if (!(step > 0.0) || step > 1e-3) throw_domain("cn_ode requires 0 < step <= 1e-3");

  using ld = long double;
  const std::size_t dim = n_max + 1;
  const CnExpansion closure(model, n_max + 1);
  std::vector<ld> e(dim + 1);
  for (std::size_t n = 0; n <= dim; ++n) e[n] = static_cast<ld>(energy(model, n));

  // At r0 = 1e-3 a short series is exact to rounding: w^j falls by 1e-6 per term.
  std::vector<ld> c(dim);
  for (std::size_t n = 0; n < dim; ++n) {
    c[n] = static_cast<ld>(CnExpansion(model, n, 12).evaluate(kOdeStart).value);
  }

  std::vector<std::size_t> order(r_targets.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return r_targets[x] < r_targets[y]; });

  std::vector<DisplacementCoeffs> out(r_targets.size());
  auto record = [&](std::size_t idx) {
    out[idx].r = r_targets[idx];
    out[idx].method = CnMethod::ode;
    out[idx].values.clear();
    for (ld v : c) out[idx].values.push_back(static_cast<double>(v));
  };

  auto rhs = [&](ld r, ld top, const std::vector<ld>& y, std::vector<ld>& dy) {
    for (std::size_t n = 0; n < dim; ++n) {
      const ld prev = n > 0 ? y[n - 1] : 0.0L;
      const ld up = n + 1 < dim ? y[n + 1] : top;
      dy[n] = (prev - static_cast<ld>(n) * y[n]) / r - e[n + 1] * r * up;
    }
  };

  std::array<std::vector<ld>, 4> k;
  for (auto& v : k) v.resize(dim);
  std::vector<ld> tmp(dim);
  ld r = kOdeStart;
  ld top_r = closure.evaluate_fast(r);
  const ld stiff = 0.005L / static_cast<ld>(dim);
  for (std::size_t idx : order) {
    const ld target = r_targets[idx];
    while (r < target) {
      ld h = std::min(static_cast<ld>(step), stiff * r);
      if (r + h > target) h = target - r;
      // The closure is the expensive part; each stage point is evaluated once.
      const ld top_mid = closure.evaluate_fast(r + 0.5L * h);
      const ld top_end = closure.evaluate_fast(r + h);
      rhs(r, top_r, c, k[0]);
      for (std::size_t i = 0; i < dim; ++i) tmp[i] = c[i] + 0.5L * h * k[0][i];
      rhs(r + 0.5L * h, top_mid, tmp, k[1]);
      for (std::size_t i = 0; i < dim; ++i) tmp[i] = c[i] + 0.5L * h * k[1][i];
      rhs(r + 0.5L * h, top_mid, tmp, k[2]);
      for (std::size_t i = 0; i < dim; ++i) tmp[i] = c[i] + h * k[2][i];
      rhs(r + h, top_end, tmp, k[3]);
      top_r = top_end;
      for (std::size_t i = 0; i < dim; ++i) {
        c[i] += h / 6.0L * (k[0][i] + 2.0L * k[1][i] + 2.0L * k[2][i] + k[3][i]);
        if (!std::isfinite(static_cast<double>(c[i])) || std::abs(c[i]) > 1e6L) {
          throw Error(ErrorKind::integration,
                      "c_n ODE blew up at r = " + std::to_string(static_cast<double>(r)));
        }
      }
      r += h;
    }
    record(idx);
  }
  return out;
}

DisplacementCoeffs cn_ode(const SpectrumModel& model, double r_target, std::size_t n_max,
                          double step) {
  return cn_ode_path(model, {r_target}, n_max, step).front();
}

double cn_pt_closed(double nu, std::size_t n, double r) {
  if (r < 0.0) throw_domain("cn_pt_closed requires r >= 0");
  const double nn = static_cast<double>(n);
  if (r == 0.0) return std::exp(-std::lgamma(nn + 1.0));
  const double log_cosh = r + std::log1p(std::exp(-2.0 * r)) - std::numbers::ln2;
  const double log_ratio = std::log(std::tanh(r) / r);
  return std::exp(-(nu + 1.0) * log_cosh + nn * log_ratio - std::lgamma(nn + 1.0));
}

double cn_ho_closed(std::size_t n, double r) {
  if (r < 0.0) throw_domain("cn_ho_closed requires r >= 0");
  return std::exp(-0.5 * r * r - std::lgamma(static_cast<double>(n) + 1.0));
}

cplx disk_parameter(cplx z) {
  const double r = std::abs(z);
  if (r == 0.0) return 0.0;
  return z * (std::tanh(r) / r);
}

DiskPoint::DiskPoint(cplx value) : zeta(value) {
  if (!(std::abs(value) < 1.0)) throw_domain("disk point must satisfy |zeta| < 1");
}

FockVector perelomov_state(const SpectrumModel& model, cplx z, double alpha,
                           std::size_t n_max) {
  const auto e = energies(model, n_max);
  const double r = std::abs(z);
  const double phi = std::arg(z);
  CVector c(n_max + 1, 0.0);
  if (model.is_harmonic() || model.is_pt_family()) {
    // |a_n| = r^n sqrt(E(n)) c_n(r); for the Poschl-Teller family this is
    // (1-|zeta|^2)^{(nu+1)/2} |zeta|^n sqrt(Gamma(n+nu+1)/(n! Gamma(nu+1))).
    const auto logs = log_energy_products(model, n_max);
    const double lr = r > 0.0 ? std::log(r) : 0.0;
    double log_prefactor = -0.5 * r * r;
    double log_step = lr;
    if (model.is_pt_family()) {
      const double nu = *model.nu();
      const double log_cosh = r + std::log1p(std::exp(-2.0 * r)) - std::numbers::ln2;
      log_prefactor = -(nu + 1.0) * log_cosh;
      log_step = r > 0.0 ? std::log(std::tanh(r)) : 0.0;
    }
    for (std::size_t n = 0; n <= n_max; ++n) {
      if (n > 0 && r == 0.0) break;
      const double nn = static_cast<double>(n);
      const double log_mag =
          log_prefactor + nn * log_step + 0.5 * logs[n] - std::lgamma(nn + 1.0);
      c[n] = std::polar(std::exp(log_mag), nn * phi - e[n] * alpha);
    }
    return make_fock_vector(std::move(c), false);
  }
  const auto logs = log_energy_products(model, n_max);
  double rn = 1.0;
  for (std::size_t n = 0; n <= n_max; ++n) {
    if (n > 0) rn *= r;
    const double value = rn * std::exp(0.5 * logs[n]) * cn_series(model, n, r);
    c[n] = std::polar(1.0, static_cast<double>(n) * phi - e[n] * alpha) * value;
  }
  return make_fock_vector(std::move(c), false);
}

cplx disk_kernel(double nu, DiskPoint zeta1, DiskPoint zeta2, double alpha1, double alpha2) {
  if (!(nu > 0.0)) throw_domain("disk_kernel requires nu > 0");
  const cplx w = std::conj(zeta1.zeta) * zeta2.zeta;
  const double q = std::abs(w);
  const double pref = std::pow((1.0 - std::norm(zeta1.zeta)) * (1.0 - std::norm(zeta2.zeta)),
                               0.5 * (nu + 1.0));
  const double dalpha = alpha2 - alpha1;
  cplx sum = 1.0;
  cplx wn = 1.0;
  double g = 1.0;  // Gamma(n+nu+1)/(n! Gamma(nu+1))
  for (std::size_t n = 1; n < 100000; ++n) {
    const double nn = static_cast<double>(n);
    wn *= w;
    g *= (nn + nu) / nn;
    const cplx t = wn * g * std::polar(1.0, -dalpha * nn * (nn + nu));
    sum += t;
    const double rho = q * (nn + nu + 1.0) / (nn + 1.0);
    if (rho < 1.0 && std::abs(t) * rho / (1.0 - rho) < 1e-14 * std::abs(sum)) break;
    if (q == 0.0) break;
  }
  return pref * sum;
}

DiskIdentityCheck disk_identity_check(double nu, std::size_t n) {
  if (!(nu > 0.0)) throw_domain("disk_identity_check requires nu > 0");
  if (n > 20) throw_domain("disk_identity_check supports n <= 20");
  const double nn = static_cast<double>(n);
  const double log_g = std::lgamma(nn + nu + 1.0) - std::lgamma(nn + 1.0) - std::lgamma(nu + 1.0);
  // nu G_n int_0^1 (1-t)^{nu-1} t^n dt, t = |zeta|^2 after the angular integral.
  auto f = [&](double t) {
    return nu * std::exp(log_g + (nu - 1.0) * std::log1p(-t) + nn * std::log(t));
  };
  const double q200 = gauss_legendre(200).integrate(f, 0.0, 1.0);
  const double q400 = gauss_legendre(400).integrate(f, 0.0, 1.0);
  DiskIdentityCheck c;
  c.moment = q400;
  c.order_gap = std::abs(q200 - q400) / std::abs(q400);
  if (!(c.order_gap <= 1e-8)) {
    throw Error(ErrorKind::integration, "disk moment quadrature not converged");
  }
  c.residual = std::abs(q400 - 1.0);
  return c;
}

double disk_reproducing_residual(double nu, DiskPoint zeta1, DiskPoint zeta2, double alpha1,
                                 double alpha2, double alpha) {
  const QuadratureRule rule = gauss_legendre(200);
  constexpr int kAngles = 128;
  cplx total = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double rho = 0.5 * (1.0 + rule.nodes[i]);
    const double wr = 0.5 * rule.weights[i];
    const double jac = rho / ((1.0 - rho * rho) * (1.0 - rho * rho));
    cplx ring = 0.0;
    for (int k = 0; k < kAngles; ++k) {
      const DiskPoint zeta(std::polar(rho, 2.0 * std::numbers::pi * k / kAngles));
      ring += disk_kernel(nu, zeta1, zeta, alpha1, alpha) * disk_kernel(nu, zeta, zeta2, alpha, alpha2);
    }
    total += wr * jac * ring * (2.0 * std::numbers::pi / kAngles);
  }
  total *= nu / std::numbers::pi;
  return std::abs(total - disk_kernel(nu, zeta1, zeta2, alpha1, alpha2));
}

}  // namespace cstates
