#include "cstates/gazeau_klauder.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cstates/errors.hpp"
#include "cstates/specfun.hpp"

namespace cstates {

namespace {

void check_window(const SpectrumModel& model, std::size_t n_max) {
  if (auto top = model.max_level(); top && n_max > *top) {
    throw Error(ErrorKind::out_of_range, "n_max " + std::to_string(n_max) +
                                             " exceeds the custom table (" +
                                             std::to_string(*top) + ")");
  }
}

}  // namespace

double pt_norm_closed(double nu, double r) {
  if (r == 0.0) return 1.0;
  return std::exp(log_gamma(nu + 1.0) + log_bessel_i(nu, 2.0 * r) - nu * std::log(r));
}

double pt_norm_direct(const SpectrumModel& model, double r, std::size_t n_max) {
  const auto logs = log_energy_products(model, n_max);
  double s = 0.0;
  if (r == 0.0) return 1.0;
  const double lr = std::log(r);
  for (std::size_t n = 0; n <= n_max; ++n) s += std::exp(2.0 * n * lr - logs[n]);
  return s;
}

GKState gk_state(const SpectrumModel& model, cplx z, double alpha, std::size_t n_max) {
  check_window(model, n_max);
  if (model.is_custom()) {
    const auto top = *model.max_level();
    const RadiusEstimate R = radius_estimate(model, std::max<std::size_t>(top, 10));
    if (!R.infinite && std::abs(z) >= R.value) {
      throw Error(ErrorKind::divergence, "|z| is outside the radius of convergence " +
                                             std::to_string(R.value));
    }
  }
  const auto e = energies(model, n_max);
  const auto logs = log_energy_products(model, n_max);
  const double r = std::abs(z);
  const double phi = std::arg(z);
  CVector c(n_max + 1, 0.0);
  c[0] = 1.0;
  if (r > 0.0) {
    const double lr = std::log(r);
    for (std::size_t n = 1; n <= n_max; ++n) {
      const double mag = std::exp(n * lr - 0.5 * logs[n]);
      c[n] = std::polar(mag, n * phi - e[n] * alpha);
    }
  }
  GKState s{model.with_alpha(alpha), z, alpha, make_fock_vector(c), 1.0};
  if (!(s.vector.tail_bound < kGkTailTol)) {
    throw TruncationError("GK tail above 1e-12; increase n_max", 2 * n_max);
  }
  if (model.is_harmonic()) {
    s.norm_const = std::exp(-0.5 * r * r);
  } else if (auto nu = model.nu()) {
    s.norm_const = std::sqrt(std::exp(log_gamma(*nu + 1.0)) / pt_norm_closed(*nu, r));
  } else {
    s.norm_const = std::abs(s.vector.coeffs[0]);
  }
  return s;
}

GKState evolve(const GKState& state, double t) {
  GKState out = state;
  out.alpha = state.alpha + t;
  out.model = state.model.with_alpha(out.alpha);
  const auto e = energies(state.model, state.vector.n_max());
  for (std::size_t n = 0; n < out.vector.coeffs.size(); ++n) {
    out.vector.coeffs[n] *= std::polar(1.0, -e[n] * t);
  }
  return out;
}

double action_identity(const GKState& state, const LadderRep& rep) {
  if (!(state.vector.tail_bound < kGkTailTol)) {
    throw TruncationError("GK tail above 1e-12", 2 * rep.n_max);
  }
  double h = 0.0;
  const std::size_t n = std::min(rep.dim(), state.vector.coeffs.size());
  for (std::size_t k = 0; k < n; ++k) h += std::norm(state.vector.coeffs[k]) * rep.h_diag[k];
  return h - std::norm(state.z);
}

RadialMeasure pt_measure_nu(double nu) {
  if (!(nu >= 2.0)) throw_domain("pt_measure requires kappa + kappa' >= 2");
  RadialMeasure m;
  m.nu = nu;
  m.weight = [nu](double r) {
    if (r <= 0.0) return 0.0;
    return 2.0 / std::numbers::pi *
           std::exp(log_bessel_i(nu, 2.0 * r) + log_bessel_k(nu, 2.0 * r)) * r;
  };
  // The n = 20 moment integrand behaves like r^{2n+nu+1} K_nu(2r).
  const double p = 2.0 * 20 + nu + 1.0;
  auto log_integrand = [&](double r) { return p * std::log(r) + log_bessel_k(nu, 2.0 * r); };
  double r = 0.5 * p;
  const double peak = log_integrand(r);
  while (log_integrand(r) > peak - 37.0) r += 0.5;
  m.r_cutoff = r;
  return m;
}

RadialMeasure pt_measure(double kappa, double kappa_prime) {
  return pt_measure_nu(kappa + kappa_prime);
}

MomentCheck identity_moment_check(const SpectrumModel& model, const RadialMeasure& measure,
                                  std::size_t n) {
  if (n > 20) throw_domain("identity_moment_check supports n <= 20");
  const auto nu = model.nu();
  if (!nu) throw Error(ErrorKind::domain, "no closed measure for this spectrum", "no_closed_measure");
  if (std::abs(*nu - measure.nu) > 1e-12) throw_domain("measure and model disagree on nu");
  const double log_en = log_energy_products(model, n).back();
  const double lg = log_gamma(*nu + 1.0);
  // |<psi_n|z>|^2 = r^{2n} / (E(n) * sum_k r^{2k}/E(k)), with the sum in closed form.
  auto integrand = [&](double r) {
    if (r <= 0.0) return 0.0;
    const double lr = std::log(r);
    const double occ = 2.0 * n * lr - log_en - (lg + log_bessel_i(*nu, 2.0 * r) - *nu * lr);
    return 2.0 * std::numbers::pi * measure.weight(r) * std::exp(occ);
  };
  const double q200 = gauss_legendre(200).integrate(integrand, 0.0, measure.r_cutoff);
  const double q400 = gauss_legendre(400).integrate(integrand, 0.0, measure.r_cutoff);
  MomentCheck c;
  c.moment = q400;
  c.order_gap = std::abs(q200 - q400) / std::abs(q400);
  if (!(c.order_gap <= 1e-8)) {
    throw Error(ErrorKind::integration, "moment quadrature not converged between orders 200 and 400");
  }
  c.residual = std::abs(q400 - 1.0);
  return c;
}

cplx bargmann_eval(const SpectrumModel& model, const FockVector& coeffs, cplx z, double alpha) {
  const std::size_t n_max = coeffs.n_max();
  check_window(model, n_max);
  const auto e = energies(model, n_max);
  const auto logs = log_energy_products(model, n_max);
  cplx sum = 0.0;
  double mass = 0.0;
  std::vector<double> mags(n_max + 1, 0.0);
  cplx zn = 1.0;
  for (std::size_t n = 0; n <= n_max; ++n) {
    if (n > 0) zn *= z;
    const cplx term = coeffs.coeffs[n] * zn * std::polar(std::exp(-0.5 * logs[n]), e[n] * alpha);
    sum += term;
    mags[n] = std::abs(term);
    mass += mags[n];
  }
  const double edge = mags[n_max] + (n_max > 0 ? mags[n_max - 1] : 0.0);
  if (!std::isfinite(mass) || edge > 1e-12 * mass) {
    throw Error(ErrorKind::divergence, "Bargmann series has not converged at the requested z");
  }
  return sum;
}

}  // namespace cstates
