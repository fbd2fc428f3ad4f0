#include "cstates/intelligent.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cstates/errors.hpp"
#include "cstates/specfun.hpp"

namespace cstates {

namespace {

bool is_unit(cplx lambda) { return std::abs(std::abs(lambda) - 1.0) <= 1e-14; }

cplx hyp0f1(double b, cplx x) {
  cplx term = 1.0;
  cplx sum = 1.0;
  for (int k = 0; k < kMaxTerms; ++k) {
    term *= x / ((b + k) * (k + 1.0));
    sum += term;
    if (k > std::abs(x) && std::abs(term) <= kSeriesTol * std::abs(sum)) return sum;
  }
  throw Error(ErrorKind::convergence, "0F1 series did not converge");
}

cplx ipow(cplx base, std::size_t k) {
  cplx out = 1.0;
  for (; k > 0; --k) out *= base;
  return out;
}

}  // namespace

const char* to_string(LambdaClass klass) {
  return klass == LambdaClass::coherent ? "coherent" : "squeezed";
}

LambdaClass validate_lambda(cplx lambda) {
  if (lambda == cplx(-1.0, 0.0)) {
    throw Error(ErrorKind::rejected, "lambda = -1 gives a non-normalizable state",
                "lambda_minus_one");
  }
  if (!(lambda.real() > 0.0)) {
    throw Error(ErrorKind::rejected, "Re(lambda) must be positive", "nonpositive_real_part");
  }
  return is_unit(lambda) ? LambdaClass::coherent : LambdaClass::squeezed;
}

cplx squeeze_root(cplx lambda) {
  validate_lambda(lambda);
  return std::sqrt((lambda - 1.0) / (lambda + 1.0));
}

GISParameters gis_parameters(cplx z, cplx lambda, double alpha, std::optional<double> nu) {
  GISParameters p;
  p.z = z;
  p.lambda = lambda;
  p.alpha = alpha;
  p.klass = validate_lambda(lambda);
  if (nu && lambda != cplx(1.0, 0.0)) {
    const cplx root = (1.0 + lambda) * squeeze_root(lambda);  // sqrt(lambda^2 - 1)
    p.alpha_plus = -0.5 * (*nu + 1.0) + z / root;
    p.alpha_minus = -0.5 * (*nu + 1.0) - z / root;
  }
  return p;
}

double delta_nh(const SpectrumModel& model, std::size_t n, std::size_t h) {
  if (2 * h > n) throw_domain("delta_nh requires 2h <= n");
  if (h == 0) return 1.0;
  // D[m][k] = Delta(m, k); the last index j_k = m-1 is either used or not.
  std::vector<std::vector<double>> d(n + 1, std::vector<double>(h + 1, 0.0));
  for (std::size_t m = 0; m <= n; ++m) {
    d[m][0] = 1.0;
    for (std::size_t k = 1; k <= h && 2 * k <= m; ++k) {
      d[m][k] = d[m - 1][k] + energy(model, m - 1) * d[m - 2][k - 1];
    }
  }
  return d[n][h];
}

FockVector gis_coefficients(const SpectrumModel& model, const GISParameters& params,
                            std::size_t n_max, double tail_tol) {
  validate_lambda(params.lambda);
  const auto e = energies(model, n_max);
  // T(m, h) = Delta(m, h)/sqrt(E(m)), scaled so nothing overflows:
  // T(m, h) = T(m-1, h)/sqrt(E_m) + sqrt(E_{m-1}/E_m) T(m-2, h-1).
  const std::size_t hmax = n_max / 2;
  std::vector<std::vector<double>> t(n_max + 1, std::vector<double>(hmax + 1, 0.0));
  t[0][0] = 1.0;
  for (std::size_t m = 1; m <= n_max; ++m) {
    const double inv = 1.0 / std::sqrt(e[m]);
    for (std::size_t k = 0; 2 * k <= m; ++k) {
      double v = 2 * k <= m - 1 ? t[m - 1][k] * inv : 0.0;
      if (k > 0) v += std::sqrt(e[m - 1]) * inv * t[m - 2][k - 1];
      t[m][k] = v;
    }
  }
  const cplx lam = params.lambda;
  const cplx two_z = 2.0 * params.z;
  const cplx squeeze = -(1.0 - lam * lam);
  const cplx scale = 1.0 / (1.0 + lam);
  CVector c(n_max + 1);
  cplx scale_n = 1.0;
  for (std::size_t n = 0; n <= n_max; ++n) {
    if (n > 0) scale_n *= scale;
    // (2z)^{n-2h} grouping keeps z = 0 regular.
    cplx sum = 0.0;
    for (std::size_t k = 0; 2 * k <= n; ++k) {
      if (t[n][k] == 0.0) continue;
      sum += ipow(squeeze, k) * ipow(two_z, n - 2 * k) * t[n][k];
    }
    c[n] = sum * scale_n * std::polar(1.0, -params.alpha * e[n]);
  }
  FockVector v = make_fock_vector(std::move(c));
  if (!(v.tail_bound < tail_tol)) {
    throw TruncationError("GIS coefficients have not decayed by n_max", 2 * n_max);
  }
  return v;
}

RSVerification verify_rs(const LadderRep& rep, const FockVector& state,
                         const GISParameters& params) {
  RSVerification out;
  out.report = uncertainty(rep, state);
  const UncertaintyReport& r = out.report;
  const double mod = std::abs(params.lambda);
  out.equality_gap_rel = std::abs(r.equality_gap) / r.rs_product;
  out.var_x_law = std::abs(r.var_x - mod * r.delta) / r.var_x;
  out.var_p_law = std::abs(r.var_p - r.delta / mod) / r.var_p;
  out.ratio_law = std::abs(r.var_x / r.var_p - mod * mod) / (mod * mod);
  out.phase_law = std::abs(params.lambda.imag() * r.mean_g - params.lambda.real() * r.mean_f) /
                  (mod * std::abs(r.mean_g));
  if (params.klass == LambdaClass::coherent) {
    const double theta = std::arg(params.lambda);
    out.coherent_balance = std::abs(r.var_x - r.var_p) / r.var_x;
    out.coherent_var = std::abs(r.var_x - r.mean_g / (2.0 * std::abs(std::cos(theta)))) / r.var_x;
    out.coherent_f = std::abs(r.mean_f - std::tan(theta) * r.mean_g) / std::abs(r.mean_g);
  }
  return out;
}

cplx gis_bargmann_function(double nu, cplx z_prime, cplx lambda, cplx z, int sign) {
  validate_lambda(lambda);
  if (sign != 1 && sign != -1) throw_domain("sign must be +1 or -1");
  if (lambda == cplx(1.0, 0.0)) return hyp0f1(nu + 1.0, z * z_prime);
  const cplx s = static_cast<double>(sign) * squeeze_root(lambda);
  const cplx a = 0.5 * (nu + 1.0) - z_prime / ((1.0 + lambda) * s);
  return std::exp(s * z) * hyp1f1(a, nu + 1.0, -2.0 * s * z);
}

cplx gis_disk_function(double nu, cplx zeta_prime, cplx lambda, DiskPoint zeta) {
  validate_lambda(lambda);
  if (lambda == cplx(1.0, 0.0)) return std::exp(zeta.zeta * zeta_prime);
  const cplx s = squeeze_root(lambda);
  const cplx w = s * zeta.zeta;
  if (!(std::abs(w) < 1.0)) {
    throw Error(ErrorKind::domain, "|s zeta| >= 1 leaves the principal branch", "branch");
  }
  const GISParameters p = gis_parameters(zeta_prime, lambda, 0.0, nu);
  return std::exp(*p.alpha_plus * log1p_c(w) + *p.alpha_minus * log1p_c(-w));
}

FockVector gis_disk_expansion(double nu, cplx zeta_prime, cplx lambda, std::size_t n_max,
                              double alpha, bool normalize) {
  validate_lambda(lambda);
  if (!(nu > 0.0)) throw_domain("gis_disk_expansion requires nu > 0");
  CVector c(n_max + 1);
  const bool limit = lambda == cplx(1.0, 0.0);
  cplx s = 0.0;
  cplx ap = 0.0;
  cplx am = 0.0;
  if (!limit) {
    s = squeeze_root(lambda);
    const GISParameters p = gis_parameters(zeta_prime, lambda, 0.0, nu);
    ap = *p.alpha_plus;
    am = *p.alpha_minus;
  }
  cplx pow2s = 1.0;
  cplx zp = 1.0;
  for (std::size_t n = 0; n <= n_max; ++n) {
    const double nn = static_cast<double>(n);
    if (n > 0) {
      pow2s *= 2.0 * s;
      zp *= zeta_prime;
    }
    const double weight = std::exp(0.5 * (std::lgamma(nn + 1.0) + std::lgamma(nu + 1.0) -
                                          std::lgamma(nn + nu + 1.0)));
    cplx taylor;
    if (limit) {
      taylor = zp * std::exp(-std::lgamma(nn + 1.0));
    } else {
      taylor = pow2s * jacobi_p<cplx>(static_cast<int>(n), ap - nn, am - nn, cplx(0.0));
    }
    c[n] = weight * taylor * std::polar(1.0, -alpha * nn * (nn + nu));
  }
  return make_fock_vector(std::move(c), normalize);
}

double laplace_bridge(double nu, std::size_t n, double zeta) {
  if (!(zeta > 0.0 && zeta < 1.0)) throw_domain("laplace_bridge requires 0 < zeta < 1");
  if (!(nu > 0.0)) throw_domain("laplace_bridge requires nu > 0");
  const double nn = static_cast<double>(n);
  const double lg_nu = std::lgamma(nu + 1.0);
  const double lg_n = std::lgamma(nn + 1.0);
  const double lg_nnu = std::lgamma(nn + nu + 1.0);
  const double expected = std::exp(nn * std::log(zeta) + 0.5 * (lg_nnu - lg_n - lg_nu));

  // z^{nu+n} e^{-z/zeta} peaks at (n+nu) zeta; cut where it is 1e-20 of the peak.
  const double p = nn + nu;
  auto log_shape = [&](double u) { return p * std::log(u) - u; };
  const double peak = p > 0.0 ? log_shape(p) : 0.0;
  double u_end = std::max(p, 1.0);
  while (log_shape(u_end) > peak - 46.0) u_end += 1.0;

  const double log_norm = -0.5 * (lg_n + lg_nnu);
  auto integrand = [&](double z) {
    if (z <= 0.0) return 0.0;
    return std::exp((nu + nn) * std::log(z) + log_norm - z / zeta);
  };
  const double q200 = gauss_legendre(200).integrate(integrand, 0.0, zeta * u_end);
  const double q400 = gauss_legendre(400).integrate(integrand, 0.0, zeta * u_end);
  if (!(std::abs(q200 - q400) <= 1e-8 * std::abs(q400))) {
    throw Error(ErrorKind::integration, "Laplace integral not converged between orders 200 and 400");
  }
  const double bridged = std::exp(-(nu + 1.0) * std::log(zeta) - 0.5 * lg_nu) * q400;
  return std::abs(bridged - expected) / expected;
}

}  // namespace cstates
