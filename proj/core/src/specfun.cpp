#include "cstates/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "cstates/errors.hpp"

namespace cstates {

namespace {

[[noreturn]] void no_convergence(const char* who) {
  throw Error(ErrorKind::convergence, std::string(who) + ": series did not converge");
}

bool is_nonpositive_integer(cplx v) {
  return v.imag() == 0.0 && v.real() <= 0.0 && v.real() == std::floor(v.real());
}

double log_sum_exp(const std::vector<double>& logs) {
  const double m = *std::max_element(logs.begin(), logs.end());
  double s = 0.0;
  for (double l : logs) s += std::exp(l - m);
  return m + std::log(s);
}

}  // namespace

double log_gamma(double x) {
  if (!(x > 0.0)) throw_domain("log_gamma requires x > 0");
  return std::lgamma(x);
}

double log_bessel_i(double nu, double x) {
  if (nu < 0.0 || x < 0.0) throw_domain("bessel_i requires nu >= 0 and x >= 0");
  if (x == 0.0) return nu == 0.0 ? 0.0 : -std::numeric_limits<double>::infinity();
  const double lh = std::log(0.5 * x);
  std::vector<double> logs;
  double peak = -std::numeric_limits<double>::infinity();
  for (int k = 0; k < kMaxTerms; ++k) {
    const double lt = (nu + 2.0 * k) * lh - std::lgamma(k + 1.0) - std::lgamma(nu + k + 1.0);
    logs.push_back(lt);
    peak = std::max(peak, lt);
    // Terms are log-concave in k; past the peak the tail is dominated by a geometric series.
    if (lt < peak && lt < peak + std::log(kSeriesTol) - 2.0) return log_sum_exp(logs);
  }
  no_convergence("bessel_i");
}

double bessel_i(double nu, double x) {
  if (x == 0.0) {
    if (nu < 0.0) throw_domain("bessel_i requires nu >= 0");
    return nu == 0.0 ? 1.0 : 0.0;
  }
  return std::exp(log_bessel_i(nu, x));
}

double bessel_k(double nu, double x) { return std::exp(log_bessel_k(nu, x)); }

double log_bessel_k(double nu, double x) {
  if (!(x > 0.0)) throw_domain("bessel_k requires x > 0");
  if (nu < 0.0) throw_domain("bessel_k requires nu >= 0");
  // The integrand, scaled by e^{x}, is f(t) = exp(-x (cosh t - 1)) cosh(nu t).
  auto log_f = [&](double t) {
    const double c = nu * t + std::log1p(std::exp(-2.0 * nu * t)) - std::log(2.0);
    return -x * 2.0 * std::sinh(0.5 * t) * std::sinh(0.5 * t) + c;
  };
  // Locate the peak (x sinh t = nu) and the point where the integrand is negligible.
  const double t_peak = nu > 0.0 ? std::asinh(nu / x) : 0.0;
  const double l_peak = log_f(t_peak);
  double t_end = std::max(t_peak, 1.0);
  while (log_f(t_end) > l_peak - 45.0) t_end *= 1.25;
  double h = t_end / 8.0;
  auto f = [&](double t) { return std::exp(log_f(t) - l_peak); };
  double sum = 0.5 * f(0.0);
  for (double t = h; t <= t_end + 0.5 * h; t += h) sum += f(t);
  double prev = sum * h;
  // Trapezoid error decays exponentially here, so a 1e-13 step-to-step change means the
  // newer value is already at rounding level.
  for (int level = 0; level < 16; ++level) {
    double add = 0.0;
    const double h2 = 0.5 * h;
    for (double t = h2; t <= t_end; t += h) add += f(t);
    sum += add;
    h = h2;
    const double cur = sum * h;
    if (level >= 2 && std::abs(cur - prev) <= 1e-13 * std::abs(cur)) {
      return l_peak - x + std::log(cur);
    }
    prev = cur;
  }
  throw Error(ErrorKind::convergence, "bessel_k: trapezoid refinement did not settle");
}

double jacobi_p(int n, double a, double b, double x) { return jacobi_p<double>(n, a, b, x); }

cplx hyp1f1(cplx a, cplx b, cplx z) {
  if (is_nonpositive_integer(b)) throw Error(ErrorKind::domain, "hyp1f1: b is a pole", "pole");
  if (std::abs(z) > 50.0) throw_domain("hyp1f1: |z| > 50 is outside the supported range");
  cplx term = 1.0;
  cplx sum = 1.0;
  const double zabs = std::abs(z);
  int quiet = 0;
  for (int k = 0; k < kMaxTerms; ++k) {
    const double kk = static_cast<double>(k);
    term *= (a + kk) / ((b + kk) * (kk + 1.0)) * z;
    sum += term;
    if (term == 0.0) return sum;
    if (kk > zabs && std::abs(term) <= kSeriesTol * std::abs(sum)) {
      if (++quiet >= 3) return sum;
    } else {
      quiet = 0;
    }
  }
  no_convergence("hyp1f1");
}

namespace {

using lcplx = std::complex<long double>;

// Levin u-transform of order k of the partial sums, in long double; the alternating
// binomial sums lose digits quickly as k grows.
lcplx levin_u(const std::vector<lcplx>& terms, const std::vector<lcplx>& sums, int k_order) {
  lcplx num = 0.0L;
  lcplx den = 0.0L;
  long double binom = 1.0L;
  for (int j = 0; j <= k_order; ++j) {
    if (j > 0) binom *= static_cast<long double>(k_order - j + 1) / j;
    const long double scale = std::pow((j + 1.0L) / (k_order + 1.0L), k_order - 1);
    const lcplx omega = (j + 1.0L) * terms[j];
    const long double sign = (j % 2 == 0) ? 1.0L : -1.0L;
    num += sign * binom * scale * sums[j] / omega;
    den += sign * binom * scale / omega;
  }
  return num / den;
}

}  // namespace

cplx hyp2f1(cplx a, cplx b, cplx c, cplx z) {
  const bool term_a = is_nonpositive_integer(a);
  const bool term_b = is_nonpositive_integer(b);
  if (term_a || term_b) {
    int m = std::numeric_limits<int>::max();
    if (term_a) m = std::min(m, static_cast<int>(-a.real()));
    if (term_b) m = std::min(m, static_cast<int>(-b.real()));
    cplx term = 1.0;
    cplx sum = 1.0;
    for (int k = 0; k < m; ++k) {
      const double kk = static_cast<double>(k);
      if (std::abs(c + kk) == 0.0) throw Error(ErrorKind::domain, "hyp2f1: c is a pole", "pole");
      term *= (a + kk) * (b + kk) / ((c + kk) * (kk + 1.0)) * z;
      sum += term;
    }
    return sum;
  }
  if (is_nonpositive_integer(c)) throw Error(ErrorKind::domain, "hyp2f1: c is a pole", "pole");
  if (std::abs(z) < 1.0) {
    cplx term = 1.0;
    cplx sum = 1.0;
    int quiet = 0;
    for (int k = 0; k < kMaxTerms; ++k) {
      const double kk = static_cast<double>(k);
      term *= (a + kk) * (b + kk) / ((c + kk) * (kk + 1.0)) * z;
      sum += term;
      if (std::abs(term) <= kSeriesTol * std::abs(sum) && kk > std::abs(a * b / c)) {
        if (++quiet >= 3) return sum;
      } else {
        quiet = 0;
      }
    }
    no_convergence("hyp2f1");
  }
  if (z == cplx(1.0, 0.0) && (c - a - b).real() > 0.0) {
    // Slowly (algebraically) convergent; accelerate the partial sums and keep the order
    // whose estimate moved least from the previous one.
    const lcplx la(a.real(), a.imag());
    const lcplx lb(b.real(), b.imag());
    const lcplx lc(c.real(), c.imag());
    std::vector<lcplx> terms{1.0L};
    std::vector<lcplx> sums{1.0L};
    for (int k = 0; k < 40; ++k) {
      const long double kk = k;
      terms.push_back(terms.back() * (la + kk) * (lb + kk) / ((lc + kk) * (kk + 1.0L)));
      sums.push_back(sums.back() + terms.back());
    }
    lcplx prev = levin_u(terms, sums, 4);
    lcplx best = prev;
    long double best_gap = std::numeric_limits<long double>::infinity();
    for (int order = 6; order <= 30; order += 2) {
      const lcplx cur = levin_u(terms, sums, order);
      const long double gap = std::abs(cur - prev) / std::abs(cur);
      if (gap < best_gap) {
        best_gap = gap;
        best = cur;
      }
      prev = cur;
    }
    if (best_gap < 1e-9L) return {static_cast<double>(best.real()), static_cast<double>(best.imag())};
    no_convergence("hyp2f1 at z = 1");
  }
  throw Error(ErrorKind::convergence, "hyp2f1: non-terminating series with |z| >= 1");
}

QuadratureRule gauss_legendre(int order) {
  if (order < 2 || order > 512) throw_domain("gauss_legendre order must lie in [2, 512]");
  QuadratureRule rule;
  rule.order = order;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  const int half = (order + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= order; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = order * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) <= 1e-16) break;
    }
    // Recompute the derivative at the converged node.
    double p0 = 1.0;
    double p1 = x;
    for (int k = 2; k <= order; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = order * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[order - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[order - 1 - i] = w;
  }
  if (order % 2 == 1) rule.nodes[order / 2] = 0.0;
  return rule;
}

double QuadratureRule::integrate(const std::function<double(double)>& f, double lo,
                                 double hi) const {
  const double mid = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  double sum = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i) sum += weights[i] * f(mid + half * nodes[i]);
  return sum * half;
}

cplx log1p_c(cplx w) {
  const cplx u = 1.0 + w;
  if (u == cplx(1.0, 0.0)) return w;
  return std::log(u) * w / (u - 1.0);
}

}  // namespace cstates
