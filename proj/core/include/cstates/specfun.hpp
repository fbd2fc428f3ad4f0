#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace cstates {

using cplx = std::complex<double>;

// Series kernels stop when the relative tail drops below this and give up after kMaxTerms.
inline constexpr double kSeriesTol = 1e-16;
inline constexpr int kMaxTerms = 10000;

double log_gamma(double x);

// I_nu(x) by the ascending series summed in the log domain.
double bessel_i(double nu, double x);
// ln I_nu(x); finite for x > 0 even where I_nu overflows.
double log_bessel_i(double nu, double x);

// K_nu(x) from K_nu(x) = int_0^inf exp(-x cosh t) cosh(nu t) dt, trapezoid rule refined
// until successive halvings agree. Integer nu needs no special casing on this route.
double bessel_k(double nu, double x);
// ln K_nu(x); finite where K_nu underflows.
double log_bessel_k(double nu, double x);

// P_n^{(a,b)}(x) by the forward three-term recurrence. T is double or std::complex<double>;
// parameters at or below -1 are accepted as formal polynomial coefficients.
template <class T>
T jacobi_p(int n, T a, T b, T x) {
  if (n < 0) return T(0);
  T p0 = T(1);
  if (n == 0) return p0;
  T p1 = (a + T(1)) + (a + b + T(2)) * (x - T(1)) / T(2);
  for (int k = 2; k <= n; ++k) {
    const T kk = T(static_cast<double>(k));
    const T s = T(2) * kk + a + b;
    const T c1 = T(2) * kk * (kk + a + b) * (s - T(2));
    const T c2 = (s - T(1)) * (s * (s - T(2)) * x + a * a - b * b);
    const T c3 = T(2) * (kk + a - T(1)) * (kk + b - T(1)) * s;
    const T p2 = (c2 * p1 - c3 * p0) / c1;
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

double jacobi_p(int n, double a, double b, double x);

cplx hyp1f1(cplx a, cplx b, cplx z);

// Converges for |z| < 1, terminating parameters, or z == 1 with Re(c-a-b) > 0
// (the last case through a Levin u-transform of the partial sums).
cplx hyp2f1(cplx a, cplx b, cplx c, cplx z);

struct QuadratureRule {
  std::vector<double> nodes;    // ascending, in (-1, 1)
  std::vector<double> weights;  // positive
  int order = 0;

  // Maps the rule to [lo, hi].
  double integrate(const std::function<double(double)>& f, double lo, double hi) const;
};

QuadratureRule gauss_legendre(int order);

// ln(1+w) without cancellation for small |w|.
cplx log1p_c(cplx w);

}  // namespace cstates
