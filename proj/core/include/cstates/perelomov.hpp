#pragma once

#include <complex>
#include <cstddef>
#include <memory>
#include <vector>

#include "cstates/fockspace.hpp"
#include "cstates/spectrum.hpp"

namespace cstates {

// pi(m, j): nested sum with pi(m, 0) = 1 for m >= 1, built by the recurrence
// pi(m, j) = pi(m-1, j) + E_m pi(m+1, j-1), pi(0, j>=1) = 0.
double pi_nested(const SpectrumModel& model, std::size_t m, std::size_t j);

enum class CnMethod { series, ode, closed_pt, closed_ho };

const char* to_string(CnMethod method);

struct DisplacementCoeffs {
  double r = 0.0;
  std::vector<double> values;  // c_0(r) .. c_{n_max}(r)
  CnMethod method = CnMethod::series;
};

inline constexpr std::size_t kDefaultJCap = 160;

// Power series c_n(r) = sum_j a_j w^j in w = r^2, a_j = (-1)^j pi(n+1,j)/(n+2j)!, held in
// extended precision. Inside the convergence disk the series is summed directly. Spectra
// with a finite radius (Poschl-Teller: w = -pi^2/4) are continued past it by re-expanding
// in u = (sqrt(1+w/w_s)-1)/(sqrt(1+w/w_s)+1), which maps the plane cut along
// (-inf, -w_s] onto the unit disk; w_s is the Domb-Sykes estimate of the singularity.
class CnExpansion {
 public:
  struct Value {
    double value = 0.0;
    double tail = 0.0;  // relative size of the last retained terms
    bool continued = false;
  };

  CnExpansion(const SpectrumModel& model, std::size_t n, std::size_t j_cap = kDefaultJCap);
  ~CnExpansion();
  CnExpansion(CnExpansion&&) noexcept;
  CnExpansion& operator=(CnExpansion&&) noexcept;

  std::size_t n() const;
  bool entire() const;                 // radius estimate grows without bound
  double singularity_estimate() const; // w_s; +inf for entire series

  // Throws TruncationError when the retained terms do not meet 1e-15 relative.
  Value evaluate(double r) const;

  // Cheaper evaluation for inner loops (ODE closure), no tail check: long double inside the
  // convergence disk, 50 digits on the continued branch where the sum cancels heavily.
  long double evaluate_fast(long double r) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

double cn_series(const SpectrumModel& model, std::size_t n, double r,
                 std::size_t j_cap = kDefaultJCap);

DisplacementCoeffs cn_series_all(const SpectrumModel& model, std::size_t n_max, double r,
                                 std::size_t j_cap = kDefaultJCap);

inline constexpr double kOdeStart = 1e-3;

// Classical RK4 on dc_n/dr = c_{n-1}/r - n c_n/r - E_{n+1} r c_{n+1}, n = 0..n_max, from the
// series at r0 = 1e-3. c_{n_max+1} is supplied by the series. The step is
// min(step, 0.005 r/(n_max+1)) so the stiff 1/r band near r0 is resolved.
DisplacementCoeffs cn_ode(const SpectrumModel& model, double r_target, std::size_t n_max,
                          double step = 1e-3);

// One integration reporting at each target (any order); results follow the input order.
std::vector<DisplacementCoeffs> cn_ode_path(const SpectrumModel& model,
                                            const std::vector<double>& r_targets,
                                            std::size_t n_max, double step = 1e-3);

// (1/n!) cosh(r)^{-(nu+1)} (tanh(r)/r)^n.
double cn_pt_closed(double nu, std::size_t n, double r);
// exp(-r^2/2)/n!.
double cn_ho_closed(std::size_t n, double r);

// Harmonic and Poschl-Teller family use closed forms (exactly normalized, not rescaled).
// Custom spectra go through cn_series; the result carries tail diagnostics and is not
// renormalized.
FockVector perelomov_state(const SpectrumModel& model, cplx z, double alpha, std::size_t n_max);

// zeta = z tanh|z| / |z|.
cplx disk_parameter(cplx z);

struct DiskPoint {
  cplx zeta;
  explicit DiskPoint(cplx value);
};

// <zeta1, alpha1 | zeta2, alpha2>.
cplx disk_kernel(double nu, DiskPoint zeta1, DiskPoint zeta2, double alpha1, double alpha2);

struct DiskIdentityCheck {
  double residual = 0.0;
  double moment = 0.0;
  double order_gap = 0.0;
};

// Diagonal element of int |zeta><zeta| dmu with dmu = (nu/pi) d^2zeta/(1-|zeta|^2)^2.
DiskIdentityCheck disk_identity_check(double nu, std::size_t n);

// | int <zeta1|zeta><zeta|zeta2> dmu(zeta) - <zeta1|zeta2> | with the integration states at
// phase alpha; polar Gauss-Legendre x trapezoid rule.
double disk_reproducing_residual(double nu, DiskPoint zeta1, DiskPoint zeta2, double alpha1,
                                 double alpha2, double alpha);

}  // namespace cstates
