#pragma once

#include <complex>
#include <cstddef>
#include <optional>

#include "cstates/fockspace.hpp"
#include "cstates/perelomov.hpp"
#include "cstates/spectrum.hpp"

namespace cstates {

enum class LambdaClass { coherent, squeezed };

const char* to_string(LambdaClass klass);

// Throws Error{rejected} with reason "lambda_minus_one" or "nonpositive_real_part".
// |lambda| = 1 (to 1e-14) is the coherent branch.
LambdaClass validate_lambda(cplx lambda);

struct GISParameters {
  cplx z;
  cplx lambda;
  double alpha = 0.0;
  LambdaClass klass = LambdaClass::coherent;
  // Exponents of the unit-disk product form, -(nu+1)/2 +- z/sqrt(lambda^2-1); set only when
  // nu was supplied and lambda != 1.
  std::optional<cplx> alpha_plus;
  std::optional<cplx> alpha_minus;
};

GISParameters gis_parameters(cplx z, cplx lambda, double alpha = 0.0,
                             std::optional<double> nu = std::nullopt);

// s = sqrt((lambda-1)/(lambda+1)), principal branch; |s| < 1 when Re(lambda) > 0.
cplx squeeze_root(cplx lambda);

// Delta(n, h): sum over j_1 < j_2 < ... < j_h with gaps of at least two of
// E_{j_1} E_{j_2} ... E_{j_h}, j_k <= n - 2(h-k) - 1. Delta(n, 0) = 1.
double delta_nh(const SpectrumModel& model, std::size_t n, std::size_t h);

// Closed-form coefficients d_n = e^{-i alpha E_n} / ((1+lambda)^n sqrt(E(n)))
//   * sum_h (-1)^h (1-lambda^2)^h (2z)^{n-2h} Delta(n, h), normalized.
FockVector gis_coefficients(const SpectrumModel& model, const GISParameters& params,
                            std::size_t n_max, double tail_tol = kUncertaintyTailTol);

struct RSVerification {
  UncertaintyReport report;
  double equality_gap_rel = 0.0;  // |rs_product - rs_bound| / rs_product
  double var_x_law = 0.0;         // |var_x - |lambda| delta| / var_x
  double var_p_law = 0.0;         // |var_p - delta/|lambda|| / var_p
  double ratio_law = 0.0;         // |var_x/var_p - |lambda|^2| / |lambda|^2
  double phase_law = 0.0;         // |Im(lambda) <G> - Re(lambda) <F>| / |lambda <G>|
  // Coherent branch lambda = e^{i theta}; zero otherwise.
  double coherent_balance = 0.0;  // |var_x - var_p| / var_x
  double coherent_var = 0.0;      // |var_x - <G>/(2|cos theta|)| / var_x
  double coherent_f = 0.0;        // |<F> - tan(theta) <G>| / |<G>|
};

RSVerification verify_rs(const LadderRep& rep, const FockVector& state,
                         const GISParameters& params);

// Bargmann function of the Poschl-Teller GIS,
//   exp(sign s z) 1F1((nu+1)/2 - sign z'/((1+lambda)s), nu+1; -2 sign s z),
// where (1+lambda)s = sqrt(lambda^2-1). At lambda = 1 this is 0F1(;nu+1; z z').
cplx gis_bargmann_function(double nu, cplx z_prime, cplx lambda, cplx z, int sign = +1);

// (1+s zeta)^{alpha_+} (1-s zeta)^{alpha_-}, unnormalized; exp(zeta zeta') at lambda = 1.
cplx gis_disk_function(double nu, cplx zeta_prime, cplx lambda, DiskPoint zeta);

// Coefficients sqrt(n! Gamma(nu+1)/Gamma(n+nu+1)) (2s)^n P_n^{(alpha_+ - n, alpha_- - n)}(0)
// e^{-i alpha E_n}, normalized. unnormalized keeps the raw values (n = 0 entry equals 1).
FockVector gis_disk_expansion(double nu, cplx zeta_prime, cplx lambda, std::size_t n_max,
                              double alpha = 0.0, bool normalize = true);

// Relative residual between zeta^n sqrt(Gamma(n+nu+1)/(n! Gamma(nu+1))) and
// zeta^{-(nu+1)}/sqrt(Gamma(nu+1)) int_0^inf z^nu z^n/sqrt(n! Gamma(n+nu+1)) e^{-z/zeta} dz.
double laplace_bridge(double nu, std::size_t n, double zeta);

}  // namespace cstates
