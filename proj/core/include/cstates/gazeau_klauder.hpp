#pragma once

#include <complex>
#include <cstddef>
#include <functional>

#include "cstates/fockspace.hpp"
#include "cstates/spectrum.hpp"

namespace cstates {

inline constexpr double kGkTailTol = 1e-12;

struct GKState {
  SpectrumModel model;
  cplx z;
  double alpha = 0.0;
  FockVector vector;
  // Harmonic: |a_0| = exp(-|z|^2/2). Poschl-Teller family: N(|z|) with
  // N^2 = |z|^nu / I_nu(2|z|), the constant paired with 1/sqrt(n! Gamma(n+nu+1)) monomials,
  // so |a_0| = N / sqrt(Gamma(nu+1)). Custom: |a_0| from the truncated sum.
  double norm_const = 1.0;
};

// Coefficients proportional to z^n exp(-i E_n alpha)/sqrt(E(n)), normalized in l2.
GKState gk_state(const SpectrumModel& model, cplx z, double alpha, std::size_t n_max);

// exp(-iHt)|z,alpha> = |z,alpha+t>, applied as componentwise phases.
GKState evolve(const GKState& state, double t);

// <H> - |z|^2.
double action_identity(const GKState& state, const LadderRep& rep);

// Sum_n r^{2n}/E(n) = Gamma(nu+1) I_nu(2r) / r^nu for the Poschl-Teller family.
double pt_norm_closed(double nu, double r);
double pt_norm_direct(const SpectrumModel& model, double r, std::size_t n_max);

struct RadialMeasure {
  std::function<double(double)> weight;  // density in r with d^2z = r dr dphi absorbed
  double r_cutoff = 0.0;  // moment integrands up to n = 20 are below 1e-16 of their peak beyond
  double nu = 0.0;
};

// (2/pi) I_nu(2r) K_nu(2r) r with nu = kappa + kappa'.
RadialMeasure pt_measure(double kappa, double kappa_prime);
RadialMeasure pt_measure_nu(double nu);

struct MomentCheck {
  double residual = 0.0;  // |moment - 1|
  double moment = 0.0;
  double order_gap = 0.0;  // |Q_200 - Q_400| / |Q_400|
};

// Diagonal element <psi_n| int |z><z| dmu |psi_n>; off-diagonal elements vanish by the angular
// integral and are not evaluated. Custom spectra have no closed measure (domain error).
MomentCheck identity_moment_check(const SpectrumModel& model, const RadialMeasure& measure,
                                  std::size_t n);

// f(z) = sum_n f_n z^n exp(i E_n alpha)/sqrt(E(n)).
cplx bargmann_eval(const SpectrumModel& model, const FockVector& coeffs, cplx z, double alpha);

}  // namespace cstates
