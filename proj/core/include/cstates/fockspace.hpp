#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstddef>
#include <vector>

#include "cstates/spectrum.hpp"

namespace cstates {

using cplx = std::complex<double>;
using CVector = std::vector<cplx>;

// Coefficients in the truncated energy basis, index n = 0..n_max.
struct FockVector {
  CVector coeffs;
  double tail_bound = 0.0;  // estimated l2 mass beyond n_max (relative to the stored mass)

  std::size_t n_max() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  double norm() const;
};

// Mass of the last two levels times the geometric tail implied by the largest of the last
// five two-step ratio samples, relative to the stored mass. Pairing levels keeps parity-
// selective states (only even n occupied) measurable. Infinite when not decaying.
double estimate_tail(const CVector& coeffs);

// Builds a FockVector, optionally normalized to unit l2 norm, with tail_bound filled in.
FockVector make_fock_vector(CVector coeffs, bool normalize = true);

cplx inner(const CVector& u, const CVector& v);  // <u|v>, shorter length wins
double l2_norm(const CVector& v);

// Banded ladder representation. upper[k] = <k|a-|k+1>, k = 0..n_max; entry n_max couples
// to the first level outside the window and is used only by extended applications.
struct LadderRep {
  std::size_t n_max = 0;
  double alpha = 0.0;
  CVector lower_band;        // <k|a-|k+1>
  CVector raise_band;        // <k+1|a+|k> = conj(lower_band[k])
  std::vector<double> h_diag;  // E_n, n = 0..n_max
  std::vector<double> g_diag;  // E_{n+1} - E_n, n = 0..n_max

  std::size_t dim() const { return n_max + 1; }

  // a- v restricted to the window.
  CVector lower(const CVector& v) const;
  // a+ v; with extend the result has one more component (level n_max + 1).
  CVector raise(const CVector& v, bool extend = false) const;

  Eigen::MatrixXcd a_minus_matrix() const;
  Eigen::MatrixXcd a_plus_matrix() const;
};

LadderRep build_ladder(const SpectrumModel& model, std::size_t n_max);

struct Quadratures {
  Eigen::MatrixXcd x;
  Eigen::MatrixXcd p;
  Eigen::MatrixXcd h;
  Eigen::MatrixXcd g;
};

// X = (a+ + a-)/sqrt2, P = i(a+ - a-)/sqrt2, H = a+a-, G = diag(E_{n+1}-E_n).
Quadratures quadratures(const LadderRep& rep);

// F = {X - <X>, P - <P>} with the means taken in `state`.
Eigen::MatrixXcd f_operator(const LadderRep& rep, const FockVector& state);

struct UncertaintyReport {
  double mean_x = 0.0;
  double mean_p = 0.0;
  double var_x = 0.0;
  double var_p = 0.0;
  double mean_g = 0.0;
  double mean_f = 0.0;
  double rs_bound = 0.0;    // (<G>^2 + <F>^2)/4
  double rs_product = 0.0;  // var_x var_p
  double delta = 0.0;       // sqrt(<G>^2 + <F>^2)/2
  double equality_gap = 0.0;
};

inline constexpr double kUncertaintyTailTol = 1e-10;

// Second moments are taken with the component beyond the window included, so the
// truncation edge contributes only through the state's own tail.
UncertaintyReport uncertainty(const LadderRep& rep, const FockVector& state,
                              double tail_tol = kUncertaintyTailTol);

// Solves (1+lambda) a- psi + (1-lambda) a+ psi = 2 z psi from c_0 = 1, c_{-1} = 0 using only
// the ladder matrix elements, then normalizes.
FockVector gis_recurrence_oracle(const LadderRep& rep, cplx z, cplx lambda,
                                 double tail_tol = kUncertaintyTailTol);

// Operator residuals skip the truncation edge: components 0..n_max-2 only.

// || (1+lambda) a- v + (1-lambda) a+ v - 2 z v ||.
double gis_equation_residual(const LadderRep& rep, const FockVector& v, cplx z, cplx lambda);

// || a- v - z v ||.
double eigen_residual(const LadderRep& rep, const FockVector& v, cplx z);

}  // namespace cstates
