#include "cstates/fockspace.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "cstates/errors.hpp"
#include "cstates/intelligent.hpp"

namespace cstates {

namespace {

constexpr cplx kI(0.0, 1.0);

double mass(const CVector& v) {
  double s = 0.0;
  for (const auto& c : v) s += std::norm(c);
  return s;
}

void require_real(cplx value, const char* what) {
  if (std::abs(value.imag()) > 1e-10 * std::max(1.0, std::abs(value.real()))) {
    throw Error(ErrorKind::convergence,
                std::string("mean of self-adjoint ") + what + " has an imaginary part");
  }
}

}  // namespace

double FockVector::norm() const { return std::sqrt(mass(coeffs)); }

double l2_norm(const CVector& v) { return std::sqrt(mass(v)); }

cplx inner(const CVector& u, const CVector& v) {
  cplx s = 0.0;
  const std::size_t n = std::min(u.size(), v.size());
  for (std::size_t k = 0; k < n; ++k) s += std::conj(u[k]) * v[k];
  return s;
}

double estimate_tail(const CVector& coeffs) {
  const std::size_t len = coeffs.size();
  const double total = mass(coeffs);
  if (total == 0.0) return 0.0;
  if (len < 8) return std::numeric_limits<double>::infinity();
  auto pair = [&](std::size_t k) { return std::norm(coeffs[k]) + std::norm(coeffs[k - 1]); };
  const std::size_t last = len - 1;
  const double edge = pair(last);
  if (edge == 0.0) return 0.0;
  double rho = 0.0;
  for (std::size_t s = 0; s < 5; ++s) {
    const std::size_t k = last - s;
    if (k < 3) break;
    const double prev = pair(k - 2);
    if (prev == 0.0) return std::numeric_limits<double>::infinity();
    rho = std::max(rho, pair(k) / prev);
  }
  if (rho >= 1.0) return std::numeric_limits<double>::infinity();
  return edge * rho / (1.0 - rho) / total;
}

FockVector make_fock_vector(CVector coeffs, bool normalize) {
  FockVector v;
  v.tail_bound = estimate_tail(coeffs);
  if (normalize) {
    const double n = l2_norm(coeffs);
    if (n == 0.0 || !std::isfinite(n)) {
      throw Error(ErrorKind::convergence, "cannot normalize a zero or non-finite vector");
    }
    for (auto& c : coeffs) c /= n;
  }
  v.coeffs = std::move(coeffs);
  return v;
}

CVector LadderRep::lower(const CVector& v) const {
  const std::size_t n = std::min(v.size(), dim());
  CVector out(v.size(), 0.0);
  for (std::size_t k = 0; k + 1 < n; ++k) out[k] = lower_band[k] * v[k + 1];
  return out;
}

CVector LadderRep::raise(const CVector& v, bool extend) const {
  const std::size_t n = std::min(v.size(), dim());
  CVector out(v.size() + (extend ? 1 : 0), 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    if (k + 1 < out.size()) out[k + 1] = raise_band[k] * v[k];
  }
  return out;
}

Eigen::MatrixXcd LadderRep::a_minus_matrix() const {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim(), dim());
  for (std::size_t k = 0; k < n_max; ++k) m(k, k + 1) = lower_band[k];
  return m;
}

Eigen::MatrixXcd LadderRep::a_plus_matrix() const {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim(), dim());
  for (std::size_t k = 0; k < n_max; ++k) m(k + 1, k) = raise_band[k];
  return m;
}

LadderRep build_ladder(const SpectrumModel& model, std::size_t n_max) {
  if (n_max < 2) throw_domain("build_ladder requires n_max >= 2");
  const auto e = energies(model, n_max + 1);
  LadderRep rep;
  rep.n_max = n_max;
  rep.alpha = model.alpha();
  rep.lower_band.resize(n_max + 1);
  rep.raise_band.resize(n_max + 1);
  rep.h_diag.assign(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(n_max + 1));
  rep.g_diag.resize(n_max + 1);
  for (std::size_t k = 0; k <= n_max; ++k) {
    const double gap = e[k + 1] - e[k];
    rep.lower_band[k] = std::sqrt(e[k + 1]) * std::exp(kI * (gap * rep.alpha));
    rep.raise_band[k] = std::conj(rep.lower_band[k]);
    rep.g_diag[k] = gap;
  }
  return rep;
}

Quadratures quadratures(const LadderRep& rep) {
  const Eigen::MatrixXcd am = rep.a_minus_matrix();
  const Eigen::MatrixXcd ap = rep.a_plus_matrix();
  const double r = 1.0 / std::numbers::sqrt2;
  Quadratures q;
  q.x = r * (ap + am);
  q.p = (kI * r) * (ap - am);
  q.h = Eigen::MatrixXcd::Zero(rep.dim(), rep.dim());
  q.g = Eigen::MatrixXcd::Zero(rep.dim(), rep.dim());
  for (std::size_t k = 0; k < rep.dim(); ++k) {
    q.h(k, k) = rep.h_diag[k];
    q.g(k, k) = rep.g_diag[k];
  }
  return q;
}

namespace {

struct Centered {
  CVector xv;  // (X - <X>) v, one component beyond the window
  CVector pv;  // (P - <P>) v
  double mean_x = 0.0;
  double mean_p = 0.0;
};

Centered centered_quadratures(const LadderRep& rep, const CVector& v) {
  const double r = 1.0 / std::numbers::sqrt2;
  const CVector up = rep.raise(v, true);
  CVector down = rep.lower(v);
  down.push_back(0.0);
  Centered c;
  c.xv.resize(up.size());
  c.pv.resize(up.size());
  for (std::size_t k = 0; k < up.size(); ++k) {
    c.xv[k] = r * (up[k] + down[k]);
    c.pv[k] = kI * r * (up[k] - down[k]);
  }
  const cplx mx = inner(v, c.xv);
  const cplx mp = inner(v, c.pv);
  require_real(mx, "X");
  require_real(mp, "P");
  c.mean_x = mx.real();
  c.mean_p = mp.real();
  for (std::size_t k = 0; k < v.size(); ++k) {
    c.xv[k] -= c.mean_x * v[k];
    c.pv[k] -= c.mean_p * v[k];
  }
  return c;
}

}  // namespace

Eigen::MatrixXcd f_operator(const LadderRep& rep, const FockVector& state) {
  const Centered c = centered_quadratures(rep, state.coeffs);
  const Quadratures q = quadratures(rep);
  const auto id = Eigen::MatrixXcd::Identity(rep.dim(), rep.dim());
  const Eigen::MatrixXcd dx = q.x - c.mean_x * id;
  const Eigen::MatrixXcd dp = q.p - c.mean_p * id;
  return dx * dp + dp * dx;
}

UncertaintyReport uncertainty(const LadderRep& rep, const FockVector& state, double tail_tol) {
  if (state.coeffs.size() != rep.dim()) throw_domain("state and ladder dimensions differ");
  if (!(state.tail_bound < tail_tol)) {
    throw TruncationError("state tail " + std::to_string(state.tail_bound) +
                              " exceeds tolerance; increase n_max",
                          2 * rep.n_max);
  }
  const Centered c = centered_quadratures(rep, state.coeffs);
  UncertaintyReport r;
  r.mean_x = c.mean_x;
  r.mean_p = c.mean_p;
  r.var_x = mass(c.xv);
  r.var_p = mass(c.pv);
  const cplx cov = inner(c.xv, c.pv);
  r.mean_f = 2.0 * cov.real();
  double g = 0.0;
  for (std::size_t k = 0; k < rep.dim(); ++k) g += std::norm(state.coeffs[k]) * rep.g_diag[k];
  r.mean_g = g;
  r.rs_bound = 0.25 * (r.mean_g * r.mean_g + r.mean_f * r.mean_f);
  r.rs_product = r.var_x * r.var_p;
  r.delta = 0.5 * std::sqrt(r.mean_g * r.mean_g + r.mean_f * r.mean_f);
  r.equality_gap = r.rs_product - r.rs_bound;
  return r;
}

FockVector gis_recurrence_oracle(const LadderRep& rep, cplx z, cplx lambda, double tail_tol) {
  validate_lambda(lambda);
  const std::size_t n_max = rep.n_max;
  CVector c(n_max + 1, 0.0);
  c[0] = 1.0;
  const cplx up = 1.0 + lambda;
  const cplx dn = 1.0 - lambda;
  for (std::size_t n = 0; n < n_max; ++n) {
    cplx rhs = 2.0 * z * c[n];
    if (n >= 1) rhs -= dn * rep.raise_band[n - 1] * c[n - 1];
    c[n + 1] = rhs / (up * rep.lower_band[n]);
    if (std::abs(c[n + 1]) > 1e250) {
      throw TruncationError("GIS recurrence coefficients are not decaying", 2 * n_max);
    }
  }
  FockVector v = make_fock_vector(std::move(c));
  if (!(v.tail_bound < tail_tol)) {
    throw TruncationError("GIS recurrence tail above tolerance at n_max", 2 * n_max);
  }
  return v;
}

double gis_equation_residual(const LadderRep& rep, const FockVector& v, cplx z, cplx lambda) {
  const CVector lo = rep.lower(v.coeffs);
  const CVector hi = rep.raise(v.coeffs);
  double s = 0.0;
  for (std::size_t k = 0; k + 1 < rep.n_max; ++k) {
    s += std::norm((1.0 + lambda) * lo[k] + (1.0 - lambda) * hi[k] - 2.0 * z * v.coeffs[k]);
  }
  return std::sqrt(s);
}

double eigen_residual(const LadderRep& rep, const FockVector& v, cplx z) {
  const CVector lo = rep.lower(v.coeffs);
  double s = 0.0;
  for (std::size_t k = 0; k + 1 < rep.n_max; ++k) s += std::norm(lo[k] - z * v.coeffs[k]);
  return std::sqrt(s);
}

}  // namespace cstates
