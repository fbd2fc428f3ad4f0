#include <algorithm>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <limits>

#include "cstates/errors.hpp"
#include "cstates/perelomov.hpp"

namespace cstates {

namespace {

// Coefficient cancellation in the conformal re-expansion reaches ~1e130 at j_cap = 160.
using mp_t = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<180>,
                                           boost::multiprecision::et_off>;
// Enough for the ~1e30 cancellation of the continued sum at n ~ 20, r = 3.
using mid_t = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<50>,
                                            boost::multiprecision::et_off>;

constexpr double kSeriesTailTol = 1e-15;

}  // namespace

struct CnExpansion::Impl {
  std::size_t n = 0;
  std::size_t j_cap = 0;
  std::vector<mp_t> a;  // coefficients of w^j
  std::vector<mp_t> b;  // coefficients of u^k (continuation), empty for entire series
  std::vector<long double> a_fast;
  std::vector<mid_t> b_mid;
  bool entire = false;
  double ws = std::numeric_limits<double>::infinity();

  bool direct(double w) const { return entire || w < 0.5 * ws; }
};

CnExpansion::CnExpansion(const SpectrumModel& model, std::size_t n, std::size_t j_cap)
    : impl_(std::make_unique<Impl>()) {
  Impl& s = *impl_;
  s.n = n;
  std::size_t J = j_cap;
  if (auto top = model.max_level()) {
    // u_{n,j} needs E up to n + J + 1.
    if (*top < n + 4) {
      throw Error(ErrorKind::out_of_range, "custom table too short for c_n series");
    }
    J = std::min(J, *top - n - 1);
  }
  if (J < 4) throw_domain("c_n series needs j_cap >= 4");
  s.j_cap = J;

  const std::size_t rows = n + J + 1;
  std::vector<mp_t> e(rows + 1);
  // Analytic spectra are rebuilt in extended precision: rounding noise in E_n would be
  // amplified by the conformal re-expansion below.
  const auto nu = model.nu();
  for (std::size_t m = 0; m < e.size(); ++m) {
    if (model.is_harmonic()) {
      e[m] = mp_t(m);
    } else if (nu) {
      e[m] = mp_t(m) * (mp_t(m) + mp_t(*nu));
    } else {
      e[m] = mp_t(energy(model, m));
    }
  }

  // u[m] holds u_{m,j} for the current j; u_{m,j} = pi(m+1,j)/(m+2j)!.
  std::vector<mp_t> u(rows + 1);
  u[0] = 1;
  for (std::size_t m = 1; m <= rows; ++m) u[m] = u[m - 1] / mp_t(m);
  s.a.resize(J + 1);
  s.a[0] = u[n];
  for (std::size_t j = 1; j <= J; ++j) {
    std::vector<mp_t> next(rows + 1 - j);
    for (std::size_t m = 0; m + j <= rows; ++m) {
      mp_t v = e[m + 1] * u[m + 1];
      if (m > 0) v += next[m - 1];
      next[m] = v / mp_t(m + 2 * j);
    }
    u.swap(next);
    s.a[j] = (j % 2 == 0) ? u[n] : mp_t(-u[n]);
  }

  // Domb-Sykes: ratios |a_{j-1}/a_j| ~ w_s (1 + c/j); linear extrapolation in 1/j.
  auto ratio = [&](std::size_t j) { return static_cast<double>(abs(s.a[j - 1] / s.a[j])); };
  const double r_end = ratio(J);
  const double r_mid = ratio(J / 2);
  s.entire = r_end > 1.5 * r_mid;
  if (!s.entire) {
    s.ws = static_cast<double>(J) * r_end - static_cast<double>(J - 1) * ratio(J - 1);
    if (!(s.ws > 0.0)) s.ws = r_end;
    // b_k = sum_{j=1}^k a_j (4 w_s)^j C(k+j-1, k-j), b_0 = a_0.
    std::vector<mp_t> q(J + 1);
    mp_t p = 1;
    const mp_t four_ws = mp_t(4) * mp_t(s.ws);
    for (std::size_t j = 0; j <= J; ++j) {
      q[j] = s.a[j] * p;
      p *= four_ws;
    }
    s.b.assign(J + 1, mp_t(0));
    s.b[0] = s.a[0];
    for (std::size_t k = 1; k <= J; ++k) {
      mp_t binom = mp_t(k);  // C(k, k-1)
      mp_t acc = 0;
      for (std::size_t j = 1; j <= k; ++j) {
        acc += q[j] * binom;
        if (j < k) binom = binom * mp_t((k + j) * (k - j)) / mp_t((2 * j + 1) * (2 * j));
      }
      s.b[k] = acc;
    }
  }
  s.a_fast.reserve(s.a.size());
  for (const auto& v : s.a) s.a_fast.push_back(static_cast<long double>(v));
  s.b_mid.reserve(s.b.size());
  for (const auto& v : s.b) s.b_mid.push_back(static_cast<mid_t>(v));
}

CnExpansion::~CnExpansion() = default;
CnExpansion::CnExpansion(CnExpansion&&) noexcept = default;
CnExpansion& CnExpansion::operator=(CnExpansion&&) noexcept = default;

std::size_t CnExpansion::n() const { return impl_->n; }
bool CnExpansion::entire() const { return impl_->entire; }
double CnExpansion::singularity_estimate() const { return impl_->ws; }

CnExpansion::Value CnExpansion::evaluate(double r) const {
  const Impl& s = *impl_;
  if (r < 0.0) throw_domain("c_n series requires r >= 0");
  const double w = r * r;
  Value out;
  const std::vector<mp_t>& coef = s.direct(w) ? s.a : s.b;
  mp_t x;
  if (s.direct(w)) {
    x = mp_t(w);
  } else {
    const mp_t root = sqrt(mp_t(1) + mp_t(w) / mp_t(s.ws));
    x = (root - 1) / (root + 1);
    out.continued = true;
  }
  mp_t sum = 0;
  mp_t xp = 1;
  mp_t last = 0;
  mp_t before_last = 0;
  for (std::size_t k = 0; k < coef.size(); ++k) {
    const mp_t t = coef[k] * xp;
    sum += t;
    before_last = last;
    last = t;
    xp *= x;
  }
  out.value = static_cast<double>(sum);
  const mp_t denom = abs(sum);
  out.tail = denom == 0 ? 0.0 : static_cast<double>((abs(last) + abs(before_last)) / denom);
  if (!(out.tail < kSeriesTailTol)) {
    throw TruncationError("c_" + std::to_string(s.n) + " series tail " + std::to_string(out.tail) +
                              " above 1e-15 at r = " + std::to_string(r),
                          2 * s.j_cap);
  }
  return out;
}

long double CnExpansion::evaluate_fast(long double r) const {
  const Impl& s = *impl_;
  const long double w = r * r;
  if (s.direct(static_cast<double>(w))) {
    long double acc = 0.0L;
    for (std::size_t k = s.a_fast.size(); k-- > 0;) acc = acc * w + s.a_fast[k];
    return acc;
  }
  const mid_t root = sqrt(mid_t(1) + mid_t(w) / mid_t(s.ws));
  const mid_t x = (root - 1) / (root + 1);
  mid_t acc = 0;
  for (std::size_t k = s.b_mid.size(); k-- > 0;) acc = acc * x + s.b_mid[k];
  return static_cast<long double>(acc);
}

double cn_series(const SpectrumModel& model, std::size_t n, double r, std::size_t j_cap) {
  return CnExpansion(model, n, j_cap).evaluate(r).value;
}

DisplacementCoeffs cn_series_all(const SpectrumModel& model, std::size_t n_max, double r,
                                 std::size_t j_cap) {
  DisplacementCoeffs d;
  d.r = r;
  d.method = CnMethod::series;
  d.values.resize(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) d.values[n] = cn_series(model, n, r, j_cap);
  return d;
}

}  // namespace cstates
