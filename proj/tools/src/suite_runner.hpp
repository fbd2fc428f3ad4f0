#pragma once

#include <algorithm>
#include <chrono>
#include <complex>
#include <cstdio>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "cstates/errors.hpp"
#include "cstates/spectrum.hpp"
#include "cstates/tolerances.hpp"
#include "cstates_cli/report.hpp"

namespace cstates::cli::detail {

class Runner {
 public:
  Runner(std::string suite, std::vector<Case>& out) : suite_(std::move(suite)), out_(out) {}

  void check(const std::string& name, double tolerance, const std::function<double()>& residual) {
    Case c;
    c.suite = suite_;
    c.name = name;
    c.tolerance = tolerance;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.residual = residual();
      c.status = judge(c.residual, tolerance);
    } catch (const std::exception& e) {
      c.residual = std::numeric_limits<double>::quiet_NaN();
      c.status = Status::fail;
      c.reason = e.what();
    }
    const auto t1 = std::chrono::steady_clock::now();
    c.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    out_.push_back(std::move(c));
  }

  void skip(const std::string& name, double tolerance, const std::string& reason) {
    Case c;
    c.suite = suite_;
    c.name = name;
    c.status = Status::skipped;
    c.residual = std::numeric_limits<double>::quiet_NaN();
    c.tolerance = tolerance;
    c.reason = reason;
    out_.push_back(std::move(c));
  }

 private:
  std::string suite_;
  std::vector<Case>& out_;
};

inline std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

inline std::string fmt(std::complex<double> z) {
  if (z.imag() == 0.0) return fmt(z.real());
  return fmt(z.real()) + (z.imag() < 0.0 ? "" : "+") + fmt(z.imag()) + "i";
}

// Retries f(n_max) with the suggested larger window while the tail is too large.
template <class F>
auto with_growing_window(std::size_t start, std::size_t cap, F&& f) {
  std::size_t n = std::min(start, cap);
  for (;;) {
    try {
      return f(n);
    } catch (const TruncationError& e) {
      if (n >= cap) throw;
      n = std::min(cap, std::max(e.suggested_n_max(), n + 1));
    }
  }
}

// Largest window usable for ladder work (a+ reaches one level past n_max).
inline std::size_t window_cap(const SpectrumModel& m, std::size_t wanted) {
  if (auto top = m.max_level()) return std::min(wanted, *top > 0 ? *top - 1 : 0);
  return wanted;
}

void ladder_suite(const SpectrumModel& m, const ToleranceTable& tol, Runner& run);
void gk_suite(const SpectrumModel& m, const ToleranceTable& tol, Runner& run);
void perelomov_suite(const SpectrumModel& m, const ToleranceTable& tol, Runner& run);
void gis_suite(const SpectrumModel& m, const ToleranceTable& tol, Runner& run);
void position_suite(const SpectrumModel& m, const ToleranceTable& tol, Runner& run);
void specfun_suite(const ToleranceTable& tol, Runner& run);

}  // namespace cstates::cli::detail
