#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace cstates {

enum class ErrorKind {
  domain,        // argument outside the mathematical domain
  out_of_range,  // index past the end of a finite table
  rejected,      // parameter refused by a validation rule (carries a reason code)
  truncation,    // tail of a truncated expansion above tolerance
  divergence,    // series diverges at the requested point
  convergence,   // iterative or series kernel did not converge
  integration,   // quadrature or ODE failure
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what, std::string reason = {})
      : std::runtime_error(what), kind_(kind), reason_(std::move(reason)) {}

  ErrorKind kind() const noexcept { return kind_; }
  // Stable machine-readable code, e.g. "lambda_minus_one". Empty when unset.
  const std::string& reason() const noexcept { return reason_; }

 private:
  ErrorKind kind_;
  std::string reason_;
};

class TruncationError : public Error {
 public:
  TruncationError(const std::string& what, std::size_t suggested_n_max)
      : Error(ErrorKind::truncation, what, "tail_too_large"),
        suggested_n_max_(suggested_n_max) {}

  std::size_t suggested_n_max() const noexcept { return suggested_n_max_; }

 private:
  std::size_t suggested_n_max_;
};

[[noreturn]] void throw_domain(const std::string& what);

}  // namespace cstates
