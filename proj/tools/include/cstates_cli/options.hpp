#pragma once

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cstates/spectrum.hpp"

namespace cstates::cli {

// Exit codes are part of the command-line contract.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitRejected = 3;
inline constexpr int kExitNumerical = 4;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// harmonic | pt:K,K' | well | custom:FILE
SpectrumModel parse_model(const std::string& text);

// "RE,IM" or a bare real "RE".
std::complex<double> parse_complex(const std::string& text);

enum class GridAxis { theta, modulus };

struct Grid {
  GridAxis axis = GridAxis::theta;
  std::vector<double> values;
};

// lambda-theta:T0:T1:STEPS, lambda-mod:M0:M1:STEPS, or an explicit list after the colon
// (lambda-mod:0.5,1,2). STEPS is the number of points, endpoints included.
Grid parse_grid(const std::string& text);

}  // namespace cstates::cli
