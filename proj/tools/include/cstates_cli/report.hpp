#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace cstates::cli {

inline constexpr int kSchemaVersion = 1;

enum class Status { pass, fail, skipped };

const char* to_string(Status s);

struct Case {
  std::string suite;
  std::string name;
  Status status = Status::skipped;
  double residual = 0.0;  // NaN when the computation itself failed
  double tolerance = 0.0;
  long long runtime_ms = 0;
  std::string reason;  // SKIPPED explanation or failure message
};

// PASS iff residual <= tolerance; a NaN residual never passes.
Status judge(double residual, double tolerance);

struct Summary {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t skipped = 0;
};

struct VerificationReport {
  std::string suite;
  std::string model;
  std::optional<double> tolerance_override;
  std::vector<Case> cases;

  Summary summary() const;
  bool any_fail() const { return summary().fail > 0; }
  nlohmann::json to_json() const;
};

}  // namespace cstates::cli
