#include "cstates_cli/report.hpp"

#include <cmath>

namespace cstates::cli {

const char* to_string(Status s) {
  switch (s) {
    case Status::pass: return "PASS";
    case Status::fail: return "FAIL";
    case Status::skipped: return "SKIPPED";
  }
  return "FAIL";
}

Status judge(double residual, double tolerance) {
  return residual <= tolerance ? Status::pass : Status::fail;
}

Summary VerificationReport::summary() const {
  Summary s;
  for (const auto& c : cases) {
    switch (c.status) {
      case Status::pass: ++s.pass; break;
      case Status::fail: ++s.fail; break;
      case Status::skipped: ++s.skipped; break;
    }
  }
  return s;
}

nlohmann::json VerificationReport::to_json() const {
  using nlohmann::json;
  json j;
  j["schema"] = kSchemaVersion;
  j["suite"] = suite;
  j["model"] = model.empty() ? json(nullptr) : json(model);
  j["tolerance_override"] = tolerance_override ? json(*tolerance_override) : json(nullptr);
  json rows = json::array();
  for (const auto& c : cases) {
    json row;
    row["suite"] = c.suite;
    row["name"] = c.name;
    row["status"] = to_string(c.status);
    // JSON has no NaN or infinity; a residual that could not be computed is null.
    row["residual"] = std::isfinite(c.residual) ? json(c.residual) : json(nullptr);
    row["tolerance"] = c.tolerance;
    row["runtime_ms"] = c.runtime_ms;
    if (!c.reason.empty()) row["reason"] = c.reason;
    rows.push_back(std::move(row));
  }
  j["cases"] = std::move(rows);
  const Summary s = summary();
  j["summary"] = {{"pass", s.pass}, {"fail", s.fail}, {"skipped", s.skipped},
                  {"total", cases.size()}};
  return j;
}

}  // namespace cstates::cli
