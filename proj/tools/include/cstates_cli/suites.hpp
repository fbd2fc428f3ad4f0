#pragma once

#include <string>
#include <vector>

#include "cstates/spectrum.hpp"
#include "cstates/tolerances.hpp"
#include "cstates_cli/report.hpp"

namespace cstates::cli {

struct SuiteOptions {
  // Models to exercise; empty means the default set {harmonic, pt:2,2, pt:3.5,1.2}.
  std::vector<SpectrumModel> models;
  ToleranceTable tol = ToleranceTable::defaults();
};

// ladder, gk, perelomov, gis, position, specfun.
const std::vector<std::string>& suite_names();

bool is_suite(const std::string& name);

// Runs one suite ("all" runs every suite in the order above). Every check becomes a case;
// exceptions inside a check are reported as FAIL with the message as reason.
std::vector<Case> run_suite(const std::string& name, const SuiteOptions& options);

std::vector<SpectrumModel> default_models();

}  // namespace cstates::cli
