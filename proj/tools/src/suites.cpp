#include "cstates_cli/suites.hpp"

#include <algorithm>
#include <future>

#include "suite_runner.hpp"

namespace cstates::cli {

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"ladder", "gk",       "perelomov",
                                              "gis",    "position", "specfun"};
  return names;
}

bool is_suite(const std::string& name) {
  const auto& n = suite_names();
  return name == "all" || std::find(n.begin(), n.end(), name) != n.end();
}

std::vector<SpectrumModel> default_models() {
  return {SpectrumModel::harmonic(), SpectrumModel::poschl_teller(2.0, 2.0),
          SpectrumModel::poschl_teller(3.5, 1.2)};
}

namespace {

using ModelSuite = void (*)(const SpectrumModel&, const ToleranceTable&, detail::Runner&);

ModelSuite lookup(const std::string& name) {
  if (name == "ladder") return detail::ladder_suite;
  if (name == "gk") return detail::gk_suite;
  if (name == "perelomov") return detail::perelomov_suite;
  if (name == "gis") return detail::gis_suite;
  if (name == "position") return detail::position_suite;
  return nullptr;
}

std::vector<Case> run_one(const std::string& name, const SuiteOptions& options) {
  std::vector<Case> out;
  if (name == "specfun") {
    detail::Runner run(name, out);
    detail::specfun_suite(options.tol, run);
    return out;
  }
  const ModelSuite suite = lookup(name);
  const auto models = options.models.empty() ? default_models() : options.models;
  // Models are independent; each writes its own case list, concatenated in model order.
  std::vector<std::future<std::vector<Case>>> parts;
  for (const auto& m : models) {
    parts.push_back(std::async(std::launch::async, [&, m] {
      std::vector<Case> local;
      detail::Runner run(name, local);
      suite(m, options.tol, run);
      return local;
    }));
  }
  for (auto& p : parts) {
    auto local = p.get();
    out.insert(out.end(), local.begin(), local.end());
  }
  return out;
}

}  // namespace

std::vector<Case> run_suite(const std::string& name, const SuiteOptions& options) {
  if (!is_suite(name)) throw std::invalid_argument("unknown suite " + name);
  if (name != "all") return run_one(name, options);
  std::vector<Case> out;
  for (const auto& s : suite_names()) {
    auto part = run_one(s, options);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace cstates::cli
