#pragma once

#include <iosfwd>
#include <optional>
#include <string>

namespace cstates::cli {

struct StateOptions {
  std::string model = "harmonic";
  std::string family = "gk";  // gk | perelomov | gis
  std::string z = "0,0";
  std::optional<std::string> lambda;
  double alpha = 0.0;
  std::size_t n_max = 40;
  std::optional<std::string> out;
  std::string format = "json";  // json | csv
};

struct VerifyOptions {
  std::string suite = "all";
  std::optional<std::string> model;
  std::optional<double> tol;
  std::optional<std::string> out;
};

struct SweepOptions {
  std::string family = "gis";
  std::string grid;
  std::string model = "pt:2,2";
  std::string z = "1,0";
  double theta = 0.0;    // fixed argument of lambda on a modulus grid
  double modulus = 1.0;  // fixed |lambda| on a theta grid
  double alpha = 0.0;
  std::optional<std::string> out;
};

struct WavefunctionOptions {
  std::string model = "pt:2,2";
  double a = 1.0;
  std::size_t n = 0;
  std::size_t points = 200;
  bool partner = false;
  std::optional<std::string> out;
};

// Each command writes its product to `out` (or the --out file) and diagnostics to `err`, and
// returns the process exit code.
int cmd_state(const StateOptions& o, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyOptions& o, std::ostream& out, std::ostream& err);
int cmd_sweep(const SweepOptions& o, std::ostream& out, std::ostream& err);
int cmd_wavefunction(const WavefunctionOptions& o, std::ostream& out, std::ostream& err);

// Parses argv and dispatches; the whole command-line program.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cstates::cli
