#include "cstates_cli/commands.hpp"

#include <cmath>
#include <fstream>
#include <future>
#include <iostream>
#include <locale>
#include <numbers>
#include <sstream>
#include <variant>

#include "CLI11.hpp"
#include "cstates/errors.hpp"
#include "cstates/gazeau_klauder.hpp"
#include "cstates/intelligent.hpp"
#include "cstates/perelomov.hpp"
#include "cstates/poschl_teller_position.hpp"
#include "cstates_cli/options.hpp"
#include "cstates_cli/report.hpp"
#include "cstates_cli/suites.hpp"

namespace cstates::cli {

namespace {

using nlohmann::json;

int exit_code(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::domain:
    case ErrorKind::out_of_range:
    case ErrorKind::rejected:
    case ErrorKind::divergence:
      return kExitRejected;
    case ErrorKind::truncation:
    case ErrorKind::convergence:
    case ErrorKind::integration:
      return kExitNumerical;
  }
  return kExitNumerical;
}

json error_json(const Error& e) {
  json j;
  j["schema"] = kSchemaVersion;
  j["error"] = {{"kind", to_string(e.kind())}, {"message", e.what()}};
  if (!e.reason().empty()) j["error"]["reason"] = e.reason();
  if (const auto* t = dynamic_cast<const TruncationError*>(&e)) {
    j["error"]["suggested_n_max"] = t->suggested_n_max();
  }
  return j;
}

// Runs body with the library's error classes mapped onto exit codes.
template <class F>
int guarded(std::ostream& out, std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what();
    if (!e.reason().empty()) err << " (reason: " << e.reason() << ")";
    err << '\n';
    out << error_json(e).dump(2) << '\n';
    return exit_code(e);
  }
}

// Writes text to the --out file when given, otherwise to out.
void emit(const std::optional<std::string>& path, std::ostream& out, const std::string& text) {
  if (!path) {
    out << text;
    return;
  }
  std::ofstream f(*path);
  if (!f) throw UsageError("cannot open output file " + *path);
  f << text;
}

json complex_json(cplx z) { return json::array({z.real(), z.imag()}); }

std::ostringstream csv_stream() {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os.precision(17);
  return os;
}

}  // namespace

int cmd_state(const StateOptions& o, std::ostream& out, std::ostream& err) {
  return guarded(out, err, [&] {
    if (o.family != "gk" && o.family != "perelomov" && o.family != "gis") {
      throw UsageError("--family must be gk, perelomov or gis");
    }
    if (o.family == "gis" && !o.lambda) throw UsageError("--family gis requires --lambda");
    if (o.family != "gis" && o.lambda) throw UsageError("--lambda applies to --family gis only");
    if (o.format != "json" && o.format != "csv") throw UsageError("--format must be json or csv");
    const SpectrumModel model = parse_model(o.model);
    const cplx z = parse_complex(o.z);

    FockVector v;
    json extra = json::object();
    if (o.family == "gk") {
      v = gk_state(model, z, o.alpha, o.n_max).vector;
    } else if (o.family == "perelomov") {
      v = perelomov_state(model, z, o.alpha, o.n_max);
    } else {
      const cplx lambda = parse_complex(*o.lambda);
      const GISParameters params = gis_parameters(z, lambda, o.alpha, model.nu());
      v = gis_coefficients(model, params, o.n_max);
      extra["lambda"] = complex_json(lambda);
      extra["classification"] = to_string(params.klass);
    }

    if (o.format == "csv") {
      auto os = csv_stream();
      os << "n,re,im,abs2,cumulative\n";
      double cumulative = 0.0;
      for (std::size_t n = 0; n < v.coeffs.size(); ++n) {
        cumulative += std::norm(v.coeffs[n]);
        os << n << ',' << v.coeffs[n].real() << ',' << v.coeffs[n].imag() << ','
           << std::norm(v.coeffs[n]) << ',' << cumulative << '\n';
      }
      emit(o.out, out, os.str());
      return kExitOk;
    }
    json j;
    j["schema"] = kSchemaVersion;
    j["command"] = "state";
    j["model"] = model.describe();
    j["family"] = o.family;
    j["z"] = complex_json(z);
    j["alpha"] = o.alpha;
    j["n_max"] = o.n_max;
    j["tail_bound"] = v.tail_bound;
    j.update(extra);
    json rows = json::array();
    double cumulative = 0.0;
    for (std::size_t n = 0; n < v.coeffs.size(); ++n) {
      cumulative += std::norm(v.coeffs[n]);
      rows.push_back({{"n", n},
                      {"re", v.coeffs[n].real()},
                      {"im", v.coeffs[n].imag()},
                      {"abs2", std::norm(v.coeffs[n])},
                      {"cumulative", cumulative}});
    }
    j["rows"] = std::move(rows);
    emit(o.out, out, j.dump(2) + "\n");
    return kExitOk;
  });
}

int cmd_verify(const VerifyOptions& o, std::ostream& out, std::ostream& err) {
  return guarded(out, err, [&] {
    if (!is_suite(o.suite)) throw UsageError("unknown suite '" + o.suite + "'");
    if (o.tol && !(*o.tol >= 0.0)) throw UsageError("--tol must be non-negative");
    SuiteOptions so;
    VerificationReport report;
    report.suite = o.suite;
    if (o.model) {
      so.models.push_back(parse_model(*o.model));
      report.model = so.models.back().describe();
    }
    so.tol = ToleranceTable::defaults().with_override(o.tol);
    report.tolerance_override = o.tol;
    report.cases = run_suite(o.suite, so);
    emit(o.out, out, report.to_json().dump(2) + "\n");
    const Summary s = report.summary();
    err << o.suite << ": " << s.pass << " passed, " << s.fail << " failed, " << s.skipped
        << " skipped\n";
    return s.fail > 0 ? kExitNumerical : kExitOk;
  });
}

int cmd_sweep(const SweepOptions& o, std::ostream& out, std::ostream& err) {
  return guarded(out, err, [&] {
    if (o.family != "gis") throw UsageError("sweep supports --family gis only");
    const Grid grid = parse_grid(o.grid);
    const SpectrumModel model = parse_model(o.model);
    const cplx z = parse_complex(o.z);
    std::vector<cplx> lambdas;
    for (double v : grid.values) {
      const cplx lambda = grid.axis == GridAxis::theta ? std::polar(o.modulus, v)
                                                       : std::polar(v, o.theta);
      validate_lambda(lambda);  // reject the whole grid up front
      lambdas.push_back(lambda);
    }
    const std::size_t cap = model.max_level() ? *model.max_level() - 1 : 640;
    // Rows are independent; futures keep the output in grid order.
    std::vector<std::future<UncertaintyReport>> rows;
    for (const cplx lambda : lambdas) {
      rows.push_back(std::async(std::launch::async, [&, lambda] {
        const GISParameters params = gis_parameters(z, lambda, o.alpha);
        std::size_t n = std::min<std::size_t>(80, cap);
        for (;;) {
          try {
            // Variances need a much smaller tail than the coefficients themselves.
            const FockVector d = gis_coefficients(model, params, n, 1e-16);
            return uncertainty(build_ladder(model.with_alpha(o.alpha), n), d);
          } catch (const TruncationError& e) {
            if (n >= cap) throw;
            n = std::min(cap, e.suggested_n_max());
          }
        }
      }));
    }
    auto os = csv_stream();
    os << (grid.axis == GridAxis::theta ? "theta" : "modulus")
       << ",var_x,var_p,mean_g,mean_f,equality_gap\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const UncertaintyReport r = rows[i].get();
      os << grid.values[i] << ',' << r.var_x << ',' << r.var_p << ',' << r.mean_g << ','
         << r.mean_f << ',' << r.equality_gap << '\n';
    }
    emit(o.out, out, os.str());
    return kExitOk;
  });
}

int cmd_wavefunction(const WavefunctionOptions& o, std::ostream& out, std::ostream& err) {
  return guarded(out, err, [&] {
    const SpectrumModel model = parse_model(o.model);
    const auto* pt = std::get_if<PoschlTeller>(&model.kind());
    if (!pt) throw UsageError("wavefunction needs --model pt:K,K'");
    const PTParameters p(pt->kappa, pt->kappa_prime, o.a);
    std::ostringstream os;
    sample_eigenfunction(p, o.n, o.points, o.partner).write_csv(os);
    emit(o.out, out, os.str());
    return kExitOk;
  });
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Coherent and intelligent states for exactly solvable spectra"};
  app.require_subcommand(1);

  StateOptions st;
  auto* state = app.add_subcommand("state", "Print the coefficient table of a state");
  state->add_option("--model", st.model, "harmonic | pt:K,K' | well | custom:FILE");
  state->add_option("--family", st.family, "gk | perelomov | gis")
      ->check(CLI::IsMember({"gk", "perelomov", "gis"}));
  state->add_option("--z", st.z, "complex label RE,IM");
  state->add_option("--lambda", st.lambda, "squeezing parameter RE,IM (gis only)");
  state->add_option("--alpha", st.alpha, "phase parameter");
  state->add_option("--nmax", st.n_max, "largest level kept")->check(CLI::Range(2, 100000));
  state->add_option("--out", st.out, "write to FILE instead of stdout");
  state->add_option("--format", st.format, "json | csv")->check(CLI::IsMember({"json", "csv"}));

  VerifyOptions ve;
  auto* verify = app.add_subcommand("verify", "Run verification suites and print a JSON report");
  std::vector<std::string> choices = suite_names();
  choices.push_back("all");
  verify->add_option("--suite", ve.suite, "ladder | gk | perelomov | gis | position | specfun | all")
      ->check(CLI::IsMember(choices));
  verify->add_option("--model", ve.model, "restrict model-dependent suites to one model");
  verify->add_option("--tol", ve.tol, "replace every tolerance with this value");
  verify->add_option("--out", ve.out, "write the report to FILE");

  SweepOptions sw;
  auto* sweep = app.add_subcommand("sweep", "Uncertainty moments over a lambda grid (CSV)");
  sweep->add_option("--family", sw.family, "gis")->check(CLI::IsMember({"gis"}));
  sweep->add_option("--grid", sw.grid, "lambda-theta:T0:T1:STEPS or lambda-mod:M0:M1:STEPS")
      ->required();
  sweep->add_option("--model", sw.model, "spectrum model");
  sweep->add_option("--z", sw.z, "complex eigenvalue RE,IM");
  sweep->add_option("--theta", sw.theta, "arg(lambda) on a modulus grid");
  sweep->add_option("--modulus", sw.modulus, "|lambda| on a theta grid");
  sweep->add_option("--alpha", sw.alpha, "phase parameter");
  sweep->add_option("--out", sw.out, "write CSV to FILE");

  WavefunctionOptions wf;
  auto* wave = app.add_subcommand("wavefunction", "Sample a Poschl-Teller eigenfunction (CSV)");
  wave->add_option("--model", wf.model, "pt:K,K'");
  wave->add_option("--a", wf.a, "box scale; the well is (0, pi a)");
  wave->add_option("--n", wf.n, "level")->check(CLI::Range(0, 50));
  wave->add_option("--points", wf.points, "interior sample count")->check(CLI::Range(1, 1000000));
  wave->add_flag("--partner", wf.partner, "sample the partner Hamiltonian's eigenfunction");
  wave->add_option("--out", wf.out, "write CSV to FILE");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    err << app.help();
    return kExitUsage;
  }

  if (*state) return cmd_state(st, out, err);
  if (*verify) return cmd_verify(ve, out, err);
  if (*sweep) return cmd_sweep(sw, out, err);
  return cmd_wavefunction(wf, out, err);
}

}  // namespace cstates::cli
