#include "cstates_cli/options.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>

namespace cstates::cli {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string::size_type start = 0;
  for (;;) {
    const auto pos = text.find(sep, start);
    out.push_back(text.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

double parse_real(const std::string& text, const std::string& what) {
  double v = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || !std::isfinite(v)) {
    throw UsageError("cannot parse " + what + " '" + text + "'");
  }
  return v;
}

}  // namespace

SpectrumModel parse_model(const std::string& text) {
  if (text == "harmonic") return SpectrumModel::harmonic();
  if (text == "well") return SpectrumModel::square_well();
  if (text.rfind("pt:", 0) == 0) {
    const auto parts = split(text.substr(3), ',');
    if (parts.size() != 2) throw UsageError("--model pt expects pt:KAPPA,KAPPA'");
    return SpectrumModel::poschl_teller(parse_real(parts[0], "kappa"),
                                        parse_real(parts[1], "kappa'"));
  }
  if (text.rfind("custom:", 0) == 0) {
    const std::string path = text.substr(7);
    if (path.empty()) throw UsageError("--model custom expects custom:FILE");
    return SpectrumModel::load_custom(path);
  }
  throw UsageError("unknown model '" + text + "' (harmonic, pt:K,K', well, custom:FILE)");
}

std::complex<double> parse_complex(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() == 1) return {parse_real(parts[0], "complex value"), 0.0};
  if (parts.size() == 2) {
    return {parse_real(parts[0], "real part"), parse_real(parts[1], "imaginary part")};
  }
  throw UsageError("complex values are written RE,IM; got '" + text + "'");
}

Grid parse_grid(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw UsageError("grid must look like lambda-theta:T0:T1:STEPS");
  Grid g;
  const std::string axis = text.substr(0, colon);
  if (axis == "lambda-theta") {
    g.axis = GridAxis::theta;
  } else if (axis == "lambda-mod") {
    g.axis = GridAxis::modulus;
  } else {
    throw UsageError("unknown grid axis '" + axis + "' (lambda-theta, lambda-mod)");
  }
  const std::string rest = text.substr(colon + 1);
  const auto fields = split(rest, ':');
  if (fields.size() == 3) {
    const double lo = parse_real(fields[0], "grid start");
    const double hi = parse_real(fields[1], "grid end");
    const double steps = parse_real(fields[2], "grid steps");
    if (steps < 0.0 || steps != std::floor(steps)) throw UsageError("grid steps must be a count");
    const auto count = static_cast<std::size_t>(steps);
    if (count == 1) g.values.push_back(lo);
    for (std::size_t i = 0; count > 1 && i < count; ++i) {
      g.values.push_back(lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1));
    }
  } else if (fields.size() == 1) {
    if (!rest.empty()) {
      for (const auto& v : split(rest, ',')) g.values.push_back(parse_real(v, "grid value"));
    }
  } else {
    throw UsageError("grid must look like AXIS:START:END:STEPS or AXIS:V1,V2,...");
  }
  if (g.values.empty()) throw UsageError("grid is empty");
  return g;
}

}  // namespace cstates::cli
