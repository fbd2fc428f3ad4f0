#include "cstates/spectrum.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "cstates/errors.hpp"

namespace cstates {

SpectrumModel SpectrumModel::harmonic(double alpha) { return SpectrumModel(Harmonic{}, alpha); }

SpectrumModel SpectrumModel::poschl_teller(double kappa, double kappa_prime, double alpha) {
  if (!(kappa > 1.0) || !(kappa_prime > 1.0)) {
    throw_domain("Poschl-Teller strengths must satisfy kappa > 1 and kappa' > 1");
  }
  return SpectrumModel(PoschlTeller{kappa, kappa_prime}, alpha);
}

SpectrumModel SpectrumModel::square_well(double alpha) { return SpectrumModel(SquareWell{}, alpha); }

SpectrumModel SpectrumModel::custom(std::vector<double> energies, double alpha) {
  if (energies.size() < 2) throw_domain("custom spectrum needs at least two levels");
  if (energies[0] != 0.0) throw_domain("custom spectrum must start with E_0 = 0");
  for (std::size_t n = 1; n < energies.size(); ++n) {
    if (!std::isfinite(energies[n]) || !(energies[n] > energies[n - 1])) {
      throw_domain("custom spectrum must be finite and strictly increasing (level " +
                   std::to_string(n) + ")");
    }
  }
  return SpectrumModel(CustomTable{std::move(energies)}, alpha);
}

SpectrumModel SpectrumModel::load_custom(const std::filesystem::path& path, double alpha) {
  std::ifstream in(path);
  if (!in) throw_domain("cannot open spectrum file " + path.string());
  std::vector<double> values;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    fields.imbue(std::locale::classic());
    double e = 0.0;
    if (!(fields >> e)) {
      throw_domain("spectrum file " + path.string() + ": cannot parse line " +
                   std::to_string(line_no));
    }
    values.push_back(e);
  }
  return custom(std::move(values), alpha);
}

SpectrumModel SpectrumModel::with_alpha(double alpha) const { return SpectrumModel(kind_, alpha); }

bool SpectrumModel::is_pt_family() const noexcept {
  return std::holds_alternative<PoschlTeller>(kind_) || std::holds_alternative<SquareWell>(kind_);
}

std::optional<double> SpectrumModel::nu() const noexcept {
  if (const auto* pt = std::get_if<PoschlTeller>(&kind_)) return pt->kappa + pt->kappa_prime;
  if (std::holds_alternative<SquareWell>(kind_)) return 2.0;
  return std::nullopt;
}

std::optional<std::size_t> SpectrumModel::max_level() const noexcept {
  if (const auto* c = std::get_if<CustomTable>(&kind_)) return c->energies.size() - 1;
  return std::nullopt;
}

std::string SpectrumModel::describe() const {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  if (std::holds_alternative<Harmonic>(kind_)) {
    os << "harmonic";
  } else if (const auto* pt = std::get_if<PoschlTeller>(&kind_)) {
    os << "pt:" << pt->kappa << "," << pt->kappa_prime;
  } else if (std::holds_alternative<SquareWell>(kind_)) {
    os << "well";
  } else {
    os << "custom[" << std::get<CustomTable>(kind_).energies.size() << " levels]";
  }
  return os.str();
}

double energy(const SpectrumModel& model, std::size_t n) {
  const double x = static_cast<double>(n);
  return std::visit(
      [&](const auto& k) -> double {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, Harmonic>) {
          return x;
        } else if constexpr (std::is_same_v<K, PoschlTeller>) {
          return x * (x + k.kappa + k.kappa_prime);
        } else if constexpr (std::is_same_v<K, SquareWell>) {
          return x * (x + 2.0);
        } else {
          if (n >= k.energies.size()) {
            throw Error(ErrorKind::out_of_range,
                        "level " + std::to_string(n) + " past the end of the custom table (" +
                            std::to_string(k.energies.size()) + " levels)");
          }
          return k.energies[n];
        }
      },
      model.kind());
}

std::vector<double> energies(const SpectrumModel& model, std::size_t n_max) {
  std::vector<double> out(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) out[n] = energy(model, n);
  return out;
}

std::vector<double> log_energy_products(const SpectrumModel& model, std::size_t n_max) {
  std::vector<double> out(n_max + 1, 0.0);
  for (std::size_t n = 1; n <= n_max; ++n) out[n] = out[n - 1] + std::log(energy(model, n));
  return out;
}

EnergyProduct energy_product(const SpectrumModel& model, std::size_t n) {
  EnergyProduct p;
  p.n = n;
  p.log_value = log_energy_products(model, n).back();
  p.value = std::exp(p.log_value);
  p.overflow = std::isinf(p.value);
  return p;
}

double level_gap(const SpectrumModel& model, std::size_t n) {
  return energy(model, n + 1) - energy(model, n);
}

RadiusEstimate radius_estimate(const SpectrumModel& model, std::size_t n_max) {
  if (n_max < 10) throw_domain("radius_estimate needs n_max >= 10");
  const auto logs = log_energy_products(model, n_max);
  const double g_end = logs[n_max] / static_cast<double>(n_max);
  const double g_mid = logs[n_max / 2] / static_cast<double>(n_max / 2);
  RadiusEstimate r;
  // A bounded limit makes ln E(n)/n flatten like ln(n)/n; (n!)^{1/n} gains ln 2 per doubling.
  r.infinite = (g_end - g_mid) > 0.1;
  r.value = r.infinite ? std::numeric_limits<double>::infinity() : std::exp(g_end);
  return r;
}

}  // namespace cstates
