#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace cstates {

struct Harmonic {};

struct PoschlTeller {
  double kappa;
  double kappa_prime;
};

// Infinite square well, E_n = n(n+2).
struct SquareWell {};

// Finite energy table; energies[0] == 0 and strictly increasing.
struct CustomTable {
  std::vector<double> energies;
};

// A non-degenerate discrete spectrum with E_0 = 0 plus the phase parameter alpha.
// Immutable after construction.
class SpectrumModel {
 public:
  using Kind = std::variant<Harmonic, PoschlTeller, SquareWell, CustomTable>;

  static SpectrumModel harmonic(double alpha = 0.0);
  static SpectrumModel poschl_teller(double kappa, double kappa_prime, double alpha = 0.0);
  static SpectrumModel square_well(double alpha = 0.0);
  static SpectrumModel custom(std::vector<double> energies, double alpha = 0.0);
  // One energy per line; blank lines and lines starting with '#' are ignored.
  static SpectrumModel load_custom(const std::filesystem::path& path, double alpha = 0.0);

  const Kind& kind() const noexcept { return kind_; }
  double alpha() const noexcept { return alpha_; }
  SpectrumModel with_alpha(double alpha) const;

  bool is_harmonic() const noexcept { return std::holds_alternative<Harmonic>(kind_); }
  bool is_custom() const noexcept { return std::holds_alternative<CustomTable>(kind_); }
  // True for Poschl-Teller and the square well, which share E_n = n(n+nu).
  bool is_pt_family() const noexcept;

  // kappa + kappa' for Poschl-Teller, 2 for the square well.
  std::optional<double> nu() const noexcept;

  // Largest n with a defined energy; nullopt for analytic spectra.
  std::optional<std::size_t> max_level() const noexcept;

  std::string describe() const;

 private:
  SpectrumModel(Kind kind, double alpha) : kind_(std::move(kind)), alpha_(alpha) {}

  Kind kind_;
  double alpha_ = 0.0;
};

double energy(const SpectrumModel& model, std::size_t n);

// E_0 .. E_{n_max}.
std::vector<double> energies(const SpectrumModel& model, std::size_t n_max);

struct EnergyProduct {
  std::size_t n = 0;
  double log_value = 0.0;  // ln E(n)
  double value = 1.0;      // +inf when exp(log_value) overflows
  bool overflow = false;
};

EnergyProduct energy_product(const SpectrumModel& model, std::size_t n);

// ln E(0) .. ln E(n_max), accumulated once.
std::vector<double> log_energy_products(const SpectrumModel& model, std::size_t n_max);

// Eigenvalue of G(N) on level n: E_{n+1} - E_n.
double level_gap(const SpectrumModel& model, std::size_t n);

struct RadiusEstimate {
  double value = 0.0;     // E(n_max)^{1/n_max}
  bool infinite = false;  // sequence still growing at n_max
};

RadiusEstimate radius_estimate(const SpectrumModel& model, std::size_t n_max);

}  // namespace cstates
