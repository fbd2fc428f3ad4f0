#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "cstates/errors.hpp"
#include "cstates/poschl_teller_position.hpp"

using namespace cstates;

namespace {

constexpr double kPi = std::numbers::pi;

double ground_log_derivative(const PTParameters& p, double x) {
  // psi_0 ~ cos^{k'}(x/2a) sin^{k}(x/2a).
  const double u = x / (2.0 * p.a);
  return (p.kappa / std::tan(u) - p.kappa_prime * std::tan(u)) / (2.0 * p.a);
}

}  // namespace

TEST(Potential, Examples) {
  const PTParameters p(2.0, 2.0);
  EXPECT_NEAR(potential(p, kPi / 2.0), -2.0, 1e-14);
  for (double x = 0.1; x < kPi / 2.0; x += 0.2) EXPECT_NEAR(potential(p, x), potential(p, kPi - x), 1e-10);
  // Leading singularity k(k-1)/(4a^2) (2a/x)^2 at the left wall.
  const double x = 1e-4;
  EXPECT_NEAR(potential(p, x) / (2.0 / (x * x)), 1.0, 1e-6);
  EXPECT_THROW(potential(p, 0.0), Error);
}

TEST(Superpotential, Examples) {
  const PTParameters p(2.7, 2.7, 1.3);
  EXPECT_NEAR(superpotential(p, kPi * 1.3 / 2.0), 0.0, 1e-14);
  const PTParameters q(3.5, 1.2);
  for (double x = 0.05; x < kPi; x += 0.1) {
    EXPECT_NEAR(superpotential(q, x), -ground_log_derivative(q, x), 1e-10 * std::max(1.0, std::abs(superpotential(q, x))));
    const double v = potential(q, x);
    const double w = superpotential(q, x);
    EXPECT_NEAR(w * w - superpotential_derivative(q, x), v, 1e-8 * std::max(1.0, std::abs(v)));
  }
}

TEST(Eigenfunction, Examples) {
  const PTParameters p(2.0, 2.0);
  EXPECT_LT(std::abs(eigenfunction(p, 3, 1e-6)), 1e-10);
  const Eigen::MatrixXd g = gram_matrix(p, 8);
  for (int i = 0; i <= 8; ++i) EXPECT_NEAR(g(i, i), 1.0, 1e-8);
  EXPECT_NEAR(g(0, 1), 0.0, 1e-9);
  EXPECT_GT(std::abs(partner_eigenfunction(p, 0, kPi / 2.0)), 0.0);
  EXPECT_TRUE(std::isfinite(partner_eigenfunction(p, 0, kPi / 2.0)));
}

TEST(Eigenfunction, BoundaryDecay) {
  const PTParameters p(2.5, 1.7);
  for (std::size_t n = 0; n <= 4; ++n) {
    const double r1 = std::abs(eigenfunction(p, n, 1e-3)) / std::pow(1e-3, p.kappa);
    const double r2 = std::abs(eigenfunction(p, n, 1e-4)) / std::pow(1e-4, p.kappa);
    EXPECT_NEAR(r1 / r2, 1.0, 1e-3) << n;
  }
}

TEST(Eigenfunction, PartnerOrthonormal) {
  const PTParameters p(2.0, 2.0);
  const InteriorRule rule = interior_rule(p, 200, 1e-6 * p.width());
  for (std::size_t i = 0; i <= 5; ++i) {
    for (std::size_t j = 0; j <= 5; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < rule.xs.size(); ++k) {
        s += rule.weights[k] * partner_eigenfunction(p, i, rule.xs[k]) * partner_eigenfunction(p, j, rule.xs[k]);
      }
      EXPECT_NEAR(s, i == j ? 1.0 : 0.0, 1e-8);
    }
  }
}

TEST(Eigenfunction, PartnerEnergies) {
  // theta_n solves -theta'' + V_+ theta = (n+1)(n+1+nu) theta; check by central differences.
  const PTParameters p(2.0, 2.0);
  const double h = 1e-4;
  for (std::size_t n = 0; n <= 3; ++n) {
    const double e = (n + 1.0) * (n + 1.0 + p.nu());
    for (double x = 0.6; x < kPi - 0.5; x += 0.37) {
      const double f = partner_eigenfunction(p, n, x);
      const double d2 = (partner_eigenfunction(p, n, x + h) - 2.0 * f + partner_eigenfunction(p, n, x - h)) / (h * h);
      EXPECT_NEAR(-d2 + partner_potential(p, x) * f, e * f, 1e-4 * e) << n << " " << x;
    }
  }
}

TEST(Factorization, Examples) {
  const PTParameters p(2.0, 2.0);
  EXPECT_LT(factorization_residual(p, 0).r2, 1e-4);
  EXPECT_LT(factorization_residual(p, 0).r1, 1e-4);
  for (std::size_t n = 1; n <= 4; ++n) EXPECT_LT(schrodinger_residual(p, n), 1e-4) << n;
}

TEST(Factorization, RayleighQuotient) {
  const PTParameters p(2.0, 3.0);
  for (std::size_t n = 1; n <= 4; ++n) {
    const double e = n * (n + p.nu());
    EXPECT_NEAR(rayleigh_quotient(p, n) / e, 1.0, 1e-3) << n;
  }
}

TEST(Overlap, Examples) {
  const PTParameters p(2.0, 2.0);
  const Eigen::MatrixXcd u = overlap_matrix(p, 20);
  EXPECT_EQ(u.imag().cwiseAbs().maxCoeff(), 0.0);
  EXPECT_NEAR(u.row(0).squaredNorm(), 1.0, 1e-4);
}

TEST(Position, PartnerRelation) {
  for (const auto& p : {PTParameters(2.0, 2.0), PTParameters(3.5, 1.2), PTParameters(1.5, 4.0, 0.7)}) {
    EXPECT_LT(partner_relation_residual(p), 1e-6);
  }
}

TEST(GridFunction, CsvFormat) {
  const GridFunction g = sample_eigenfunction(PTParameters(2.0, 2.0), 1, 5);
  ASSERT_EQ(g.xs.size(), 5u);
  EXPECT_GT(g.xs.front(), 0.0);
  EXPECT_LT(g.xs.back(), kPi);
  std::ostringstream os;
  os.imbue(std::locale::classic());
  g.write_csv(os);
  std::istringstream in(os.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "x,value");
  int rows = 0;
  while (std::getline(in, line)) {
    EXPECT_NE(line.find(','), std::string::npos);
    ++rows;
  }
  EXPECT_EQ(rows, 5);
}

TEST(PositionProperty, GramIdentityRandomStrengths) {
  std::mt19937 rng(73);
  std::uniform_real_distribution<double> k(1.2, 5.0);
  std::uniform_real_distribution<double> a(0.5, 2.0);
  for (int i = 0; i < 10; ++i) {
    const PTParameters p(k(rng), k(rng), a(rng));
    const Eigen::MatrixXd g = gram_matrix(p, 8);
    EXPECT_LT((g - Eigen::MatrixXd::Identity(9, 9)).cwiseAbs().maxCoeff(), 1e-8)
        << p.kappa << " " << p.kappa_prime << " " << p.a;
  }
}

TEST(PositionProperty, RiccatiOnRandomPoints) {
  std::mt19937 rng(79);
  std::uniform_real_distribution<double> k(1.1, 5.0);
  std::uniform_real_distribution<double> t(0.01, 0.99);
  for (int i = 0; i < 50; ++i) {
    const PTParameters p(k(rng), k(rng));
    const double x = t(rng) * p.width();
    const double w = superpotential(p, x);
    const double v = potential(p, x);
    EXPECT_NEAR(w * w - superpotential_derivative(p, x), v, 1e-8 * std::max(1.0, std::abs(v)));
    EXPECT_NEAR(partner_potential(p, x) - v, 2.0 * superpotential_derivative(p, x),
                1e-8 * std::max(1.0, std::abs(v)));
  }
}
