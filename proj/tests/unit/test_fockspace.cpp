#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "cstates/errors.hpp"
#include "cstates/fockspace.hpp"
#include "cstates/intelligent.hpp"

using namespace cstates;

namespace {

CVector random_vector(std::mt19937& rng, std::size_t n_max) {
  std::normal_distribution<double> g;
  std::uniform_real_distribution<double> decay(0.8, 1.5);
  const double d = decay(rng);
  CVector v(n_max + 1);
  std::uniform_real_distribution<double> phase(-std::numbers::pi, std::numbers::pi);
  // Free amplitudes on the lowest levels, then a monotone envelope so the tail estimate is
  // meaningful.
  for (std::size_t n = 0; n <= n_max; ++n) {
    v[n] = n < 4 ? cplx(g(rng), g(rng))
                 : std::polar(std::exp(-d * static_cast<double>(n)), phase(rng));
  }
  return v;
}

CVector basis(std::size_t n, std::size_t n_max) {
  CVector v(n_max + 1, 0.0);
  v[n] = 1.0;
  return v;
}

std::vector<SpectrumModel> models() {
  return {SpectrumModel::harmonic(0.3), SpectrumModel::poschl_teller(2.0, 2.0, 0.3),
          SpectrumModel::poschl_teller(3.5, 1.2), SpectrumModel::square_well(1.1)};
}

}  // namespace

TEST(FockVector, NormalizationAndTail) {
  CVector c(41);
  for (std::size_t n = 0; n <= 40; ++n) c[n] = std::pow(0.5, static_cast<double>(n));
  const FockVector v = make_fock_vector(c);
  EXPECT_NEAR(v.norm(), 1.0, 1e-12);
  EXPECT_LT(v.tail_bound, 1e-20);
  const FockVector flat = make_fock_vector(CVector(10, 1.0));
  EXPECT_TRUE(std::isinf(flat.tail_bound) || flat.tail_bound > 0.1);
}

TEST(FockVector, TailCountsParitySelectiveStates) {
  CVector c(41, 0.0);
  for (std::size_t n = 0; n <= 40; n += 2) c[n] = std::pow(0.9, static_cast<double>(n));
  const FockVector v = make_fock_vector(c);
  EXPECT_GT(v.tail_bound, 1e-5);
  EXPECT_TRUE(std::isfinite(v.tail_bound));
}

TEST(Ladder, Examples) {
  const LadderRep h = build_ladder(SpectrumModel::harmonic(), 10);
  EXPECT_NEAR(std::abs(h.a_plus_matrix()(1, 0) - 1.0), 0.0, 1e-15);
  for (const auto& m : models()) {
    const LadderRep rep = build_ladder(m, 10);
    for (const cplx c : rep.lower(basis(0, 10))) EXPECT_EQ(c, cplx(0.0));
  }
  const LadderRep pt = build_ladder(SpectrumModel::poschl_teller(2.0, 2.0), 10);
  const Eigen::MatrixXcd a = pt.a_minus_matrix();
  const Eigen::MatrixXcd ad = pt.a_plus_matrix();
  EXPECT_NEAR(std::abs((a * ad - ad * a)(0, 0) - 5.0), 0.0, 1e-12);
}

TEST(Ladder, RaiseExtends) {
  const LadderRep rep = build_ladder(SpectrumModel::harmonic(), 5);
  const CVector up = rep.raise(basis(5, 5), true);
  ASSERT_EQ(up.size(), 7u);
  EXPECT_NEAR(std::abs(up[6] - std::sqrt(6.0)), 0.0, 1e-14);
  EXPECT_EQ(rep.raise(basis(5, 5)).size(), 6u);
}

TEST(Quadratures, CommutatorDiagonal) {
  const Quadratures hq = quadratures(build_ladder(SpectrumModel::harmonic(0.4), 12));
  const Eigen::MatrixXcd c1 = hq.x * hq.p - hq.p * hq.x;
  for (int n = 0; n < 12; ++n) EXPECT_NEAR(std::abs(c1(n, n) - cplx(0.0, 1.0)), 0.0, 1e-13);

  const Quadratures pq = quadratures(build_ladder(SpectrumModel::poschl_teller(2.0, 2.0), 12));
  const Eigen::MatrixXcd c2 = pq.x * pq.p - pq.p * pq.x;
  EXPECT_NEAR(std::abs(c2(3, 3) - cplx(0.0, 11.0)), 0.0, 1e-12);
  for (int n = 0; n <= 12; ++n) {
    EXPECT_NEAR(pq.h(n, n).real(), n * (n + 4.0), 1e-12);
    EXPECT_NEAR(pq.g(n, n).real(), 2.0 * n + 5.0, 1e-12);
  }
}

TEST(Uncertainty, HarmonicGroundState) {
  const LadderRep rep = build_ladder(SpectrumModel::harmonic(), 10);
  const UncertaintyReport r = uncertainty(rep, make_fock_vector(basis(0, 10)));
  EXPECT_NEAR(r.var_x, 0.5, 1e-15);
  EXPECT_NEAR(r.var_p, 0.5, 1e-15);
  EXPECT_NEAR(r.rs_product, 0.25, 1e-15);
  EXPECT_NEAR(r.rs_bound, 0.25, 1e-15);
  EXPECT_NEAR(r.mean_f, 0.0, 1e-15);
  const Eigen::MatrixXcd f = f_operator(rep, make_fock_vector(basis(0, 10)));
  EXPECT_NEAR(std::abs(f(0, 0)), 0.0, 1e-15);
}

TEST(Uncertainty, DeltaFromFields) {
  std::mt19937 rng(3);
  const LadderRep rep = build_ladder(SpectrumModel::poschl_teller(2.0, 2.0), 30);
  const UncertaintyReport r = uncertainty(rep, make_fock_vector(random_vector(rng, 30)));
  EXPECT_DOUBLE_EQ(r.delta, 0.5 * std::sqrt(r.mean_g * r.mean_g + r.mean_f * r.mean_f));
  EXPECT_DOUBLE_EQ(r.rs_bound, 0.25 * (r.mean_g * r.mean_g + r.mean_f * r.mean_f));
}

TEST(GisOracle, Examples) {
  const auto pt = SpectrumModel::poschl_teller(2.0, 2.0);
  const FockVector d = gis_recurrence_oracle(build_ladder(pt, 60), 1.0, 2.0);
  EXPECT_NEAR(std::abs(d.coeffs[2] / d.coeffs[0] - 19.0 / (9.0 * std::sqrt(60.0))), 0.0, 1e-14);

  // lambda = 1 reproduces z^n e^{-i alpha E_n}/sqrt(E(n)) up to normalization.
  const auto m = SpectrumModel::poschl_teller(3.5, 1.2, 0.3);
  const cplx z(0.7, -0.4);
  const FockVector o = gis_recurrence_oracle(build_ladder(m, 60), z, 1.0);
  const auto logs = log_energy_products(m, 60);
  for (std::size_t n = 1; n <= 20; ++n) {
    const cplx want = std::pow(z, static_cast<double>(n)) *
                      std::polar(std::exp(-0.5 * logs[n]), -0.3 * energy(m, n));
    EXPECT_LT(std::abs(o.coeffs[n] / o.coeffs[0] - want), 1e-12 * std::abs(want)) << n;
  }

  // z = 0, lambda = 3: squeezed vacuum, odd levels empty.
  const FockVector sq = gis_recurrence_oracle(build_ladder(SpectrumModel::harmonic(), 120), 0.0, 3.0);
  for (std::size_t n = 1; n <= 120; n += 2) EXPECT_EQ(std::abs(sq.coeffs[n]), 0.0);
  EXPECT_GT(std::abs(sq.coeffs[2]), 0.1);
}

TEST(FockProperty, LadderAdjointAndNumberOperator) {
  for (const auto& m : models()) {
    const std::size_t n_max = 30;
    const LadderRep rep = build_ladder(m, n_max);
    const Eigen::MatrixXcd a = rep.a_minus_matrix();
    const Eigen::MatrixXcd ad = rep.a_plus_matrix();
    EXPECT_EQ((ad - a.adjoint()).cwiseAbs().maxCoeff(), 0.0) << m.describe();
    const Eigen::MatrixXcd h = ad * a;
    const Eigen::MatrixXcd c = a * ad - ad * a;
    for (std::size_t n = 0; n <= n_max; ++n) {
      const auto i = static_cast<Eigen::Index>(n);
      EXPECT_NEAR(std::abs(h(i, i) - energy(m, n)), 0.0, 1e-12 * std::max(1.0, energy(m, n)));
      if (n < n_max) {
        EXPECT_NEAR(std::abs(c(i, i) - level_gap(m, n)), 0.0, 1e-12 * level_gap(m, n));
      }
    }
  }
}

TEST(FockProperty, RobertsonSchrodingerInequality) {
  std::mt19937 rng(2026);
  for (const auto& m : models()) {
    const LadderRep rep = build_ladder(m, 40);
    for (int k = 0; k < 50; ++k) {
      const UncertaintyReport r = uncertainty(rep, make_fock_vector(random_vector(rng, 40)));
      EXPECT_GE(r.rs_product, r.rs_bound - 1e-10 * r.rs_product) << m.describe();
    }
  }
}

TEST(FockProperty, OracleSolvesDefiningEquation) {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  std::uniform_real_distribution<double> re(0.3, 3.0);
  for (int k = 0; k < 50; ++k) {
    const cplx z(u(rng), u(rng));
    const cplx lambda(re(rng), u(rng));
    const auto& m = models()[static_cast<std::size_t>(k) % models().size()];
    const LadderRep rep = build_ladder(m, 200);
    const FockVector v = gis_recurrence_oracle(rep, z, lambda);
    EXPECT_LT(gis_equation_residual(rep, v, z, lambda), 1e-9)
        << m.describe() << " z=" << z << " lambda=" << lambda;
  }
}

TEST(FockProperty, NormalizedVectorsHaveUnitNorm) {
  std::mt19937 rng(23);
  for (int k = 0; k < 50; ++k) {
    EXPECT_NEAR(make_fock_vector(random_vector(rng, 25)).norm(), 1.0, 1e-12);
  }
}
