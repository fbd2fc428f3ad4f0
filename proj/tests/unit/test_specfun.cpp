#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <tuple>

#include "cstates/errors.hpp"
#include "cstates/specfun.hpp"

using namespace cstates;

namespace {

// Reference values computed once with mpmath at 40 digits.
const std::vector<std::tuple<double, double, double>>& bessel_i_table() {
  static const std::vector<std::tuple<double, double, double>> t{
      std::make_tuple(0.5, 1.0, 0.93767488824548764672),
      std::make_tuple(0.0, 1.0, 1.2660658777520083356),
      std::make_tuple(1.0, 1.0, 0.56515910399248502721),
      std::make_tuple(4.0, 3.0, 0.32570518193793544067),
      std::make_tuple(2.7, 12.5, 22599.045719547421014),
      std::make_tuple(7.5, 40.0, 7323213738090883.3397)};
  return t;
}

const std::vector<std::tuple<double, double, double>>& bessel_k_table() {
  static const std::vector<std::tuple<double, double, double>> t{
      std::make_tuple(0.5, 2.0, 0.11993777196806144737),
      std::make_tuple(0.0, 1.0, 0.42102443824070833334),
      std::make_tuple(1.0, 1.0, 0.60190723019723457474),
      std::make_tuple(2.0, 10.0, 2.1509817006932768731e-5),
      std::make_tuple(3.2, 0.05, 162167.95597637013195),
      std::make_tuple(5.4, 25.0, 6.1256384959646380931e-12),
      std::make_tuple(4.0, 50.0, 3.9952842517173431102e-23),
      std::make_tuple(0.7, 0.3, 2.0605226512839310387)};
  return t;
}

double rel(double got, double want) { return std::abs(got - want) / std::abs(want); }
double rel(cplx got, cplx want) { return std::abs(got - want) / std::abs(want); }

}  // namespace

TEST(LogGamma, Examples) {
  EXPECT_EQ(log_gamma(1.0), 0.0);
  EXPECT_NEAR(log_gamma(5.0), std::log(24.0), 1e-14);
  EXPECT_NEAR(log_gamma(0.5), 0.57236494292470008707, 1e-15);
  EXPECT_NEAR(log_gamma(7.3), 7.1478925230222490328, 1e-14);
  EXPECT_NEAR(log_gamma(0.013), 4.3354402421510574653, 1e-14);
  EXPECT_THROW(log_gamma(0.0), Error);
}

TEST(BesselI, Examples) {
  EXPECT_EQ(bessel_i(0.0, 0.0), 1.0);
  EXPECT_EQ(bessel_i(2.0, 0.0), 0.0);
  EXPECT_NEAR(bessel_i(0.5, 1.0), std::sqrt(2.0 / std::numbers::pi) * std::sinh(1.0), 1e-15);
  for (const auto& [nu, x, want] : bessel_i_table()) {
    EXPECT_LT(rel(bessel_i(nu, x), want), 1e-13) << "nu=" << nu << " x=" << x;
    EXPECT_NEAR(log_bessel_i(nu, x), std::log(want), 1e-13 * std::max(1.0, std::log(want)));
  }
  EXPECT_THROW(bessel_i(-0.5, 1.0), Error);
}

TEST(BesselI, LogDomainPastOverflow) {
  // I_0(x) ~ e^x / sqrt(2 pi x) for large x.
  const double x = 1000.0;
  const double lead = x - 0.5 * std::log(2.0 * std::numbers::pi * x);
  EXPECT_NEAR(log_bessel_i(0.0, x), lead + std::log1p(1.0 / (8.0 * x)), 1e-6);
}

TEST(BesselK, Examples) {
  EXPECT_NEAR(bessel_k(0.5, 2.0), std::sqrt(std::numbers::pi / 4.0) * std::exp(-2.0), 1e-15);
  for (const auto& [nu, x, want] : bessel_k_table()) {
    EXPECT_LT(rel(bessel_k(nu, x), want), 1e-12) << "nu=" << nu << " x=" << x;
  }
  // Hankel expansion with mu = 4 nu^2 = 16, summed to the fourth term.
  double series = 1.0, term = 1.0;
  for (int k = 1; k <= 4; ++k) {
    term *= (16.0 - (2.0 * k - 1.0) * (2.0 * k - 1.0)) / (k * 80.0);
    series += term;
  }
  const double asym = std::sqrt(std::numbers::pi / 20.0) * std::exp(-10.0) * series;
  EXPECT_LT(rel(bessel_k(2.0, 10.0), asym), 1e-3);
  EXPECT_THROW(bessel_k(1.0, 0.0), Error);
  EXPECT_THROW(bessel_k(-1.0, 1.0), Error);
}

TEST(BesselK, WronskianAtOne) {
  const double w = bessel_i(0.0, 1.0) * bessel_k(1.0, 1.0) + bessel_i(1.0, 1.0) * bessel_k(0.0, 1.0);
  EXPECT_NEAR(w, 1.0, 1e-13);
}

TEST(BesselK, LogDomainPastUnderflow) {
  // K_nu(x) ~ sqrt(pi/2x) e^{-x} (1 + (4 nu^2 - 1)/(8x)).
  const double x = 900.0;
  const double lead = 0.5 * std::log(std::numbers::pi / (2.0 * x)) - x;
  EXPECT_NEAR(log_bessel_k(1.0, x), lead + std::log1p(3.0 / (8.0 * x)), 1e-6);
}

TEST(Jacobi, Examples) {
  EXPECT_EQ(jacobi_p(0, 0.3, 1.7, -0.2), 1.0);
  EXPECT_NEAR(jacobi_p(1, 0.0, 0.0, 0.5), 0.5, 1e-15);
  EXPECT_NEAR(jacobi_p(2, 1.0, 1.0, 1.0), 3.0, 1e-14);
  EXPECT_NEAR(jacobi_p(5, 0.5, 1.5, 0.3), 0.5180175, 1e-14);
  EXPECT_NEAR(jacobi_p(7, 2.5, -0.5, -0.8), -0.15783178125, 1e-14);
}

TEST(Jacobi, ValueAtOneMatchesBinomial) {
  for (int n = 0; n <= 15; ++n) {
    for (const double a : {0.0, 0.5, 2.3}) {
      const double want = std::exp(std::lgamma(n + a + 1.0) - std::lgamma(n + 1.0) - std::lgamma(a + 1.0));
      EXPECT_LT(rel(jacobi_p(n, a, 1.1, 1.0), want), 1e-13);
    }
  }
}

TEST(Hyp1F1, Examples) {
  EXPECT_EQ(hyp1f1({0.3, 0.1}, 2.5, 0.0), cplx(1.0));
  EXPECT_LT(rel(hyp1f1(1.7, 1.7, 1.0), cplx(std::numbers::e)), 1e-15);
  EXPECT_LT(rel(hyp1f1(1.0, 2.0, 1.0), cplx(std::numbers::e - 1.0)), 1e-15);
  EXPECT_LT(rel(hyp1f1({0.5, 0.2}, 1.5, {-2.0, 1.0}),
                cplx(0.53813204650745270257, -0.026737348988216245595)),
            1e-13);
  EXPECT_LT(rel(hyp1f1(-1.3, 2.4, 7.0), cplx(-0.62950746541925751267)), 1e-12);
}

TEST(Hyp1F1, Errors) {
  try {
    (void)hyp1f1(1.0, -2.0, 0.5);
    FAIL() << "expected pole";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::domain);
    EXPECT_EQ(e.reason(), "pole");
  }
  EXPECT_THROW(hyp1f1(1.0, 2.0, 60.0), Error);
}

TEST(Hyp2F1, Examples) {
  EXPECT_EQ(hyp2f1(0.4, 1.1, 2.0, 0.0), cplx(1.0));
  EXPECT_NEAR(std::abs(hyp2f1(-1.0, 3.0, 2.0, 0.5) - 0.25), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(hyp2f1(0.5, 0.5, 1.5, 1.0) - std::numbers::pi / 2.0), 0.0, 1e-9);
  EXPECT_LT(rel(hyp2f1(0.3, 1.2, 2.5, 0.6), cplx(1.1191011532815327739)), 1e-13);
  EXPECT_LT(rel(hyp2f1({1.0, 1.0}, 0.5, 3.0, {0.2, -0.7}),
                cplx(1.1412669511506826712, -0.14289137885364526453)),
            1e-13);
}

TEST(Hyp2F1, DivergentOutsideDisk) {
  try {
    (void)hyp2f1(0.5, 0.5, 1.5, 1.5);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::convergence);
  }
  // Terminating series are polynomials and fine anywhere.
  EXPECT_NEAR(std::abs(hyp2f1(-2.0, 1.0, 1.0, 3.0) - cplx(4.0)), 0.0, 1e-13);
}

TEST(GaussLegendre, Examples) {
  const QuadratureRule q2 = gauss_legendre(2);
  ASSERT_EQ(q2.nodes.size(), 2u);
  EXPECT_NEAR(q2.nodes[0], -1.0 / std::sqrt(3.0), 1e-15);
  EXPECT_NEAR(q2.nodes[1], 1.0 / std::sqrt(3.0), 1e-15);
  EXPECT_NEAR(q2.weights[0], 1.0, 1e-15);
  EXPECT_NEAR(q2.weights[1], 1.0, 1e-15);
  EXPECT_NEAR(q2.integrate([](double x) { return x * x; }, -1.0, 1.0), 2.0 / 3.0, 1e-15);
  EXPECT_NEAR(gauss_legendre(3).integrate([](double x) { return std::pow(x, 4); }, -1.0, 1.0), 0.4,
              1e-15);
  EXPECT_THROW(gauss_legendre(1), Error);
  EXPECT_THROW(gauss_legendre(513), Error);
}

TEST(GaussLegendre, NodesAscendingWeightsPositive) {
  for (const int order : {2, 7, 64, 512}) {
    const QuadratureRule q = gauss_legendre(order);
    double sum = 0.0;
    for (std::size_t i = 0; i < q.nodes.size(); ++i) {
      if (i) EXPECT_LT(q.nodes[i - 1], q.nodes[i]);
      EXPECT_GT(q.weights[i], 0.0);
      EXPECT_GT(q.nodes[i], -1.0);
      EXPECT_LT(q.nodes[i], 1.0);
      sum += q.weights[i];
    }
    EXPECT_NEAR(sum, 2.0, 1e-13) << order;
  }
}

TEST(SpecfunProperty, KummerTransformation) {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  std::uniform_real_distribution<double> pos(0.3, 5.0);
  for (int i = 0; i < 50; ++i) {
    const cplx a(u(rng), u(rng));
    const cplx b(pos(rng), 0.5 * u(rng));
    const cplx z(2.0 * u(rng), 2.0 * u(rng));
    const cplx lhs = hyp1f1(a, b, z);
    const cplx rhs = std::exp(z) * hyp1f1(b - a, b, -z);
    EXPECT_LT(std::abs(lhs - rhs), 1e-10 * std::max(1.0, std::abs(lhs)))
        << "a=" << a << " b=" << b << " z=" << z;
  }
}

TEST(SpecfunProperty, BesselWronskian) {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> nu_d(0.0, 8.0);
  std::uniform_real_distribution<double> logx(std::log(0.05), std::log(60.0));
  for (int i = 0; i < 50; ++i) {
    const double nu = nu_d(rng);
    const double x = std::exp(logx(rng));
    const double t1 = std::exp(log_bessel_i(nu, x) + log_bessel_k(nu + 1.0, x));
    const double t2 = std::exp(log_bessel_i(nu + 1.0, x) + log_bessel_k(nu, x));
    EXPECT_NEAR(x * (t1 + t2), 1.0, 1e-9) << "nu=" << nu << " x=" << x;
  }
}

TEST(SpecfunProperty, BesselRecurrences) {
  std::mt19937 rng(13);
  std::uniform_real_distribution<double> nu_d(1.0, 6.0);
  std::uniform_real_distribution<double> x_d(0.2, 30.0);
  for (int i = 0; i < 50; ++i) {
    const double nu = nu_d(rng);
    const double x = x_d(rng);
    // I_{nu-1} - I_{nu+1} = (2 nu / x) I_nu and K_{nu+1} - K_{nu-1} = (2 nu / x) K_nu.
    const double i_lhs = bessel_i(nu - 1.0, x) - bessel_i(nu + 1.0, x);
    EXPECT_LT(rel(i_lhs, 2.0 * nu / x * bessel_i(nu, x)), 1e-11);
    const double k_lhs = bessel_k(nu + 1.0, x) - bessel_k(nu - 1.0, x);
    EXPECT_LT(rel(k_lhs, 2.0 * nu / x * bessel_k(nu, x)), 1e-11);
  }
}

TEST(SpecfunProperty, JacobiSymmetry) {
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> ab(-0.9, 5.0);
  std::uniform_real_distribution<double> x_d(-1.0, 1.0);
  std::uniform_int_distribution<int> n_d(0, 20);
  for (int i = 0; i < 50; ++i) {
    const int n = n_d(rng);
    const double a = ab(rng);
    const double b = ab(rng);
    const double x = x_d(rng);
    const double lhs = jacobi_p(n, a, b, -x);
    const double rhs = (n % 2 ? -1.0 : 1.0) * jacobi_p(n, b, a, x);
    EXPECT_NEAR(lhs, rhs, 1e-11 * std::max(1.0, std::abs(rhs)));
  }
}

TEST(SpecfunProperty, QuadratureExactness) {
  std::mt19937 rng(19);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  for (const int order : {2, 3, 5, 8, 16, 32}) {
    for (int trial = 0; trial < 8; ++trial) {
      // Random polynomial of degree 2 order - 1; exact integral over [-1, 1] from the even terms.
      std::vector<double> c(static_cast<std::size_t>(2 * order));
      double exact = 0.0;
      for (std::size_t k = 0; k < c.size(); ++k) {
        c[k] = coef(rng);
        if (k % 2 == 0) exact += 2.0 * c[k] / static_cast<double>(k + 1);
      }
      auto poly = [&](double x) {
        double acc = 0.0;
        for (std::size_t k = c.size(); k-- > 0;) acc = acc * x + c[k];
        return acc;
      };
      EXPECT_NEAR(gauss_legendre(order).integrate(poly, -1.0, 1.0), exact, 1e-12) << order;
    }
  }
}

TEST(Log1pC, SmallArgument) {
  const cplx w(1e-12, -3e-13);
  const cplx want = w - w * w / 2.0;
  EXPECT_LT(std::abs(log1p_c(w) - want), 1e-15 * std::abs(w));
}
