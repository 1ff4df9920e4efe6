#include <cmath>
#include <limits>
#include <numbers>

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/multiprecision/cpp_int.hpp>
#include <gtest/gtest.h>

#include "test_support.hpp"
#include "uvball/specfun.hpp"

namespace {

using uvball::LogValue;
using boost::multiprecision::cpp_int;

TEST(LogValue, MultiplicationAddsLogsAndMultipliesSigns) {
  const LogValue a = LogValue::from_value(-3.0);
  const LogValue b = LogValue::from_value(0.25);
  const LogValue p = a * b;
  EXPECT_EQ(p.sign(), -1);
  EXPECT_DOUBLE_EQ(p.log_magnitude(), std::log(3.0) + std::log(0.25));
  EXPECT_REL(p.value(), -0.75, 1e-15);
  EXPECT_EQ((a * a).sign(), 1);
  EXPECT_REL((a / b).value(), -12.0, 1e-15);
}

TEST(LogValue, ZeroAbsorbs) {
  const LogValue z = LogValue::from_value(0.0);
  EXPECT_EQ(z.sign(), 0);
  EXPECT_EQ(z.log_magnitude(), -std::numeric_limits<double>::infinity());
  EXPECT_EQ((z * LogValue::from_value(7.0)).value(), 0.0);
  EXPECT_EQ(LogValue::zero().value(), 0.0);
}

TEST(LogValue, RoundTripIsExactForRepresentableValues) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> exponent(-300.0, 300.0);
  for (int i = 0; i < 1000; ++i) {
    const double x = (i % 2 ? -1.0 : 1.0) * std::pow(10.0, exponent(rng));
    EXPECT_REL(LogValue::from_value(x).value(), x, 1e-14);
  }
}

TEST(LogValue, CarriesMagnitudesBeyondDoubleRange) {
  const LogValue big = LogValue::from_log(2000.0);
  const LogValue q = big / LogValue::from_log(1999.0);
  EXPECT_REL(q.value(), std::exp(1.0), 1e-12);
  EXPECT_REL(big.pow(0.5).log_magnitude(), 1000.0, 1e-15);
}

TEST(Softplus, StableAtExtremes) {
  EXPECT_DOUBLE_EQ(uvball::log1p_exp(800.0), 800.0);
  EXPECT_REL(uvball::log1p_exp(-800.0), std::exp(-800.0), 1e-15);
  EXPECT_REL(uvball::log1p_exp(0.0), std::log(2.0), 1e-15);
  EXPECT_EQ(uvball::log1p_exp(-std::numeric_limits<double>::infinity()), 0.0);
  EXPECT_REL(uvball::inv_one_plus_exp(-40.0), 1.0 / (1.0 + std::exp(-40.0)), 1e-15);
  EXPECT_EQ(uvball::inv_one_plus_exp(1000.0), 0.0);
}

TEST(LogGamma, Examples) {
  EXPECT_EQ(uvball::log_gamma(1.0), 0.0);
  EXPECT_REL(uvball::log_gamma(0.5), 0.5 * std::log(std::numbers::pi), 1e-15);
  double factorial = 1.0;
  for (int i = 2; i <= 10; ++i) factorial *= i;
  EXPECT_REL(uvball::log_gamma(11.0), std::log(factorial), 1e-15);
  EXPECT_NEAR(uvball::log_gamma(11.0), 15.1044125731, 1e-10);
}

TEST(LogGamma, RejectsNonPositive) {
  EXPECT_THROW(uvball::log_gamma(0.0), uvball::parameter_error);
  EXPECT_THROW(uvball::log_gamma(-2.5), uvball::parameter_error);
}

TEST(LogGamma, LargeArgumentsStayFinite) {
  EXPECT_TRUE(std::isfinite(uvball::log_gamma(1e5)));
  EXPECT_REL(uvball::log_gamma(201.0) - uvball::log_gamma(200.0), std::log(200.0), 1e-12);
}

TEST(LogBinomial, Examples) {
  EXPECT_REL(uvball::log_binomial(4.0, 3), std::log(4.0), 1e-15);
  EXPECT_EQ(uvball::log_binomial(5.0, 0), 0.0);
  EXPECT_REL(uvball::log_binomial(10.0, 5), std::log(252.0), 1e-15);
}

TEST(LogBinomial, IntegerBelowKIsZeroBinomial) {
  EXPECT_EQ(uvball::log_binomial(2.0, 3), -std::numeric_limits<double>::infinity());
  EXPECT_THROW(uvball::log_binomial(-1.0, 1), uvball::parameter_error);
  EXPECT_THROW(uvball::log_binomial(1.5, 3), uvball::parameter_error);
}

TEST(LogBinomial, MatchesBigIntegerBinomialsUpTo300) {
  for (int n = 0; n <= 300; ++n) {
    cpp_int c = 1;
    for (int k = 0; k <= n; ++k) {
      if (k > 0) c = c * (n - k + 1) / k;
      const double exact = c.convert_to<double>();
      ASSERT_LE(uvball::testing::rel_err(std::exp(uvball::log_binomial(n, k)), exact), 1e-12)
          << "n=" << n << " k=" << k;
    }
  }
}

TEST(LogBinomial, RealUpperArgument) {
  // C(2.5, 2) = 2.5 * 1.5 / 2
  EXPECT_REL(std::exp(uvball::log_binomial(2.5, 2)), 1.875, 1e-14);
}

TEST(Normalization, OmegaExamples) {
  const double pi = std::numbers::pi;
  EXPECT_REL(uvball::omega_mu(0.0, 2), pi, 1e-14);
  EXPECT_REL(uvball::omega_mu(0.0, 3), 4.0 * pi / 3.0, 1e-14);
  EXPECT_REL(uvball::omega_mu(1.0, 2), pi / 2.0, 1e-14);
}

TEST(Normalization, SigmaExamples) {
  const double pi = std::numbers::pi;
  EXPECT_REL(uvball::sigma_sphere(2), 2.0 * pi, 1e-14);
  EXPECT_REL(uvball::sigma_sphere(3), 4.0 * pi, 1e-14);
  EXPECT_REL(uvball::sigma_sphere(4), 2.0 * pi * pi, 1e-14);
}

TEST(Normalization, CExamples) {
  EXPECT_REL(uvball::c_mu_d(0.0, 2), 0.5, 1e-14);
  EXPECT_REL(uvball::c_mu_d(0.0, 3), 3.0 * std::pow(2.0, -2.5), 1e-14);
  EXPECT_REL(uvball::c_mu_d(1.0, 2), 0.5, 1e-14);
}

TEST(Normalization, AgreesWithDirectQuadrature) {
  boost::math::quadrature::tanh_sinh<double> integrator;
  const double pi = std::numbers::pi;
  // σ_1 = ∫_0^{2π} dθ, σ_2 = 2π ∫_0^π sin θ dθ.
  const double sigma2 = 2.0 * pi;
  const double sigma3 = 2.0 * pi * integrator.integrate([](double th) { return std::sin(th); }, 0.0, pi);
  EXPECT_REL(uvball::sigma_sphere(2), sigma2, 1e-10);
  EXPECT_REL(uvball::sigma_sphere(3), sigma3, 1e-10);
  for (int d : {2, 3}) {
    const double sigma = d == 2 ? sigma2 : sigma3;
    for (double mu : {0.0, 0.5, 1.0}) {
      const double radial = integrator.integrate(
          [&](double r) { return std::pow(r, d - 1) * std::pow(1.0 - r * r, mu); }, 0.0, 1.0);
      EXPECT_REL(uvball::omega_mu(mu, d), sigma * radial, 1e-10) << "d=" << d << " mu=" << mu;
    }
  }
}

TEST(Normalization, RejectsInvalidParameters) {
  EXPECT_THROW(uvball::omega_mu(-1.0, 2), uvball::parameter_error);
  EXPECT_THROW(uvball::sigma_sphere(1), uvball::parameter_error);
  EXPECT_THROW(uvball::c_mu_d(0.0, 1), uvball::parameter_error);
}

TEST(HarmonicDim, Examples) {
  for (int d = 2; d <= 6; ++d) EXPECT_EQ(uvball::harmonic_dim(0, d), 1);
  for (int k = 1; k <= 40; ++k) EXPECT_EQ(uvball::harmonic_dim(k, 2), 2);
  for (int k = 0; k <= 40; ++k) EXPECT_EQ(uvball::harmonic_dim(k, 3), 2 * k + 1);
  EXPECT_EQ(uvball::harmonic_dim(2, 4), 9);
}

TEST(HarmonicDim, RadialDecompositionCountsAllPolynomials) {
  for (int d : {2, 3, 4})
    for (int n = 0; n <= 20; ++n) {
      std::int64_t total = 0;
      for (int m = 0; m <= n; ++m)
        for (int j = 0; 2 * j <= m; ++j) total += uvball::harmonic_dim(m - 2 * j, d);
      EXPECT_EQ(total, uvball::detail::exact_binomial(n + d, d)) << "d=" << d << " n=" << n;
    }
}

TEST(HarmonicDim, RejectsInvalidArguments) {
  EXPECT_THROW(uvball::harmonic_dim(-1, 3), uvball::parameter_error);
  EXPECT_THROW(uvball::harmonic_dim(2, 1), uvball::parameter_error);
}

}  // namespace
