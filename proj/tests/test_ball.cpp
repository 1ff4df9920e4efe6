#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "test_support.hpp"
#include "uvball/ball.hpp"
#include "uvball/oracle.hpp"

namespace {

using uvball::BallParams;
using uvball::BallPoint;
using uvball::RadialIndex;
using uvball::UnitDirection;
using uvball::testing::random_point;

double scale(const BallParams& bp, long n, const BallPoint& x, const BallPoint& y, bool modified) {
  const auto kx = uvball::ball_kernels(bp, n, x, x);
  const auto ky = uvball::ball_kernels(bp, n, y, y);
  return modified ? std::sqrt(kx.modified * ky.modified) : std::sqrt(kx.classical * ky.classical);
}

TEST(BallParams, Validation) {
  EXPECT_THROW(BallParams(1, 0.0, 0.0), uvball::parameter_error);
  EXPECT_THROW(BallParams(2, -1.0, 0.0), uvball::parameter_error);
  EXPECT_THROW(BallParams(2, 0.0, -0.5), uvball::parameter_error);
  const BallParams bp(5, 0.25, 2.0);
  EXPECT_EQ(bp.delta(), 1.5);
  EXPECT_REL(bp.c(), uvball::c_mu_d(0.25, 5), 1e-15);
  EXPECT_EQ(bp.with_lambda(0.0).lambda(), 0.0);
}

TEST(BallPoint, CartesianHandling) {
  const std::vector<double> x{0.3, 0.4};
  const auto p = BallPoint::from_cartesian(x);
  EXPECT_DOUBLE_EQ(p.r(), 0.5);
  const auto back = p.cartesian();
  EXPECT_NEAR(back[0], 0.3, 1e-15);
  EXPECT_NEAR(back[1], 0.4, 1e-15);
  EXPECT_DOUBLE_EQ(p.t(), -0.5);

  const std::vector<double> almost{0.6, 0.8 * (1.0 + 5e-13)};
  EXPECT_EQ(BallPoint::from_cartesian(almost).r(), 1.0);
  const std::vector<double> outside{0.6, 0.8 * (1.0 + 1e-9)};
  EXPECT_THROW(BallPoint::from_cartesian(outside), uvball::domain_error);
  const std::vector<double> origin{0.0, 0.0, 0.0};
  EXPECT_EQ(BallPoint::from_cartesian(origin).r(), 0.0);
  EXPECT_EQ(BallPoint::from_cartesian(origin).dim(), 3);
  EXPECT_THROW(BallPoint(1.5, UnitDirection::pole(2)), uvball::domain_error);
}

TEST(BallPoint, CartesianRoundTrip) {
  std::mt19937_64 rng(31);
  for (int d : {2, 3, 5})
    for (int i = 0; i < 100; ++i) {
      const auto p = random_point(d, rng);
      const auto c = p.cartesian();
      const auto q = BallPoint::from_cartesian(c);
      EXPECT_NEAR(q.r(), p.r(), 1e-14);
      for (int j = 0; j < d; ++j) EXPECT_NEAR(q.cartesian()[j], c[j], 1e-14);
    }
}

TEST(RadialIndex, Validation) {
  EXPECT_THROW(RadialIndex(3, 2), uvball::parameter_error);
  EXPECT_THROW(RadialIndex(-1, 0), uvball::parameter_error);
  const RadialIndex idx(7, 2);
  EXPECT_EQ(idx.k(), 3);
  EXPECT_EQ(idx.beta(2), 3.0);
  EXPECT_EQ(idx.beta(3), 3.5);
}

TEST(HarmonicMass, Examples) {
  const BallParams bp(2, 0.0, 1.0);
  EXPECT_REL(uvball::mass_for_harmonic_degree(bp, 0), 2.0, 1e-15);
  EXPECT_REL(uvball::mass_for_harmonic_degree(bp, 1), 4.0, 1e-15);
  for (long k : {0L, 3L, 10L}) EXPECT_EQ(uvball::mass_for_harmonic_degree(bp.with_lambda(0.0), k), 0.0);
  // λ 2^k / c for k far beyond double range stays finite in log form.
  const auto log_mass = uvball::log_mass_for_harmonic_degree(bp, 5000);
  EXPECT_REL(log_mass.log_magnitude(), 5000.0 * std::log(2.0) + std::log(2.0), 1e-14);
}

TEST(BasisEval, ClassicalExamples) {
  std::mt19937_64 rng(1);
  for (int d : {2, 3}) {
    const BallParams bp(d, 0.5, 1.0);
    EXPECT_EQ(uvball::classical_basis_eval(bp, {0, 0}, 1, random_point(d, rng)), 1.0);
  }
  const BallParams bp(2, 0.0, 0.0);
  // n = 2, j = 1 has k = 0, so β = 0: P_1^{(0,0)}(-1) = -1 at the origin.
  const BallPoint origin(0.0, UnitDirection::pole(2));
  EXPECT_DOUBLE_EQ(uvball::classical_basis_eval(bp, {2, 1}, 1, origin), -1.0);
  EXPECT_REL(uvball::classical_basis_eval(bp, {1, 0}, 1, BallPoint(1.0, UnitDirection::from_angle(0.0))),
             std::numbers::sqrt2, 1e-15);
}

TEST(BasisEval, ModifiedExamples) {
  std::mt19937_64 rng(2);
  for (int d : {2, 3})
    for (int i = 0; i < 10; ++i) {
      const auto x = random_point(d, rng);
      const BallParams massless(d, 0.5, 0.0);
      for (long n = 0; n <= 6; ++n)
        for (long j = 0; 2 * j <= n; ++j)
          EXPECT_EQ(uvball::modified_basis_eval(massless, {n, j}, 1, x), uvball::classical_basis_eval(massless, {n, j}, 1, x));
      EXPECT_EQ(uvball::modified_basis_eval(BallParams(d, 0.5, 2.0), {0, 0}, 1, x), 1.0);
    }
  // q_1^{(0,0,M_0 = 2)}(1) = 1 / (1 + 2 K_0(1,1)) = 1/2, times Y^0 = 1.
  const BallParams bp(2, 0.0, 1.0);
  EXPECT_REL(uvball::modified_basis_eval(bp, {2, 1}, 1, BallPoint(1.0, UnitDirection::from_angle(0.4))), 0.5, 1e-14);
}

TEST(BasisEval, SolidHarmonicHomogeneity) {
  const BallParams bp(3, 0.0, 0.0);
  const auto xi = UnitDirection::from_angles(0.8, 2.1);
  for (long k = 0; k <= 6; ++k)
    for (double r : {0.2, 0.7}) {
      // j = 0 and μ arbitrary: P_0 = 1, so P^k_{0,ν}(rξ) = r^k Y_ν^k(ξ).
      EXPECT_NEAR(uvball::classical_basis_eval(bp, {k, 0}, 1, BallPoint(r, xi)),
                  std::pow(r, static_cast<double>(k)) * uvball::harmonic_basis_eval(3, k, 1, xi), 1e-14);
    }
}

TEST(BallNorm, Examples) {
  for (int d : {2, 3, 4})
    for (double mu : {0.0, 0.5, 2.0}) EXPECT_REL(uvball::classical_norm_H(BallParams(d, mu, 0.0), {0, 0}), 1.0, 1e-14);
  EXPECT_REL(uvball::classical_norm_H(BallParams(2, 0.0, 0.0), {1, 0}), 0.5, 1e-14);
  EXPECT_REL(uvball::modified_norm_H(BallParams(2, 0.0, 1.0), {0, 0}), 2.0, 1e-14);
  // (1/4) h̃_0^{(0,1,4)} = (1/4)(h_0^{(0,1)} + 4) = (1/4)(2 + 4)
  EXPECT_REL(uvball::modified_norm_H(BallParams(2, 0.0, 1.0), {1, 0}), 1.5, 1e-14);
  for (long n = 0; n <= 8; ++n)
    for (long j = 0; 2 * j <= n; ++j)
      EXPECT_REL(uvball::modified_norm_H(BallParams(3, 0.5, 0.0), {n, j}), uvball::classical_norm_H(BallParams(3, 0.5, 0.0), {n, j}), 1e-14);
}

TEST(BallNorm, BothClosedFormsAgreeAtRandomIndices) {
  std::mt19937_64 rng(50);
  std::uniform_int_distribution<int> dim(2, 7), degree(0, 60);
  std::uniform_real_distribution<double> exponent(-0.9, 4.0);
  for (int i = 0; i < 50; ++i) {
    const BallParams bp(dim(rng), exponent(rng), 0.0);
    const long n = degree(rng);
    const long j = std::uniform_int_distribution<long>(0, n / 2)(rng);
    EXPECT_REL(uvball::detail::classical_norm_H_pochhammer(bp, {n, j}), uvball::detail::classical_norm_H_jacobi(bp, {n, j}), 1e-12);
  }
}

TEST(BallQuadrature, Examples) {
  for (int d : {2, 3}) {
    const auto rule = uvball::ball_quadrature(BallParams(d, 0.5, 0.0), 6, 6);
    double total = 0.0;
    for (double w : rule.weights) total += w;
    EXPECT_NEAR(total, 1.0, 1e-14);
  }
  // ω_0^{-1} ∫_disk x_1² dx = (1/π) ∫_0^1 r³ dr ∫ cos² θ dθ = 1/4
  const auto rule = uvball::ball_quadrature(BallParams(2, 0.0, 0.0), 4, 8);
  double acc = 0.0;
  for (std::size_t i = 0; i < rule.points.size(); ++i) {
    const double x1 = rule.points[i].cartesian()[0];
    acc += rule.weights[i] * x1 * x1;
  }
  EXPECT_NEAR(acc, 0.25, 1e-14);
  EXPECT_THROW(uvball::ball_quadrature(BallParams(4, 0.0, 0.0), 4, 4), uvball::unsupported_dimension);
}

TEST(BallBasis, GramMatricesAreDiagonal) {
  for (int d : {2, 3})
    for (double mu : {0.0, 0.5})
      for (double lambda : {0.5, 2.0}) {
        const BallParams bp(d, mu, lambda);
        const long angular = d == 2 ? 24 : 12;
        EXPECT_LE(uvball::oracle::gram_matrix_deviation(bp, 8, false, 12, angular), 1e-8);
        EXPECT_LE(uvball::oracle::gram_matrix_deviation(bp, 8, true, 12, angular), 1e-8);
      }
}

TEST(BallBasis, ClassicalGramToDegreeTen) {
  EXPECT_LE(uvball::oracle::gram_matrix_deviation(BallParams(2, 1.5, 0.0), 10, false, 12, 24), 1e-10);
}

TEST(BallBasis, CountMatchesPolynomialSpaceDimension) {
  for (int d : {2, 3})
    for (long n = 0; n <= 10; ++n)
      EXPECT_EQ(static_cast<std::int64_t>(uvball::oracle::ball_basis_indices(d, n).size()),
                uvball::detail::exact_binomial(n + d, d));
}

TEST(BallKernel, DegreeZero) {
  std::mt19937_64 rng(8);
  for (int d : {2, 3, 4, 7})
    for (double lambda : {0.0, 0.5, 1.0, 3.0}) {
      const BallParams bp(d, 0.5, lambda);
      const auto x = random_point(d, rng), y = random_point(d, rng);
      EXPECT_REL(uvball::ball_kernel(bp, 0, x, y), 1.0, 1e-13);
      EXPECT_REL(uvball::ball_kernel_modified(bp, 0, x, y), 1.0 / (1.0 + lambda), 1e-13);
      EXPECT_REL(uvball::christoffel(bp, 0, x, false), 1.0, 1e-13);
      EXPECT_REL(uvball::christoffel(bp, 0, x, true), 1.0 + lambda, 1e-13);
    }
}

TEST(BallKernel, SymmetricAndMasslessReductions) {
  std::mt19937_64 rng(9);
  for (int d : {2, 3, 5})
    for (int i = 0; i < 20; ++i) {
      const auto x = random_point(d, rng), y = random_point(d, rng);
      const BallParams bp(d, 0.5, 1.5);
      const long n = 1 + i % 12;
      EXPECT_NEAR(uvball::ball_kernel(bp, n, x, y), uvball::ball_kernel(bp, n, y, x), 1e-12 * scale(bp, n, x, y, false));
      EXPECT_NEAR(uvball::ball_kernel_modified(bp, n, x, y), uvball::ball_kernel_modified(bp, n, y, x),
                  1e-12 * scale(bp, n, x, y, true));
      const BallParams massless = bp.with_lambda(0.0);
      EXPECT_EQ(uvball::ball_kernel_modified(massless, n, x, y), uvball::ball_kernel(massless, n, x, y));
      EXPECT_EQ(uvball::ball_kernel_difference(massless, n, x, y), 0.0);
    }
}

TEST(BallKernel, MatchesBasisSums) {
  std::mt19937_64 rng(77);
  for (int d : {2, 3})
    for (double mu : {0.0, 0.5})
      for (double lambda : {0.5, 2.0})
        for (int i = 0; i < 8; ++i) {
          const BallParams bp(d, mu, lambda);
          const auto x = random_point(d, rng), y = random_point(d, rng);
          const long n = i;
          EXPECT_LE(std::fabs(uvball::ball_kernel(bp, n, x, y) - uvball::oracle::ball_kernel_basis_sum(bp, n, x, y, false)),
                    1e-9 * scale(bp, n, x, y, false));
          EXPECT_LE(std::fabs(uvball::ball_kernel_modified(bp, n, x, y) - uvball::oracle::ball_kernel_basis_sum(bp, n, x, y, true)),
                    1e-9 * scale(bp, n, x, y, true));
        }
}

TEST(BallKernel, MatchesBasisSumsOnSphereAndAtOrigin) {
  std::mt19937_64 rng(78);
  for (int d : {2, 3}) {
    const BallParams bp(d, 0.5, 1.0);
    const BallPoint origin(0.0, UnitDirection::pole(d));
    for (int i = 0; i < 5; ++i) {
      const BallPoint s1(1.0, uvball::testing::random_direction(d, rng));
      const BallPoint s2(1.0, uvball::testing::random_direction(d, rng));
      const auto inner = random_point(d, rng);
      for (long n : {1L, 4L, 8L})
        for (const auto& [x, y] : std::vector<std::pair<BallPoint, BallPoint>>{{s1, s2}, {s1, inner}, {origin, s1}, {origin, origin}, {s1, s1}}) {
          EXPECT_LE(std::fabs(uvball::ball_kernel_modified(bp, n, x, y) - uvball::oracle::ball_kernel_basis_sum(bp, n, x, y, true)),
                    1e-9 * scale(bp, n, x, y, true));
          EXPECT_LE(std::fabs(uvball::ball_kernel_difference(bp, n, x, y) -
                              (uvball::oracle::ball_kernel_basis_sum(bp, n, x, y, false) -
                               uvball::oracle::ball_kernel_basis_sum(bp, n, x, y, true))),
                    1e-9 * scale(bp, n, x, y, false));
        }
    }
  }
}

TEST(BallKernel, DifferenceEqualsSubtraction) {
  std::mt19937_64 rng(12);
  for (int d : {2, 3})
    for (long n = 0; n <= 30; n += 3) {
      const BallParams bp(d, 0.5, 1.0);
      const auto x = random_point(d, rng), y = random_point(d, rng);
      const auto kv = uvball::ball_kernels(bp, n, x, y);
      const auto kx = uvball::ball_kernels(bp, n, x, x), ky = uvball::ball_kernels(bp, n, y, y);
      EXPECT_LE(std::fabs(kv.difference - (kv.classical - kv.modified)),
                1e-8 * std::sqrt(kx.difference * ky.difference) + 1e-13 * std::sqrt(kx.classical * ky.classical));
    }
}

TEST(BallKernel, ReproducingProperty) {
  // <K~_n(x,·), p>_μ^λ = p(x) for p a random combination of Q-basis elements.
  std::mt19937_64 rng(404);
  std::normal_distribution<double> coeff;
  const int d = 2;
  for (double lambda : {0.5, 2.0}) {
    const BallParams bp(d, 0.5, lambda);
    for (long n : {2L, 5L, 8L}) {
      const auto basis = uvball::oracle::ball_basis_indices(d, n);
      std::vector<double> c(basis.size());
      for (double& v : c) v = coeff(rng);
      const auto p = [&](const BallPoint& z) {
        double acc = 0.0;
        for (std::size_t i = 0; i < basis.size(); ++i)
          acc += c[i] * uvball::modified_basis_eval(bp, {basis[i].n, basis[i].j}, basis[i].nu, z);
        return acc;
      };
      for (int i = 0; i < 20; ++i) {
        const auto x = random_point(d, rng);
        const double inner = uvball::ball_inner_product(
            bp, [&](const BallPoint& z) { return uvball::ball_kernel_modified(bp, n, x, z); }, p, n + 2, 2 * n + 4);
        EXPECT_NEAR(inner, p(x), 1e-7 * std::max(1.0, std::fabs(p(x))));
      }
    }
  }
}

TEST(BallKernel, TraceEqualsDimensionInAnyDimension) {
  // ∫ K_n(x,x) dμ = dim Π_n^d; with the mass, ∫ K~_n(x,x) dμ + λ K~_n(ξ,ξ) = dim Π_n^d.
  // K(x,x) depends only on r, so the ball integral is c ∫ K (1-t)^μ (1+t)^δ dt.
  for (int d : {2, 3, 4, 6})
    for (double lambda : {0.0, 0.7}) {
      const BallParams bp(d, 0.5, lambda);
      for (long n : {0L, 3L, 10L}) {
        const auto rule = uvball::gauss_jacobi_rule({bp.mu(), bp.delta()}, n + 2);
        const double interior = bp.c() * rule.integrate([&](double t) {
          const BallPoint x(std::sqrt(0.5 * (1.0 + t)), UnitDirection::pole(d));
          return uvball::ball_kernel_modified(bp, n, x, x);
        });
        const BallPoint s(1.0, UnitDirection::pole(d));
        const double total = interior + lambda * uvball::ball_kernel_modified(bp, n, s, s);
        EXPECT_REL(total, static_cast<double>(uvball::detail::exact_binomial(n + d, d)), 1e-11) << "d=" << d << " n=" << n;
      }
    }
}

TEST(BallKernel, DifferencePositiveOnGrid) {
  for (int d : {2, 3})
    for (double lambda : {0.1, 1.0, 5.0}) {
      const BallParams bp(d, 0.5, lambda);
      for (int i = 0; i <= 10; ++i) {
        const BallPoint x(0.1 * i, UnitDirection::pole(d));
        for (long n : {0L, 1L, 7L, 40L, 100L}) EXPECT_GT(uvball::ball_kernel_difference(bp, n, x, x), 0.0);
      }
    }
}

TEST(BallKernel, DiagonalNondecreasingInN) {
  std::mt19937_64 rng(15);
  for (int d : {2, 3}) {
    const BallParams bp(d, 0.0, 1.0);
    for (int i = 0; i < 10; ++i) {
      const auto x = random_point(d, rng);
      double prev_c = 0.0, prev_m = 0.0, prev_lambda = 0.0;
      for (long n = 0; n <= 25; ++n) {
        const auto kv = uvball::ball_kernels(bp, n, x, x);
        EXPECT_GE(kv.classical, prev_c);
        EXPECT_GE(kv.modified, prev_m);
        const double lambda = uvball::christoffel(bp, n, x, true);
        if (n > 0) EXPECT_LE(lambda, prev_lambda);
        prev_c = kv.classical;
        prev_m = kv.modified;
        prev_lambda = lambda;
      }
    }
  }
}

TEST(BallKernel, LargeDegreeOnSphereStaysFinite) {
  const BallParams bp(3, 0.5, 1.0);
  const BallPoint s(1.0, UnitDirection::pole(3));
  const BallPoint inner(0.999, UnitDirection::pole(3));
  const auto kv = uvball::ball_kernels(bp, 1500, s, inner);
  EXPECT_TRUE(std::isfinite(kv.classical));
  EXPECT_TRUE(std::isfinite(kv.modified));
  EXPECT_GT(uvball::ball_kernel_modified(bp, 1500, s, s), 0.0);
}

TEST(BallKernel, RejectsMismatchedInput) {
  const BallParams bp(3, 0.0, 1.0);
  const BallPoint x2(0.5, UnitDirection::pole(2));
  const BallPoint x3(0.5, UnitDirection::pole(3));
  EXPECT_THROW(uvball::ball_kernel(bp, 2, x2, x3), uvball::parameter_error);
  EXPECT_THROW(uvball::ball_kernel(bp, -1, x3, x3), uvball::parameter_error);
  EXPECT_THROW(uvball::classical_basis_eval(BallParams(4, 0.0, 0.0), {1, 0}, 1, BallPoint(0.5, UnitDirection::pole(4))),
               uvball::unsupported_dimension);
}

}  // namespace
