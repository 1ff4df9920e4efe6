#pragma once

// Property suites run by `uvball verify`. Each check compares a library
// routine with an independent oracle and reports the worst error seen.

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "uvball/asymptotics.hpp"
#include "uvball/ball.hpp"
#include "uvball/jacobi.hpp"
#include "uvball/oracle.hpp"
#include "uvball/uvarov.hpp"

namespace uvball::verify {

struct CheckResult {
  std::string name;
  double error = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
  }
};

struct Options {
  std::optional<double> tolerance;  // overrides every identity tolerance
  double convergence_tolerance = 0.05;
};

namespace detail {

inline CheckResult check(std::string name, double error, double default_tol, const Options& opt) {
  const double tol = opt.tolerance.value_or(default_tol);
  return {std::move(name), error, tol, error <= tol};
}

// A check whose pass/fail is a boolean property; error is reported as 0 or 1.
inline CheckResult holds(std::string name, bool ok) { return {std::move(name), ok ? 0.0 : 1.0, 0.0, ok}; }

inline double rel(double a, double b) { return std::fabs(a - b) / std::fabs(b); }

inline std::vector<BallPoint> random_points(int d, int count, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  std::uniform_real_distribution<double> unit;
  std::vector<BallPoint> out;
  for (int i = 0; i < count; ++i) {
    std::vector<double> v(static_cast<std::size_t>(d));
    for (double& c : v) c = normal(rng);
    out.emplace_back(std::pow(unit(rng), 1.0 / d), UnitDirection::normalized(std::move(v)));
  }
  return out;
}

}  // namespace detail

inline SuiteReport jacobi_suite(const Options& opt = {}) {
  SuiteReport rep{"jacobi", {}};
  const std::vector<JacobiParams> params{{0.0, 0.0}, {0.5, 0.0}, {0.0, 1.5}, {2.0, 3.0}};

  double ortho = 0.0;
  for (const auto& p : params) {
    const QuadratureRule rule = gauss_jacobi_rule(p, 45);
    for (long i = 0; i <= 40; ++i)
      for (long j = 0; j <= i; ++j) {
        const double g = rule.integrate([&](double t) { return jacobi_eval(p, i, t) * jacobi_eval(p, j, t); });
        const double expected = i == j ? jacobi_norm(p, i) : 0.0;
        ortho = std::max(ortho, std::fabs(g - expected) / std::sqrt(jacobi_norm(p, i) * jacobi_norm(p, j)));
      }
  }
  rep.checks.push_back(detail::check("orthogonality (P_i, P_j) = h_i delta_ij, i,j <= 40", ortho, 1e-9, opt));

  double at_one = 0.0;
  for (const auto& p : params)
    for (long n = 0; n <= 200; ++n)
      at_one = std::max(at_one, detail::rel(jacobi_eval(p, n, 1.0),
                                            std::exp(log_binomial(static_cast<double>(n) + p.alpha(), n))));
  rep.checks.push_back(detail::check("P_n(1) = C(n+alpha, n), n <= 200", at_one, 1e-11, opt));

  double cd = 0.0;
  for (const auto& p : params)
    for (long n = 0; n <= 100; n += 3)
      for (int i = 0; i <= 100; ++i) {
        const double t = -1.0 + 0.02 * i;
        const double scale = std::sqrt(jacobi_kernel(p, n, t, t) * jacobi_kernel_one_one(p, n));
        cd = std::max(cd, std::fabs(jacobi_kernel_at_one(p, n, t) - jacobi_kernel(p, n, t, 1.0)) / scale);
      }
  rep.checks.push_back(detail::check("closed-form K_n(t,1) = summed kernel, n <= 100", cd, 1e-10, opt));

  double mass = 0.0;
  for (const auto& p : params) {
    const QuadratureRule rule = gauss_jacobi_rule(p, 30);
    double total = 0.0;
    for (double w : rule.weights) total += w;
    mass = std::max(mass, detail::rel(total, jacobi_norm(p, 0)));
  }
  rep.checks.push_back(detail::check("Gauss-Jacobi weights sum to the weight's mass", mass, 1e-12, opt));
  return rep;
}

inline SuiteReport uvarov_suite(const Options& opt = {}) {
  SuiteReport rep{"uvarov", {}};
  const std::vector<JacobiParams> params{{0.0, 0.0}, {0.5, 1.5}};
  const std::vector<double> masses{0.1, 1.0, 10.0};
  constexpr long kmax = 30;

  double gram = 0.0, norms = 0.0, at_one = 0.0, kernel = 0.0, one_one = 0.0;
  for (const auto& p : params)
    for (double m : masses) {
      const UvarovParams u(p, m);
      const auto g = oracle::uvarov_mass_gram(u, kmax, kmax + 5);
      for (long i = 0; i <= kmax; ++i) {
        const auto ui = static_cast<std::size_t>(i);
        const double hi = uvarov_norm(u, i);
        norms = std::max(norms, detail::rel(g[ui][ui], hi));
        for (long j = 0; j < i; ++j)
          gram = std::max(gram, std::fabs(g[ui][static_cast<std::size_t>(j)]) / std::sqrt(hi * uvarov_norm(u, j)));
        at_one = std::max(at_one, detail::rel(uvarov_eval(u, i, 1.0), uvarov_value_at_one(u, i)));
      }

      // q_j / sqrt(h_j) on the grid; kernel sums are running totals over j
      constexpr int grid = 21;
      std::vector<std::vector<double>> scaled(kmax + 1, std::vector<double>(grid));
      for (long j = 0; j <= kmax; ++j) {
        const double root_h = std::sqrt(uvarov_norm(u, j));
        for (int a = 0; a < grid; ++a) scaled[j][a] = uvarov_eval(u, j, -1.0 + 0.1 * a) / root_h;
      }
      std::vector<double> sum(grid * grid, 0.0);
      long done = -1;
      for (long k : {0L, 1L, 5L, 12L, 30L}) {
        one_one = std::max(one_one, detail::rel(uvarov_kernel_one_one(u, k), oracle::uvarov_kernel_sum(u, k, 1.0, 1.0)));
        for (; done < k; ++done)
          for (int a = 0; a < grid; ++a)
            for (int b = 0; b < grid; ++b) sum[a * grid + b] += scaled[done + 1][a] * scaled[done + 1][b];
        for (int a = 0; a < grid; ++a)
          for (int b = 0; b < grid; ++b) {
            const double t = -1.0 + 0.1 * a, s = -1.0 + 0.1 * b;
            const double scale = std::sqrt(sum[a * grid + a] * sum[b * grid + b]);
            kernel = std::max(kernel, std::fabs(uvarov_kernel(u, k, t, s) - sum[a * grid + b]) / scale);
          }
      }
    }
  rep.checks.push_back(detail::check("orthogonality of q_k under (.,.)^M, k <= 30", gram, 1e-9, opt));
  rep.checks.push_back(detail::check("norm formula = (q_k, q_k)^M", norms, 1e-9, opt));
  rep.checks.push_back(detail::check("q_k(1) closed form = q_k evaluated at 1", at_one, 1e-9, opt));
  rep.checks.push_back(detail::check("rank-one kernel = sum of q_j q_j / h_j (21x21 grid)", kernel, 1e-9, opt));
  rep.checks.push_back(detail::check("K~_k(1,1) closed form = kernel sum at (1,1)", one_one, 1e-9, opt));
  return rep;
}

inline SuiteReport ball_suite(const Options& opt = {}) {
  SuiteReport rep{"ball", {}};
  double gram = 0.0;
  for (int d : {2, 3})
    for (double mu : {0.0, 0.5})
      for (double lambda : {0.5, 2.0}) {
        const BallParams bp(d, mu, lambda);
        gram = std::max(gram, oracle::gram_matrix_deviation(bp, 8, false, 12, d == 2 ? 24 : 12));
        gram = std::max(gram, oracle::gram_matrix_deviation(bp, 8, true, 12, d == 2 ? 24 : 12));
      }
  rep.checks.push_back(detail::check("Gram matrices of P and Q bases are diagonal H / H~, n <= 8", gram, 1e-8, opt));

  std::mt19937_64 rng(20160731);
  double repr = 0.0, diff = 0.0;
  bool positive = true;
  for (int d : {2, 3}) {
    const BallParams bp(d, 0.5, 1.5);
    const auto xs = detail::random_points(d, 10, rng);
    const auto ys = detail::random_points(d, 10, rng);
    for (std::size_t i = 0; i < xs.size(); ++i)
      for (long n : {0L, 3L, 8L}) {
        const auto kv = ball_kernels(bp, n, xs[i], ys[i]);
        const auto kx = ball_kernels(bp, n, xs[i], xs[i]);
        const auto ky = ball_kernels(bp, n, ys[i], ys[i]);
        repr = std::max(repr, std::fabs(kv.classical - oracle::ball_kernel_basis_sum(bp, n, xs[i], ys[i], false)) /
                                  std::sqrt(kx.classical * ky.classical));
        repr = std::max(repr, std::fabs(kv.modified - oracle::ball_kernel_basis_sum(bp, n, xs[i], ys[i], true)) /
                                  std::sqrt(kx.modified * ky.modified));
        const double sub = oracle::ball_kernel_basis_sum(bp, n, xs[i], ys[i], false) -
                           oracle::ball_kernel_basis_sum(bp, n, xs[i], ys[i], true);
        diff = std::max(diff, std::fabs(kv.difference - sub) / std::sqrt(kx.difference * ky.difference));
        positive = positive && kx.difference > 0.0;
      }
  }
  rep.checks.push_back(detail::check("Gegenbauer-reduced kernels = basis sums", repr, 1e-9, opt));
  rep.checks.push_back(detail::check("rank-one difference formula = basis-sum subtraction", diff, 1e-8, opt));
  rep.checks.push_back(detail::holds("K_n(x,x) - K~_n(x,x) > 0 for lambda > 0", positive));

  double zero = 0.0;
  for (double lambda : {0.0, 0.5, 1.0, 2.0})
    for (int d : {2, 3, 4, 5}) {
      const BallParams bp(d, 0.25, lambda);
      const BallPoint x(0.6, UnitDirection::pole(d));
      zero = std::max(zero, detail::rel(ball_kernel_modified(bp, 0, x, x), 1.0 / (1.0 + lambda)));
    }
  rep.checks.push_back(detail::check("K~_0 = 1 / (1 + lambda)", zero, 1e-12, opt));
  return rep;
}

inline SuiteReport asymptotics_suite(const Options& opt = {}) {
  SuiteReport rep{"asymptotics", {}};
  const double conv = opt.convergence_tolerance;

  double worst_boundary = 0.0;
  bool decreasing = true;
  for (int d : {2, 3})
    for (double mu : {0.0, 0.5})
      for (double lambda : {0.5, 1.0, 2.0}) {
        const BallParams bp(d, mu, lambda);
        const double target = 2.0 / lambda;
        const double e_late = detail::rel(boundary_ratio(bp, 10000), target);
        const double e_early = detail::rel(boundary_ratio(bp, 2500), target);
        worst_boundary = std::max(worst_boundary, e_late);
        decreasing = decreasing && e_late < e_early;
      }
  rep.checks.push_back({"boundary ratio within tolerance of 2/lambda at n = 10^4", worst_boundary, conv,
                        worst_boundary < conv});
  rep.checks.push_back(detail::holds("boundary relative error decreases from n = 2500 to 10^4", decreasing));

  double closed_vs_sum = 0.0;
  for (int d : {2, 3}) {
    const BallParams bp(d, 0.5, 1.0);
    const BallPoint x(1.0, UnitDirection::pole(d));
    for (long n : {0L, 1L, 7L, 50L, 200L}) {
      const double direct = ball_kernel_modified(bp, n, x, x) / std::exp(log_binomial(static_cast<double>(n + d - 1), n));
      closed_vs_sum = std::max(closed_vs_sum, detail::rel(boundary_ratio(bp, n), direct));
    }
  }
  rep.checks.push_back(detail::check("O(n) boundary reduction = kernel evaluation at |x| = 1", closed_vs_sum, 1e-8, opt));

  const BallParams interior(2, 0.5, 1.0);
  const BallPoint x(0.5, UnitDirection::pole(2));
  const double target = interior_limit_target(interior, 0.5);
  const double e500 = detail::rel(interior_ratio(interior, 500, x), target);
  const double e1000 = detail::rel(interior_ratio(interior, 1000, x), target);
  rep.checks.push_back({"interior ratio within tolerance (d=2, mu=0.5, r=0.5, n=1000)", e1000, conv, e1000 < conv});
  rep.checks.push_back(detail::holds("interior relative error decreases from n = 500", e1000 < e500));

  const double s100 = lemma6_grid_supremum(0.5, 0.0, 100);
  const double s200 = lemma6_grid_supremum(0.5, 0.0, 200);
  rep.checks.push_back({"radial kernel bound supremum grows < 10% from n = 100 to 200", s200 / s100 - 1.0, 0.10,
                        std::isfinite(s200) && s200 <= 1.10 * s100});
  return rep;
}

inline std::vector<SuiteReport> run_suites(const std::string& which, const Options& opt = {}) {
  std::vector<SuiteReport> out;
  const bool all = which == "all";
  if (all || which == "jacobi") out.push_back(jacobi_suite(opt));
  if (all || which == "uvarov") out.push_back(uvarov_suite(opt));
  if (all || which == "ball") out.push_back(ball_suite(opt));
  if (all || which == "asymptotics") out.push_back(asymptotics_suite(opt));
  if (out.empty()) throw parameter_error("unknown suite '" + which + "' (all|jacobi|uvarov|ball|asymptotics)");
  return out;
}

}  // namespace uvball::verify
