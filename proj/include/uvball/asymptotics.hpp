#pragma once

// Christoffel-function asymptotics for the mass-modified ball kernel:
//   boundary  (|x| = 1):  𝕂̃_n(x,x) / C(n+d-1, n)  ->  2/λ
//   interior  (|x| < 1):  𝕂̃_n(x,x) / C(n+d, d)    ->  Γ(μ+1)Γ((d+1)/2) / (√π Γ(μ+d/2+1)) (1-|x|²)^{-1/2-μ}
// plus boundedness probes for the 𝕂 - 𝕂̃ bound and the uniform radial kernel
// bound. Every routine here requires μ >= -1/2.

#include <algorithm>
#include <cmath>
#include <future>
#include <numbers>
#include <string>
#include <vector>

#include "uvball/ball.hpp"
#include "uvball/errors.hpp"
#include "uvball/jacobi.hpp"
#include "uvball/specfun.hpp"

namespace uvball {

struct ConvergenceRecord {
  long n = 0;
  int d = 0;
  double mu = 0.0;
  double lambda = 0.0;
  double r = 0.0;
  double ratio = 0.0;
  double target = 0.0;
  double abs_err = 0.0;
  double rel_err = 0.0;

  static ConvergenceRecord make(long n, const BallParams& bp, double r, double ratio, double target) {
    const double abs_err = std::fabs(ratio - target);
    return {n, bp.d(), bp.mu(), bp.lambda(), r, ratio, target, abs_err, abs_err / std::fabs(target)};
  }
};

namespace detail {

inline void require_asymptotic_range(const BallParams& bp) {
  if (bp.mu() < -0.5) throw parameter_error("asymptotic routines require mu >= -1/2");
}

}  // namespace detail

/// 𝕂̃_n(x,x) / C(n+d-1, n) at |x| = 1 in O(n):
///   𝕂̃_n(x,x) = Σ_k 2^k K_m(1,1) / (c + λ 2^k K_m(1,1)) · a_k^d,  m = ⌊(n-k)/2⌋,
/// where a_k^d = ((k+δ)/δ) C(k+d-3, k) for d >= 3 and a_k^2 = 2 - [k = 0].
inline double boundary_ratio(const BallParams& bp, long n) {
  detail::require_asymptotic_range(bp);
  if (!(bp.lambda() > 0.0)) throw parameter_error("boundary_ratio requires lambda > 0");
  if (n < 0) throw parameter_error("boundary_ratio requires n >= 0");
  const double c = bp.c(), lambda = bp.lambda(), delta = bp.delta();
  const int d = bp.d();
  std::vector<double> terms(static_cast<std::size_t>(n) + 1);
  for (long k = 0; k <= n; ++k) {
    const long m = (n - k) / 2;
    const double kd = static_cast<double>(k);
    const double log_2kK =
        kd * std::log(2.0) + log_jacobi_kernel_one_one(JacobiParams(bp.mu(), kd + delta), m).log_magnitude();
    const double radial = 1.0 / (c * std::exp(-log_2kK) + lambda);
    double multiplicity;
    if (d == 2)
      multiplicity = k == 0 ? 1.0 : 2.0;
    else
      multiplicity = (kd + delta) / delta * std::exp(log_binomial(kd + d - 3.0, k));
    terms[static_cast<std::size_t>(k)] = radial * multiplicity;
  }
  const double normalizer = std::exp(log_binomial(static_cast<double>(n + d - 1), n));
  return detail::pairwise_sum(terms) / normalizer;
}

/// The interior limit Γ(μ+1)Γ((d+1)/2) / (√π Γ(μ+d/2+1)) · (1-r²)^{-1/2-μ}.
inline double interior_limit_target(const BallParams& bp, double r) {
  detail::require_asymptotic_range(bp);
  if (!(r >= 0.0 && r < 1.0)) throw domain_error("interior limit requires 0 <= r < 1");
  const double mu = bp.mu(), d = bp.d();
  const double log_const = -0.5 * std::log(std::numbers::pi) + log_gamma(mu + 1.0) + log_gamma(0.5 * (d + 1.0)) -
                           log_gamma(mu + 0.5 * d + 1.0);
  return std::exp(log_const + (-0.5 - mu) * std::log1p(-r * r));
}

/// 𝕂̃_n(x,x) / C(n+d, d) for |x| < 1; O(n²).
inline double interior_ratio(const BallParams& bp, long n, const BallPoint& x) {
  detail::require_asymptotic_range(bp);
  if (!(x.r() < 1.0)) throw domain_error("interior_ratio requires |x| < 1");
  const double normalizer = std::exp(log_binomial(static_cast<double>(n + bp.d()), bp.d()));
  return ball_kernel_modified(bp, n, x, x) / normalizer;
}

/// [𝕂_n(x,x) - 𝕂̃_n(x,x)] / [n^{d-1} log n (2(1-r²) + 4/n²)^{-μ-1/2} (2r² + 4/n²)^{-δ-1/2}].
inline double difference_bound_check(const BallParams& bp, long n, const BallPoint& x) {
  detail::require_asymptotic_range(bp);
  const double r = x.r();
  if (!(r > 0.0 && r < 1.0)) throw domain_error("difference_bound_check requires 0 < |x| < 1");
  if (n < 2) throw parameter_error("difference_bound_check requires n >= 2");
  const double nd = static_cast<double>(n);
  const double eps = 4.0 / (nd * nd);
  const double log_bound = (bp.d() - 1.0) * std::log(nd) + std::log(std::log(nd)) +
                           (-bp.mu() - 0.5) * std::log(2.0 * (1.0 - r * r) + eps) +
                           (-bp.delta() - 0.5) * std::log(2.0 * r * r + eps);
  return ball_kernel_difference(bp, n, x, x) * std::exp(-log_bound);
}

/// K_m^{(μ,k+δ)}(t,t) divided by
///   (1+t)^{-k} (N+1) (1-t+(N+1)^{-2})^{-μ-1/2} (1+t+(N+1)^{-2})^{-δ-1/2},  N = ⌊n/2⌋,
/// with m = ⌊(n-k)/2⌋ >= 1 and t in (-1, 1]. The factor (1+t)^k is carried
/// inside the orthonormal recurrence so large k never overflows.
inline double lemma6_bound_check(double mu, double delta, long n, long k, double t) {
  if (!(mu > -1.0) || !(delta >= 0.0)) throw parameter_error("lemma6_bound_check requires mu > -1, delta >= 0");
  if (k < 0) throw parameter_error("lemma6_bound_check requires k >= 0");
  const long m = (n - k) / 2;
  if (m < 1 || n - k < 0) throw parameter_error("lemma6_bound_check requires floor((n-k)/2) >= 1");
  if (!(t > -1.0 && t <= 1.0)) throw domain_error("lemma6_bound_check requires t in (-1, 1]");
  const double kd = static_cast<double>(k);
  const auto scaled = scaled_orthonormal_sequence(JacobiParams(mu, kd + delta), m, t, 0.5 * kd * std::log1p(t));
  double lhs = 0.0;
  for (double v : scaled) lhs += v * v;
  const double big_n = static_cast<double>(n / 2) + 1.0;
  const double eps = 1.0 / (big_n * big_n);
  const double log_rhs =
      std::log(big_n) + (-mu - 0.5) * std::log(1.0 - t + eps) + (-delta - 0.5) * std::log(1.0 + t + eps);
  return lhs * std::exp(-log_rhs);
}

/// Supremum of lemma6_bound_check over k in [0, n-2] and t_i = -1 + 2i/t_count, i = 1..t_count.
inline double lemma6_grid_supremum(double mu, double delta, long n, int t_count = 41) {
  if (n < 2) throw parameter_error("lemma6 grid needs n >= 2");
  double sup = 0.0;
  for (long k = 0; k + 2 <= n; ++k)
    for (int i = 1; i <= t_count; ++i) {
      const double t = -1.0 + 2.0 * i / t_count;
      sup = std::max(sup, lemma6_bound_check(mu, delta, n, k, t));
    }
  return sup;
}

// ---------------------------------------------------------------------------
// Sweeps

enum class SweepKind { boundary, interior };

struct SweepConfig {
  SweepKind kind = SweepKind::boundary;
  BallParams params{2, 0.0, 1.0};
  double r = 1.0;  // interior sweeps evaluate at r e_1
  std::vector<long> schedule;
};

/// n_max, n_max/2, n_max/4, ... down to n_min, in ascending order.
inline std::vector<long> geometric_schedule(long n_max, long n_min = 125) {
  if (n_max < 1) throw parameter_error("n_max must be >= 1");
  std::vector<long> out;
  for (long n = n_max; n >= n_min; n /= 2) out.push_back(n);
  if (out.empty()) out.push_back(n_max);
  std::reverse(out.begin(), out.end());
  return out;
}

inline ConvergenceRecord sweep_row(const SweepConfig& config, long n) {
  const BallParams& bp = config.params;
  if (config.kind == SweepKind::boundary) {
    return ConvergenceRecord::make(n, bp, 1.0, boundary_ratio(bp, n), 2.0 / bp.lambda());
  }
  const BallPoint x(config.r, UnitDirection::pole(bp.d()));
  return ConvergenceRecord::make(n, bp, config.r, interior_ratio(bp, n, x), interior_limit_target(bp, config.r));
}

/// One record per schedule entry, in schedule order. Rows are computed
/// concurrently; each row is a deterministic function of (config, n).
inline std::vector<ConvergenceRecord> run_sweep(const SweepConfig& config) {
  detail::require_asymptotic_range(config.params);
  if (config.kind == SweepKind::boundary && !(config.params.lambda() > 0.0))
    throw parameter_error("boundary sweep requires lambda > 0");
  if (config.kind == SweepKind::interior && !(config.r >= 0.0 && config.r < 1.0))
    throw domain_error("interior sweep requires 0 <= r < 1");
  for (long n : config.schedule)
    if (n < 0) throw parameter_error("schedule entries must be >= 0");

  std::vector<std::future<ConvergenceRecord>> rows;
  rows.reserve(config.schedule.size());
  for (long n : config.schedule) rows.push_back(std::async(std::launch::async, sweep_row, std::cref(config), n));
  std::vector<ConvergenceRecord> out;
  out.reserve(rows.size());
  for (auto& row : rows) out.push_back(row.get());
  return out;
}

struct SweepVerdict {
  bool passed = false;
  double final_rel_err = 0.0;
  double reference_rel_err = 0.0;  // the half-n row (or the previous row)
  std::string reason;
};

/// Passes when the last row is within `tol` and improves on the row at half
/// its n (the preceding row when no such row exists).
inline SweepVerdict evaluate_sweep(const std::vector<ConvergenceRecord>& records, double tol) {
  SweepVerdict v;
  if (records.empty()) {
    v.reason = "empty schedule";
    return v;
  }
  const ConvergenceRecord& last = records.back();
  v.final_rel_err = last.rel_err;
  const ConvergenceRecord* reference = records.size() > 1 ? &records[records.size() - 2] : nullptr;
  for (const auto& rec : records)
    if (2 * rec.n == last.n) reference = &rec;
  v.reference_rel_err = reference ? reference->rel_err : last.rel_err;
  if (!(last.rel_err < tol)) {
    v.reason = "final relative error " + std::to_string(last.rel_err) + " exceeds tolerance " + std::to_string(tol);
    return v;
  }
  if (reference && !(last.rel_err < reference->rel_err)) {
    v.reason = "relative error did not decrease from n = " + std::to_string(reference->n);
    return v;
  }
  v.passed = true;
  return v;
}

}  // namespace uvball
