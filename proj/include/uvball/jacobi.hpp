#pragma once

// Classical Jacobi polynomials P_n^{(α,β)} on [-1, 1]: evaluation, norms,
// reproducing kernels, the closed forms at t = 1, and Gauss-Jacobi rules.

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

#include "uvball/errors.hpp"
#include "uvball/specfun.hpp"

namespace uvball {

/// Exponents of the weight (1-t)^α (1+t)^β; both must exceed -1.
class JacobiParams {
public:
  JacobiParams(double alpha, double beta) : alpha_(alpha), beta_(beta) {
    if (!(alpha > -1.0) || !(beta > -1.0))
      throw parameter_error("Jacobi exponents must satisfy alpha, beta > -1 (got " +
                            std::to_string(alpha) + ", " + std::to_string(beta) + ")");
  }

  double alpha() const { return alpha_; }
  double beta() const { return beta_; }

  friend bool operator==(const JacobiParams&, const JacobiParams&) = default;

private:
  double alpha_;
  double beta_;
};

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  std::size_t size() const { return nodes.size(); }

  template <class F>
  double integrate(F&& f) const {
    double acc = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) acc += weights[i] * f(nodes[i]);
    return acc;
  }
};

namespace detail {

inline void require_degree(long n) {
  if (n < 0) throw parameter_error("polynomial degree must be >= 0");
}

// Monic recurrence p_{k+1} = (t - a_k) p_k - b_k p_{k-1}.
inline double jacobi_recurrence_a(const JacobiParams& p, long k) {
  const double a = p.alpha(), b = p.beta();
  const double s = 2.0 * k + a + b;
  if (k == 0) return (b - a) / (a + b + 2.0);
  return (b * b - a * a) / (s * (s + 2.0));
}

inline double jacobi_recurrence_b(const JacobiParams& p, long k) {
  const double a = p.alpha(), b = p.beta();
  if (k == 1) return 4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + a + b) * (2.0 + a + b) * (3.0 + a + b));
  const double kd = static_cast<double>(k);
  const double s = 2.0 * kd + a + b;
  return 4.0 * kd * (kd + a) * (kd + b) * (kd + a + b) / (s * s * (s + 1.0) * (s - 1.0));
}

// ln of the total mass ∫(1-t)^α(1+t)^β dt.
inline double log_jacobi_moment0(const JacobiParams& p) {
  const double a = p.alpha(), b = p.beta();
  return (a + b + 1.0) * std::log(2.0) + log_gamma(a + 1.0) + log_gamma(b + 1.0) -
         log_gamma(a + b + 2.0);
}

}  // namespace detail

/// ln h_n^{(α,β)}, the squared L² norm of P_n^{(α,β)}.
inline double log_jacobi_norm(const JacobiParams& p, long n) {
  detail::require_degree(n);
  const double a = p.alpha(), b = p.beta();
  const double nd = static_cast<double>(n);
  // (2n+α+β+1) Γ(n+α+β+1) collapses to Γ(α+β+2) at n = 0 (also when α+β = -1).
  const double denom = n == 0 ? log_gamma(a + b + 2.0)
                              : std::log(2.0 * nd + a + b + 1.0) + log_gamma(nd + a + b + 1.0);
  return (a + b + 1.0) * std::log(2.0) + log_gamma(nd + a + 1.0) + log_gamma(nd + b + 1.0) -
         log_gamma(nd + 1.0) - denom;
}

inline double jacobi_norm(const JacobiParams& p, long n) { return std::exp(log_jacobi_norm(p, n)); }

/// P_n^{(α,β)}(t) with P_n(1) = C(n+α, n).
inline double jacobi_eval(const JacobiParams& p, long n, double t) {
  detail::require_degree(n);
  const double a = p.alpha(), b = p.beta();
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = 0.5 * ((a + b + 2.0) * t + (a - b));
  for (long k = 2; k <= n; ++k) {
    const double kd = static_cast<double>(k);
    const double s = 2.0 * kd + a + b;
    const double c0 = 2.0 * kd * (kd + a + b) * (s - 2.0);
    const double c1 = (s - 1.0) * (s * (s - 2.0) * t + a * a - b * b);
    const double c2 = 2.0 * (kd + a - 1.0) * (kd + b - 1.0) * s;
    const double next = (c1 * cur - c2 * prev) / c0;
    prev = cur;
    cur = next;
  }
  return cur;
}

/// Values exp(log_scale) * p_j(t), j = 0..m, for the orthonormal Jacobi
/// polynomials p_j = P_j / sqrt(h_j). The recurrence runs on a rescaled
/// mantissa so that neither the scale nor intermediate values overflow; a
/// scaled value below the double range comes out as 0.
inline std::vector<double> scaled_orthonormal_sequence(const JacobiParams& p, long m, double t,
                                                       double log_scale = 0.0) {
  detail::require_degree(m);
  std::vector<double> out(static_cast<std::size_t>(m) + 1, 0.0);
  if (log_scale == -std::numeric_limits<double>::infinity()) return out;

  constexpr double big = 1e150;
  constexpr double log_big = 345.38776394910684;  // ln 1e150
  double log_factor = log_scale - 0.5 * log_jacobi_norm(p, 0);

  auto emit = [&](long j, double v) {
    out[static_cast<std::size_t>(j)] =
        v == 0.0 ? 0.0 : std::copysign(std::exp(std::log(std::fabs(v)) + log_factor), v);
  };

  double prev = 0.0;
  double cur = 1.0;
  emit(0, cur);
  double sqrt_b_cur = 0.0;
  for (long j = 0; j < m; ++j) {
    const double sqrt_b_next = std::sqrt(detail::jacobi_recurrence_b(p, j + 1));
    const double next = ((t - detail::jacobi_recurrence_a(p, j)) * cur - sqrt_b_cur * prev) / sqrt_b_next;
    prev = cur;
    cur = next;
    sqrt_b_cur = sqrt_b_next;
    const double mag = std::max(std::fabs(cur), std::fabs(prev));
    if (mag > big) {
      cur /= big;
      prev /= big;
      log_factor += log_big;
    } else if (mag < 1.0 / big && mag > 0.0) {
      cur *= big;
      prev *= big;
      log_factor -= log_big;
    }
    emit(j + 1, cur);
  }
  return out;
}

/// p_n(t) = P_n(t) / sqrt(h_n), unit norm in the Jacobi inner product.
inline double jacobi_eval_orthonormal(const JacobiParams& p, long n, double t) {
  return scaled_orthonormal_sequence(p, n, t).back();
}

/// K_n(t,u) = Σ_{k<=n} P_k(t) P_k(u) / h_k, summed with orthonormal values.
inline double jacobi_kernel(const JacobiParams& p, long n, double t, double u) {
  const auto pt = scaled_orthonormal_sequence(p, n, t);
  const auto pu = t == u ? pt : scaled_orthonormal_sequence(p, n, u);
  double acc = 0.0;
  for (std::size_t k = 0; k < pt.size(); ++k) acc += pt[k] * pu[k];
  return acc;
}

/// ln of the prefactor 2^{-α-β-1} Γ(n+α+β+2) / (Γ(α+1) Γ(n+β+1)) of K_n(t,1).
inline double log_jacobi_kernel_at_one_prefactor(const JacobiParams& p, long n) {
  detail::require_degree(n);
  const double a = p.alpha(), b = p.beta();
  const double nd = static_cast<double>(n);
  return -(a + b + 1.0) * std::log(2.0) - log_gamma(a + 1.0) + log_gamma(nd + a + b + 2.0) -
         log_gamma(nd + b + 1.0);
}

/// K_n(t, 1) in closed form: a single P_n^{(α+1,β)} evaluation.
inline double jacobi_kernel_at_one(const JacobiParams& p, long n, double t) {
  const JacobiParams shifted(p.alpha() + 1.0, p.beta());
  return std::exp(log_jacobi_kernel_at_one_prefactor(p, n)) * jacobi_eval(shifted, n, t);
}

/// K_n(1, 1) in closed form, as a LogValue (it grows like n^{2α+2}).
inline LogValue log_jacobi_kernel_one_one(const JacobiParams& p, long n) {
  const double nd = static_cast<double>(n);
  const double a = p.alpha();
  return LogValue::from_log(log_jacobi_kernel_at_one_prefactor(p, n) + log_gamma(nd + a + 2.0) -
                            log_gamma(nd + 1.0) - log_gamma(a + 2.0));
}

inline double jacobi_kernel_one_one(const JacobiParams& p, long n) {
  return log_jacobi_kernel_one_one(p, n).value();
}

namespace detail {

// Christoffel-Darboux quotient for K_n(t,u), t != u. Numerically delicate
// as u -> t; the summed form jacobi_kernel is the default path.
inline double jacobi_kernel_christoffel_darboux(const JacobiParams& p, long n, double t, double u) {
  if (t == u) throw parameter_error("Christoffel-Darboux quotient requires t != u");
  const auto pt = scaled_orthonormal_sequence(p, n + 1, t);
  const auto pu = scaled_orthonormal_sequence(p, n + 1, u);
  const auto N = static_cast<std::size_t>(n);
  const double ratio = std::sqrt(jacobi_recurrence_b(p, n + 1));  // γ_n / γ_{n+1}
  return ratio * (pt[N + 1] * pu[N] - pt[N] * pu[N + 1]) / (t - u);
}

}  // namespace detail

/// n-node Gauss-Jacobi rule from the eigen-decomposition of the Jacobi matrix.
inline QuadratureRule gauss_jacobi_rule(const JacobiParams& p, long n) {
  if (n < 1) throw parameter_error("gauss_jacobi_rule requires n >= 1");
  Eigen::VectorXd diag(n);
  Eigen::VectorXd sub(n - 1);
  for (long k = 0; k < n; ++k) diag(k) = detail::jacobi_recurrence_a(p, k);
  for (long k = 1; k < n; ++k) sub(k - 1) = std::sqrt(detail::jacobi_recurrence_b(p, k));

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success)
    throw numeric_error("Gauss-Jacobi eigen-solver did not converge for n = " + std::to_string(n));

  const double m0 = std::exp(detail::log_jacobi_moment0(p));
  QuadratureRule rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i) {
    const double v0 = solver.eigenvectors()(0, i);
    rule.nodes[static_cast<std::size_t>(i)] = solver.eigenvalues()(i);
    rule.weights[static_cast<std::size_t>(i)] = m0 * v0 * v0;
  }
  return rule;
}

}  // namespace uvball
