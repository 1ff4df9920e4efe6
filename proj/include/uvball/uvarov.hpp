#pragma once

// Uvarov modification of the Jacobi weight by a point mass M at t = 1:
//   (f,g)^M = ∫ f g (1-t)^α (1+t)^β dt + M f(1) g(1).
// Polynomials q_k share the leading coefficient of P_k^{(α,β)}; everything is
// a rank-one correction of the classical objects through K_{k}(·,1).

#include <cmath>
#include <limits>

#include "uvball/errors.hpp"
#include "uvball/jacobi.hpp"
#include "uvball/specfun.hpp"

namespace uvball {

class UvarovParams {
public:
  UvarovParams(JacobiParams base, double mass) : base_(base), log_mass_(0.0) {
    if (!(mass >= 0.0) || std::isinf(mass))
      throw parameter_error("Uvarov mass must be finite and >= 0");
    log_mass_ = mass == 0.0 ? -std::numeric_limits<double>::infinity() : std::log(mass);
  }

  // Masses too large for a double (M_k = λ 2^k / c for large k).
  UvarovParams(JacobiParams base, LogValue mass) : base_(base), log_mass_(mass.log_magnitude()) {
    if (mass.sign() < 0) throw parameter_error("Uvarov mass must be >= 0");
  }

  const JacobiParams& base() const { return base_; }
  double mass() const { return std::exp(log_mass_); }
  double log_mass() const { return log_mass_; }
  bool massless() const { return log_mass_ == -std::numeric_limits<double>::infinity(); }

private:
  JacobiParams base_;
  double log_mass_;
};

namespace detail {

// ln(M K_{k}(1,1)); -inf for M = 0 or k < 0 (K_{-1} ≡ 0).
inline double log_mass_times_kernel(const UvarovParams& u, long k) {
  if (k < 0 || u.massless()) return -std::numeric_limits<double>::infinity();
  return u.log_mass() + log_jacobi_kernel_one_one(u.base(), k).log_magnitude();
}

// M K / (1 + M K) formed as 1 / (1 + 1/(M K)).
inline double uvarov_correction_factor(const UvarovParams& u, long k) {
  const double x = log_mass_times_kernel(u, k);
  if (x == -std::numeric_limits<double>::infinity()) return 0.0;
  return inv_one_plus_exp(-x);
}

}  // namespace detail

/// q_k(1) = P_k(1) / (1 + M K_{k-1}(1,1)).
inline double uvarov_value_at_one(const UvarovParams& u, long k) {
  detail::require_degree(k);
  const double log_p1 = log_binomial(static_cast<double>(k) + u.base().alpha(), k);
  return std::exp(log_p1 - log1p_exp(detail::log_mass_times_kernel(u, k - 1)));
}

/// q_k(t) = P_k(t) - [M P_k(1) / (1 + M K_{k-1}(1,1))] K_{k-1}(1,t).
inline double uvarov_eval(const UvarovParams& u, long k, double t) {
  detail::require_degree(k);
  const JacobiParams& p = u.base();
  if (k == 0 || u.massless()) return jacobi_eval(p, k, t);
  // M K_{k-1}(1,t) / (1 + M K_{k-1}(1,1)) = f · K_{k-1}(1,t)/K_{k-1}(1,1), and the
  // kernel quotient reduces to P_{k-1}^{(α+1,β)}(t) / P_{k-1}^{(α+1,β)}(1).
  // With c = P_k(1) / P_{k-1}^{(α+1,β)}(1),
  //   P_k - c P_{k-1}^{(α+1,β)} = -((k+α+β+1)/(2k)) (1-t) P_{k-1}^{(α+2,β)},
  // so q_k = that residual + (1-f) c P_{k-1}^{(α+1,β)} avoids cancelling P_k
  // against f c P_{k-1}^{(α+1,β)} near t = 1 when f -> 1.
  const double a = p.alpha(), b = p.beta(), kd = static_cast<double>(k);
  const double one_minus_f = std::exp(-log1p_exp(detail::log_mass_times_kernel(u, k - 1)));
  const double log_c = log_binomial(kd + a, k) - log_binomial(kd - 1.0 + a + 1.0, k - 1);
  const double residual =
      -(kd + a + b + 1.0) / (2.0 * kd) * (1.0 - t) * jacobi_eval(JacobiParams(a + 2.0, b), k - 1, t);
  return residual + one_minus_f * std::exp(log_c) * jacobi_eval(JacobiParams(a + 1.0, b), k - 1, t);
}

/// h̃_k = (q_k, q_k)^M = h_k (1 + M K_k(1,1)) / (1 + M K_{k-1}(1,1)); h̃_0 = h_0 + M.
inline double uvarov_norm(const UvarovParams& u, long k) {
  detail::require_degree(k);
  return std::exp(log_jacobi_norm(u.base(), k) + log1p_exp(detail::log_mass_times_kernel(u, k)) -
                  log1p_exp(detail::log_mass_times_kernel(u, k - 1)));
}

/// K̃_k(1,1) = K_k(1,1) / (1 + M K_k(1,1)); bounded by 1/M.
inline double uvarov_kernel_one_one(const UvarovParams& u, long k) {
  detail::require_degree(k);
  const double log_k = log_jacobi_kernel_one_one(u.base(), k).log_magnitude();
  return std::exp(log_k - log1p_exp(detail::log_mass_times_kernel(u, k)));
}

/// K̃_k(t,s) = K_k(t,s) - M K_k(1,t) K_k(1,s) / (1 + M K_k(1,1)).
inline double uvarov_kernel(const UvarovParams& u, long k, double t, double s) {
  detail::require_degree(k);
  const JacobiParams& p = u.base();
  if (u.massless()) return jacobi_kernel(p, k, t, s);
  if (t == 1.0 && s == 1.0) return uvarov_kernel_one_one(u, k);
  const double damp = std::exp(-log1p_exp(detail::log_mass_times_kernel(u, k)));
  // On the mass point the correction collapses: K̃(1,s) = K(1,s) / (1 + M K(1,1)).
  if (t == 1.0) return jacobi_kernel_at_one(p, k, s) * damp;
  if (s == 1.0) return jacobi_kernel_at_one(p, k, t) * damp;
  const double f = detail::uvarov_correction_factor(u, k);
  const double k11 = jacobi_kernel_one_one(p, k);
  return jacobi_kernel(p, k, t, s) -
         f * jacobi_kernel_at_one(p, k, t) * jacobi_kernel_at_one(p, k, s) / k11;
}

}  // namespace uvball
