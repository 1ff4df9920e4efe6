#pragma once

// Scale-safe special-function primitives and the normalization constants of
// the ball weight. Every Gamma ratio downstream is formed as a difference of
// log_gamma values and exponentiated once.

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <string>

#include "uvball/errors.hpp"

namespace uvball {

/// A real number stored as sign and natural log of its magnitude. The log is
/// kept as e·ln 2 + ln m with integer e and |ln m| < ln 2, so a round trip
/// through from_value / value loses nothing beyond the last bit.
class LogValue {
public:
  constexpr LogValue() = default;

  static LogValue from_log(double log_magnitude, int sign = 1) {
    if (sign == 0 || log_magnitude == -std::numeric_limits<double>::infinity()) return LogValue{};
    const double e = std::floor(log_magnitude / std::numbers::ln2);
    return make(sign > 0 ? 1 : -1, e, log_magnitude - e * std::numbers::ln2);
  }

  static LogValue from_value(double x) {
    if (x == 0.0) return LogValue{};
    int e = 0;
    const double m = std::frexp(std::fabs(x), &e);
    return make(x > 0 ? 1 : -1, static_cast<double>(e), std::log(m));
  }

  static LogValue zero() { return LogValue{}; }

  int sign() const { return sign_; }
  double log_magnitude() const {
    return sign_ == 0 ? -std::numeric_limits<double>::infinity() : exp2_ * std::numbers::ln2 + frac_;
  }
  double value() const {
    if (sign_ == 0) return 0.0;
    if (exp2_ > 4096.0) return sign_ * std::numeric_limits<double>::infinity();
    if (exp2_ < -4096.0) return sign_ * 0.0;
    return sign_ * std::ldexp(std::exp(frac_), static_cast<int>(exp2_));
  }
  bool is_zero() const { return sign_ == 0; }

  friend LogValue operator*(LogValue a, LogValue b) {
    if (a.sign_ == 0 || b.sign_ == 0) return LogValue{};
    return make(a.sign_ * b.sign_, a.exp2_ + b.exp2_, a.frac_ + b.frac_);
  }

  friend LogValue operator/(LogValue a, LogValue b) {
    if (b.sign_ == 0) throw numeric_error("LogValue division by zero");
    if (a.sign_ == 0) return LogValue{};
    return make(a.sign_ * b.sign_, a.exp2_ - b.exp2_, a.frac_ - b.frac_);
  }

  LogValue pow(double e) const {
    if (sign_ < 0) throw numeric_error("LogValue::pow of a negative value");
    if (sign_ == 0) return e == 0.0 ? from_log(0.0) : LogValue{};
    return from_log(e * log_magnitude());
  }

private:
  static LogValue make(int sign, double exp2, double frac) {
    const double shift = std::floor(frac / std::numbers::ln2);
    LogValue v;
    v.sign_ = sign;
    v.exp2_ = exp2 + shift;
    v.frac_ = frac - shift * std::numbers::ln2;
    return v;
  }

  int sign_ = 0;
  double exp2_ = 0.0;  // integer valued
  double frac_ = 0.0;  // ln of the mantissa, in [0, ln 2)
};

/// ln(1 + e^x) without overflow; the argument may be -inf.
inline double log1p_exp(double x) {
  if (x == -std::numeric_limits<double>::infinity()) return 0.0;
  if (x > 35.0) return x + std::exp(-x);
  return std::log1p(std::exp(x));
}

/// 1 / (1 + e^x), exact at both limits.
inline double inv_one_plus_exp(double x) { return std::exp(-log1p_exp(x)); }

inline double log_gamma(double x) {
  if (!(x > 0.0)) throw parameter_error("log_gamma requires x > 0, got " + std::to_string(x));
#if defined(__GLIBC__)
  int sign = 0;
  return ::lgamma_r(x, &sign);
#else
  return std::lgamma(x);
#endif
}

/// ln (a)_m = ln Γ(a+m) - ln Γ(a) for a > 0.
inline double log_pochhammer(double a, double m) { return log_gamma(a + m) - log_gamma(a); }

/// ln C(n, k) for real n >= 0. For integer n < k the binomial is zero and
/// -inf is returned.
inline double log_binomial(double n, std::int64_t k) {
  if (!(n > -1.0)) throw parameter_error("log_binomial requires n > -1");
  if (k < 0) throw parameter_error("log_binomial requires k >= 0");
  const double kd = static_cast<double>(k);
  const double rest = n - kd + 1.0;
  if (rest <= 0.0) {
    if (n == std::floor(n)) return -std::numeric_limits<double>::infinity();
    throw parameter_error("log_binomial: n - k + 1 must be positive for non-integer n");
  }
  return log_gamma(n + 1.0) - log_gamma(kd + 1.0) - log_gamma(rest);
}

/// ln ω_μ, the integral of (1-|x|²)^μ over the unit ball of R^d.
inline double log_omega_mu(double mu, int d) {
  detail::require(mu > -1.0, "omega_mu requires mu > -1");
  detail::require(d >= 2, "omega_mu requires d >= 2");
  const double half_d = 0.5 * d;
  return half_d * std::log(std::numbers::pi) + log_gamma(mu + 1.0) - log_gamma(mu + 1.0 + half_d);
}

inline double omega_mu(double mu, int d) { return std::exp(log_omega_mu(mu, d)); }

/// ln σ_{d-1}, the surface area of the unit sphere in R^d.
inline double log_sigma_sphere(int d) {
  detail::require(d >= 2, "sigma_sphere requires d >= 2");
  const double half_d = 0.5 * d;
  return std::log(2.0) + half_d * std::log(std::numbers::pi) - log_gamma(half_d);
}

inline double sigma_sphere(int d) { return std::exp(log_sigma_sphere(d)); }

/// ln c_μ^d = ln σ_{d-1} - ln ω_μ - (μ + d/2 + 1) ln 2.
inline double log_c_mu_d(double mu, int d) {
  detail::require(mu > -1.0, "c_mu_d requires mu > -1");
  detail::require(d >= 2, "c_mu_d requires d >= 2");
  return log_sigma_sphere(d) - log_omega_mu(mu, d) - (mu + 0.5 * d + 1.0) * std::log(2.0);
}

inline double c_mu_d(double mu, int d) { return std::exp(log_c_mu_d(mu, d)); }

namespace detail {

// Exact C(m, j) with the convention C(m, j) = 0 for m < 0 or j > m.
inline std::int64_t exact_binomial(std::int64_t m, std::int64_t j) {
  if (m < 0 || j < 0 || j > m) return 0;
  if (j > m - j) j = m - j;
  __int128 acc = 1;
  for (std::int64_t i = 1; i <= j; ++i) {
    acc = acc * (m - j + i) / i;
    if (acc > std::numeric_limits<std::int64_t>::max())
      throw numeric_error("exact_binomial overflows 64 bits");
  }
  return static_cast<std::int64_t>(acc);
}

}  // namespace detail

/// Dimension of the space of spherical harmonics of degree k in d variables.
inline std::int64_t harmonic_dim(std::int64_t k, int d) {
  detail::require(k >= 0, "harmonic_dim requires k >= 0");
  detail::require(d >= 2, "harmonic_dim requires d >= 2");
  return detail::exact_binomial(k + d - 1, d - 1) - detail::exact_binomial(k + d - 3, d - 1);
}

}  // namespace uvball
