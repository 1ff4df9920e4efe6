#pragma once

// Gegenbauer/Chebyshev evaluation and the addition-formula factor
//   Σ_ν Y_ν^k(ξ) Y_ν^k(ρ) = F_k^d(<ξ,ρ>).

#include <cmath>
#include <vector>

#include "uvball/errors.hpp"

namespace uvball {

/// Degree, dimension and half-dimension shift of one spherical factor.
struct SphericalFactorParams {
  int d;
  long k;
  double delta() const { return 0.5 * (d - 2); }
};

inline double gegenbauer_eval(double delta, long k, double s) {
  if (!(delta > 0.0)) throw parameter_error("gegenbauer_eval requires delta > 0 (use chebyshev_eval)");
  if (k < 0) throw parameter_error("gegenbauer_eval requires k >= 0");
  if (k == 0) return 1.0;
  double prev = 1.0;
  double cur = 2.0 * delta * s;
  for (long j = 2; j <= k; ++j) {
    const double jd = static_cast<double>(j);
    const double next = (2.0 * s * (jd + delta - 1.0) * cur - (jd + 2.0 * delta - 2.0) * prev) / jd;
    prev = cur;
    cur = next;
  }
  return cur;
}

/// T_k(s) by the three-term recurrence (avoids arccos conditioning near ±1).
inline double chebyshev_eval(long k, double s) {
  if (k < 0) throw parameter_error("chebyshev_eval requires k >= 0");
  if (k == 0) return 1.0;
  double prev = 1.0;
  double cur = s;
  for (long j = 2; j <= k; ++j) {
    const double next = 2.0 * s * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

/// F_k^d(s) for k = 0..n in one recurrence pass.
///   d >= 3: ((k+δ)/δ) C_k^δ(s);   d = 2: 2 T_k(s) for k >= 1 and 1 for k = 0.
/// The k = 0, d = 2 value is the harmonic dimension a_0^2 = 1, not the δ -> 0
/// limit 2 T_0.
inline std::vector<double> spherical_factor_sequence(int d, long n, double s) {
  if (d < 2) throw parameter_error("spherical_factor requires d >= 2");
  if (n < 0) return {};
  std::vector<double> out(static_cast<std::size_t>(n) + 1);
  out[0] = 1.0;
  if (n == 0) return out;
  if (d == 2) {
    double prev = 1.0, cur = s;
    out[1] = 2.0 * s;
    for (long k = 2; k <= n; ++k) {
      const double next = 2.0 * s * cur - prev;
      prev = cur;
      cur = next;
      out[static_cast<std::size_t>(k)] = 2.0 * cur;
    }
    return out;
  }
  const double delta = 0.5 * (d - 2);
  double prev = 1.0, cur = 2.0 * delta * s;
  out[1] = (1.0 + delta) / delta * cur;
  for (long k = 2; k <= n; ++k) {
    const double kd = static_cast<double>(k);
    const double next = (2.0 * s * (kd + delta - 1.0) * cur - (kd + 2.0 * delta - 2.0) * prev) / kd;
    prev = cur;
    cur = next;
    out[static_cast<std::size_t>(k)] = (kd + delta) / delta * cur;
  }
  return out;
}

inline double spherical_factor(int d, long k, double s) {
  if (k < 0) throw parameter_error("spherical_factor requires k >= 0");
  return spherical_factor_sequence(d, k, s).back();
}

}  // namespace uvball
