#pragma once

// Explicit real spherical harmonics for d = 2 and d = 3, orthonormal for the
// normalized surface measure σ_{d-1}^{-1} dσ. They serve as brute-force
// oracles for the addition-formula reduction used by the kernels.
//
// Index order: d = 2 has ν = 1 -> √2 cos kθ, ν = 2 -> √2 sin kθ (k >= 1);
// d = 3 has ν = 1..2k+1 <-> azimuthal m = ν-1-k = -k..k, with m < 0 the sine
// and m > 0 the cosine family. No Condon-Shortley phase.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "uvball/errors.hpp"
#include "uvball/jacobi.hpp"
#include "uvball/specfun.hpp"

namespace uvball {

/// A point of the unit sphere S^{d-1} ⊂ R^d.
class UnitDirection {
public:
  /// Validates |coords| = 1 to 1e-12.
  explicit UnitDirection(std::vector<double> coords) : coords_(std::move(coords)) {
    if (coords_.size() < 2) throw parameter_error("UnitDirection needs d >= 2");
    const double norm = std::sqrt(std::inner_product(coords_.begin(), coords_.end(), coords_.begin(), 0.0));
    if (std::fabs(norm - 1.0) > 1e-12)
      throw parameter_error("UnitDirection coordinates must have unit norm (got " + std::to_string(norm) + ")");
  }

  /// Rescales an arbitrary non-zero vector onto the sphere.
  static UnitDirection normalized(std::vector<double> v) {
    const double norm = std::sqrt(std::inner_product(v.begin(), v.end(), v.begin(), 0.0));
    if (!(norm > 0.0)) throw parameter_error("cannot normalize a zero vector");
    for (double& c : v) c /= norm;
    return UnitDirection(std::move(v), 0);
  }

  /// e_1 in R^d.
  static UnitDirection pole(int d) {
    if (d < 2) throw parameter_error("UnitDirection needs d >= 2");
    std::vector<double> v(static_cast<std::size_t>(d), 0.0);
    v[0] = 1.0;
    return UnitDirection(std::move(v), 0);
  }

  static UnitDirection from_angle(double theta) {
    return UnitDirection({std::cos(theta), std::sin(theta)}, 0);
  }

  /// Polar angle θ from the x_3 axis, azimuth φ.
  static UnitDirection from_angles(double theta, double phi) {
    return UnitDirection({std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)}, 0);
  }

  int dim() const { return static_cast<int>(coords_.size()); }
  std::span<const double> coords() const { return coords_; }
  double operator[](std::size_t i) const { return coords_[i]; }

  double dot(const UnitDirection& other) const {
    if (other.dim() != dim()) throw parameter_error("directions of different dimension");
    const double s = std::inner_product(coords_.begin(), coords_.end(), other.coords_.begin(), 0.0);
    return std::clamp(s, -1.0, 1.0);
  }

private:
  UnitDirection(std::vector<double> coords, int) : coords_(std::move(coords)) {}
  std::vector<double> coords_;
};

namespace detail {

inline void require_harmonic_index(int d, long k, long nu) {
  if (d != 2 && d != 3) throw unsupported_dimension(d);
  if (k < 0) throw parameter_error("harmonic degree must be >= 0");
  const long count = static_cast<long>(harmonic_dim(k, d));
  if (nu < 1 || nu > count)
    throw parameter_error("harmonic index nu = " + std::to_string(nu) + " out of range [1, " +
                          std::to_string(count) + "] for degree " + std::to_string(k));
}

inline std::complex<double> complex_power(std::complex<double> z, long k) {
  std::complex<double> acc(1.0, 0.0);
  for (long i = 0; i < k; ++i) acc *= z;
  return acc;
}

// P_k^m(z) / (1-z²)^{m/2}, a polynomial in z, times sqrt((2k+1)(k-m)!/(k+m)!).
inline double reduced_legendre(long k, long m, double z) {
  double pmm = 1.0;
  for (long i = 1; i <= m; ++i) pmm *= static_cast<double>(2 * i - 1);
  double value = pmm;
  if (k > m) {
    double prev = pmm;
    double cur = z * static_cast<double>(2 * m + 1) * pmm;
    for (long l = m + 2; l <= k; ++l) {
      const double next = (static_cast<double>(2 * l - 1) * z * cur - static_cast<double>(l + m - 1) * prev) /
                          static_cast<double>(l - m);
      prev = cur;
      cur = next;
    }
    value = cur;
  }
  const double log_norm = 0.5 * (std::log(2.0 * k + 1.0) + log_gamma(static_cast<double>(k - m + 1)) -
                                 log_gamma(static_cast<double>(k + m + 1)));
  return value * std::exp(log_norm);
}

}  // namespace detail

/// Y_ν^k(ξ), the ν-th element of the fixed orthonormal basis of H_k^d.
inline double harmonic_basis_eval(int d, long k, long nu, const UnitDirection& xi) {
  detail::require_harmonic_index(d, k, nu);
  if (xi.dim() != d) throw parameter_error("direction dimension does not match d");
  if (k == 0) return 1.0;
  const double sqrt2 = std::numbers::sqrt2;
  if (d == 2) {
    // (ξ1 + iξ2)^k = e^{ikθ}
    const std::complex<double> w = detail::complex_power({xi[0], xi[1]}, k);
    return sqrt2 * (nu == 1 ? w.real() : w.imag());
  }
  const long m = nu - 1 - k;
  const long am = std::labs(m);
  const double legendre = detail::reduced_legendre(k, am, xi[2]);
  if (m == 0) return legendre;
  // sin^{|m|}θ e^{i|m|φ} = (ξ1 + iξ2)^{|m|}
  const std::complex<double> w = detail::complex_power({xi[0], xi[1]}, am);
  return sqrt2 * legendre * (m > 0 ? w.real() : w.imag());
}

/// Σ_ν Y_ν^k(ξ) Y_ν^k(ρ) by explicit summation.
inline double addition_sum(int d, long k, const UnitDirection& xi, const UnitDirection& rho) {
  detail::require_harmonic_index(d, k, 1);
  const long count = static_cast<long>(harmonic_dim(k, d));
  double acc = 0.0;
  for (long nu = 1; nu <= count; ++nu) acc += harmonic_basis_eval(d, k, nu, xi) * harmonic_basis_eval(d, k, nu, rho);
  return acc;
}

/// Rule on S^{d-1} for the normalized surface measure (weights sum to 1).
struct SphereRule {
  std::vector<UnitDirection> points;
  std::vector<double> weights;
};

/// d = 2: trapezoid with `azimuthal` nodes. d = 3: Gauss-Legendre in cos θ
/// with `polar` nodes times a trapezoid in φ with `azimuthal` nodes.
inline SphereRule sphere_rule(int d, long polar, long azimuthal) {
  if (d != 2 && d != 3) throw unsupported_dimension(d);
  if (azimuthal < 1 || (d == 3 && polar < 1)) throw parameter_error("sphere_rule needs positive node counts");
  SphereRule rule;
  const double dphi = 2.0 * std::numbers::pi / static_cast<double>(azimuthal);
  if (d == 2) {
    for (long i = 0; i < azimuthal; ++i) {
      rule.points.push_back(UnitDirection::from_angle(dphi * static_cast<double>(i)));
      rule.weights.push_back(1.0 / static_cast<double>(azimuthal));
    }
    return rule;
  }
  const QuadratureRule gl = gauss_jacobi_rule(JacobiParams(0.0, 0.0), polar);
  for (std::size_t a = 0; a < gl.size(); ++a) {
    const double z = gl.nodes[a];
    const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
    for (long i = 0; i < azimuthal; ++i) {
      const double phi = dphi * static_cast<double>(i);
      rule.points.push_back(UnitDirection::normalized({rho * std::cos(phi), rho * std::sin(phi), z}));
      rule.weights.push_back(0.5 * gl.weights[a] / static_cast<double>(azimuthal));
    }
  }
  return rule;
}

}  // namespace uvball
