#pragma once

// Orthogonal polynomials and reproducing kernels on the unit ball B^d for
//   <f,g>_μ^λ = ω_μ^{-1} ∫_B f g (1-|x|²)^μ dx + λ σ_{d-1}^{-1} ∫_S f g dσ.
//
// Kernels are evaluated through the Gegenbauer reduction
//   K_n(x,y) = (1/c_μ^d) Σ_k K^{(μ,k+δ)}_{⌊(n-k)/2⌋}(2r²-1, 2s²-1) (2rs)^k F_k(<ξ,ρ>)
// with the radial kernel accumulated as Σ_j R_j(r) R_j(s), where
// R_j(r) = (√2 r)^k p_j^{(μ,k+δ)}(2r²-1) stays polynomially bounded in k.
// The mass enters as one rank-one correction per harmonic degree k.

#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "uvball/errors.hpp"
#include "uvball/gegenbauer.hpp"
#include "uvball/harmonics.hpp"
#include "uvball/jacobi.hpp"
#include "uvball/specfun.hpp"
#include "uvball/uvarov.hpp"

namespace uvball {

/// Dimension d >= 2, ball exponent μ > -1 and sphere mass λ >= 0.
class BallParams {
public:
  BallParams(int d, double mu, double lambda) : d_(d), mu_(mu), lambda_(lambda) {
    detail::require(d >= 2, "ball dimension must satisfy d >= 2");
    detail::require(mu > -1.0, "ball exponent must satisfy mu > -1");
    detail::require(lambda >= 0.0 && std::isfinite(lambda), "sphere mass must satisfy lambda >= 0");
  }

  int d() const { return d_; }
  double mu() const { return mu_; }
  double lambda() const { return lambda_; }
  double delta() const { return 0.5 * (d_ - 2); }
  double log_c() const { return log_c_mu_d(mu_, d_); }
  double c() const { return c_mu_d(mu_, d_); }

  BallParams with_lambda(double lambda) const { return {d_, mu_, lambda}; }

private:
  int d_;
  double mu_;
  double lambda_;
};

/// x = r ξ with r in [0, 1]. The direction is irrelevant at r = 0.
class BallPoint {
public:
  BallPoint(double r, UnitDirection xi) : r_(r), xi_(std::move(xi)) {
    if (!(r >= 0.0 && r <= 1.0)) throw domain_error("ball point radius must lie in [0, 1]");
  }

  /// Cartesian input. |x| > 1 + 1e-12 is rejected; |x| in (1 - 1e-12, 1 + 1e-12]
  /// is snapped onto the sphere.
  static BallPoint from_cartesian(std::span<const double> x) {
    if (x.size() < 2) throw parameter_error("ball point needs at least 2 coordinates");
    const double r = std::sqrt(std::inner_product(x.begin(), x.end(), x.begin(), 0.0));
    if (r > 1.0 + 1e-12) throw domain_error("point lies outside the closed unit ball (|x| = " + std::to_string(r) + ")");
    if (r == 0.0) return BallPoint(0.0, UnitDirection::pole(static_cast<int>(x.size())));
    std::vector<double> v(x.begin(), x.end());
    const double radius = r > 1.0 - 1e-12 ? 1.0 : r;
    return BallPoint(radius, UnitDirection::normalized(std::move(v)));
  }

  double r() const { return r_; }
  const UnitDirection& xi() const { return xi_; }
  int dim() const { return xi_.dim(); }
  /// t = 2r² - 1, the radial Jacobi variable.
  double t() const { return 2.0 * r_ * r_ - 1.0; }

  std::vector<double> cartesian() const {
    std::vector<double> out(xi_.coords().begin(), xi_.coords().end());
    for (double& c : out) c *= r_;
    return out;
  }

private:
  double r_;
  UnitDirection xi_;
};

/// Total degree n and radial index j, 0 <= 2j <= n; k = n - 2j is the
/// harmonic degree.
struct RadialIndex {
  long n;
  long j;

  RadialIndex(long n_, long j_) : n(n_), j(j_) {
    if (n < 0 || j < 0 || 2 * j > n) throw parameter_error("radial index requires 0 <= 2j <= n");
  }
  long k() const { return n - 2 * j; }
  double beta(int d) const { return static_cast<double>(k()) + 0.5 * (d - 2); }
};

namespace detail {

inline void require_point(const BallParams& bp, const BallPoint& x) {
  if (x.dim() != bp.d()) throw parameter_error("point dimension does not match d");
}

inline JacobiParams radial_params(const BallParams& bp, long k) {
  return JacobiParams(bp.mu(), static_cast<double>(k) + bp.delta());
}

// Pairwise reduction; the result does not depend on how terms were produced.
inline double pairwise_sum(std::span<const double> v) {
  if (v.size() <= 8) {
    double acc = 0.0;
    for (double x : v) acc += x;
    return acc;
  }
  const std::size_t half = v.size() / 2;
  return pairwise_sum(v.first(half)) + pairwise_sum(v.subspan(half));
}

}  // namespace detail

/// ln M_k for M_k = λ 2^k / c_μ^d (as a LogValue; zero when λ = 0).
inline LogValue log_mass_for_harmonic_degree(const BallParams& bp, long k) {
  detail::require(k >= 0, "harmonic degree must be >= 0");
  if (bp.lambda() == 0.0) return LogValue::zero();
  return LogValue::from_log(std::log(bp.lambda()) + static_cast<double>(k) * std::log(2.0) - bp.log_c());
}

inline double mass_for_harmonic_degree(const BallParams& bp, long k) {
  return log_mass_for_harmonic_degree(bp, k).value();
}

/// The univariate Uvarov parameters (μ, k+δ, M_k) attached to harmonic degree k.
inline UvarovParams radial_uvarov_params(const BallParams& bp, long k) {
  return UvarovParams(detail::radial_params(bp, k), log_mass_for_harmonic_degree(bp, k));
}

// ---------------------------------------------------------------------------
// Bases (explicit harmonics, d = 2 and d = 3)

/// P^n_{j,ν}(x) = P_j^{(μ,β_k)}(2|x|²-1) r^k Y_ν^k(ξ).
inline double classical_basis_eval(const BallParams& bp, const RadialIndex& idx, long nu, const BallPoint& x) {
  detail::require_harmonic_index(bp.d(), idx.k(), nu);
  detail::require_point(bp, x);
  const long k = idx.k();
  return jacobi_eval(detail::radial_params(bp, k), idx.j, x.t()) * std::pow(x.r(), static_cast<double>(k)) *
         harmonic_basis_eval(bp.d(), k, nu, x.xi());
}

/// Q^n_{j,ν}(x) = q_j^{(μ,β_k,M_k)}(2|x|²-1) r^k Y_ν^k(ξ).
inline double modified_basis_eval(const BallParams& bp, const RadialIndex& idx, long nu, const BallPoint& x) {
  detail::require_harmonic_index(bp.d(), idx.k(), nu);
  detail::require_point(bp, x);
  const long k = idx.k();
  return uvarov_eval(radial_uvarov_params(bp, k), idx.j, x.t()) * std::pow(x.r(), static_cast<double>(k)) *
         harmonic_basis_eval(bp.d(), k, nu, x.xi());
}

namespace detail {

// (μ+1)_j (d/2)_{n-j} (n-j+μ+d/2) / (j! (μ+d/2+1)_{n-j} (n+μ+d/2))
inline double classical_norm_H_pochhammer(const BallParams& bp, const RadialIndex& idx) {
  const double mu = bp.mu(), hd = 0.5 * bp.d();
  const double n = static_cast<double>(idx.n), j = static_cast<double>(idx.j);
  return std::exp(log_pochhammer(mu + 1.0, j) + log_pochhammer(hd, n - j) + std::log(n - j + mu + hd) -
                  log_gamma(j + 1.0) - log_pochhammer(mu + hd + 1.0, n - j) - std::log(n + mu + hd));
}

// (c_μ^d / 2^k) h_j^{(μ,β_k)}
inline double classical_norm_H_jacobi(const BallParams& bp, const RadialIndex& idx) {
  return std::exp(bp.log_c() - static_cast<double>(idx.k()) * std::log(2.0) +
                  log_jacobi_norm(radial_params(bp, idx.k()), idx.j));
}

}  // namespace detail

/// H^n_j = <P^n_{j,ν}, P^n_{j,ν}>_μ (independent of ν). Both closed forms are
/// evaluated and must agree.
inline double classical_norm_H(const BallParams& bp, const RadialIndex& idx) {
  const double a = detail::classical_norm_H_pochhammer(bp, idx);
  const double b = detail::classical_norm_H_jacobi(bp, idx);
  if (std::fabs(a - b) > 1e-12 * std::fabs(b))
    throw numeric_error("ball norm cross-check failed: " + std::to_string(a) + " vs " + std::to_string(b));
  return b;
}

/// H̃^n_j = (c_μ^d / 2^k) h̃_j^{(μ,β_k,M_k)}.
inline double modified_norm_H(const BallParams& bp, const RadialIndex& idx) {
  return std::exp(bp.log_c() - static_cast<double>(idx.k()) * std::log(2.0)) *
         uvarov_norm(radial_uvarov_params(bp, idx.k()), idx.j);
}

// ---------------------------------------------------------------------------
// Kernels

/// 𝕂_n, 𝕂̃_n and 𝕂_n - 𝕂̃_n at one pair of points.
struct KernelValues {
  double classical = 0.0;
  double modified = 0.0;
  double difference = 0.0;
};

namespace detail {

struct RadialTerm {
  double classical;
  double modified;
  double difference;
};

// Radial factor of degree k, with (2rs)^k absorbed.
inline RadialTerm radial_term(const BallParams& bp, long n, long k, const BallPoint& x, const BallPoint& y) {
  const long m = (n - k) / 2;
  const JacobiParams p = radial_params(bp, k);
  const double kd = static_cast<double>(k);
  const bool massless = bp.lambda() == 0.0;
  const bool x_on_sphere = x.r() == 1.0;
  const bool y_on_sphere = y.r() == 1.0;

  double log_mk = -std::numeric_limits<double>::infinity();  // ln(M_k K_m(1,1))
  double log_k11 = 0.0;                                      // ln K_m(1,1)
  if (!massless || (x_on_sphere && y_on_sphere)) log_k11 = log_jacobi_kernel_one_one(p, m).log_magnitude();
  if (!massless) log_mk = log_mass_for_harmonic_degree(bp, k).log_magnitude() + log_k11;

  if (x_on_sphere && y_on_sphere) {
    // Σ_j R_j(1)² = 2^k K_m(1,1)
    const double log_cl = kd * std::log(2.0) + log_k11;
    const double cl = std::exp(log_cl);
    if (massless) return {cl, cl, 0.0};
    return {cl, std::exp(log_cl - log1p_exp(log_mk)), std::exp(log_cl - log1p_exp(-log_mk))};
  }

  auto log_scale = [&](const BallPoint& z) {
    if (k == 0) return 0.0;
    if (z.r() == 0.0) return -std::numeric_limits<double>::infinity();
    return 0.5 * kd * std::log1p(z.t());
  };
  const auto rx = scaled_orthonormal_sequence(p, m, x.t(), log_scale(x));
  const bool same = x.r() == y.r();
  const auto ry = same ? rx : scaled_orthonormal_sequence(p, m, y.t(), log_scale(y));
  double cl = 0.0;
  for (std::size_t j = 0; j < rx.size(); ++j) cl += rx[j] * ry[j];
  if (massless) return {cl, cl, 0.0};

  // Unit vector w_j = p_j(1) / sqrt(K_m(1,1)); G(z) = Σ_j R_j(z) w_j.
  const auto w = scaled_orthonormal_sequence(p, m, 1.0, -0.5 * log_k11);
  double gx = 0.0, gy = 0.0;
  for (std::size_t j = 0; j < w.size(); ++j) {
    gx += rx[j] * w[j];
    gy += ry[j] * w[j];
  }
  const double f = inv_one_plus_exp(-log_mk);  // M K / (1 + M K)
  const double diff = f * gx * gy;
  // On the sphere the rank-one correction collapses to a damping factor.
  const double modified = (x_on_sphere || y_on_sphere) ? cl * inv_one_plus_exp(log_mk) : cl - diff;
  return {cl, modified, diff};
}

}  // namespace detail

/// All three kernels at (x, y) in one O(n²) pass (O(n) when both lie on the sphere).
inline KernelValues ball_kernels(const BallParams& bp, long n, const BallPoint& x, const BallPoint& y) {
  if (n < 0) throw parameter_error("kernel degree must be >= 0");
  detail::require_point(bp, x);
  detail::require_point(bp, y);
  const auto factor = spherical_factor_sequence(bp.d(), n, x.xi().dot(y.xi()));
  std::vector<double> cl(static_cast<std::size_t>(n) + 1), mod(cl.size()), diff(cl.size());
  for (long k = 0; k <= n; ++k) {
    const auto i = static_cast<std::size_t>(k);
    if (k > 0 && (x.r() == 0.0 || y.r() == 0.0)) {
      cl[i] = mod[i] = diff[i] = 0.0;
      continue;
    }
    const auto term = detail::radial_term(bp, n, k, x, y);
    cl[i] = term.classical * factor[i];
    mod[i] = term.modified * factor[i];
    diff[i] = term.difference * factor[i];
  }
  const double inv_c = std::exp(-bp.log_c());
  return {inv_c * detail::pairwise_sum(cl), inv_c * detail::pairwise_sum(mod), inv_c * detail::pairwise_sum(diff)};
}

/// 𝕂_n(x,y) for <·,·>_μ.
inline double ball_kernel(const BallParams& bp, long n, const BallPoint& x, const BallPoint& y) {
  return ball_kernels(bp.with_lambda(0.0), n, x, y).classical;
}

/// 𝕂̃_n(x,y) for <·,·>_μ^λ.
inline double ball_kernel_modified(const BallParams& bp, long n, const BallPoint& x, const BallPoint& y) {
  return ball_kernels(bp, n, x, y).modified;
}

/// 𝕂_n(x,y) - 𝕂̃_n(x,y) as a sum of rank-one terms (no subtraction of kernels).
inline double ball_kernel_difference(const BallParams& bp, long n, const BallPoint& x, const BallPoint& y) {
  return ball_kernels(bp, n, x, y).difference;
}

/// Λ_n(x) = 1 / K_n(x,x) for the classical or the mass-modified kernel.
inline double christoffel(const BallParams& bp, long n, const BallPoint& x, bool modified) {
  const auto kv = ball_kernels(modified ? bp : bp.with_lambda(0.0), n, x, x);
  return 1.0 / (modified ? kv.modified : kv.classical);
}

// ---------------------------------------------------------------------------
// Quadrature

struct BallRule {
  std::vector<BallPoint> points;
  std::vector<double> weights;
};

/// Product rule for ω_μ^{-1} ∫_B f (1-|x|²)^μ dx: Gauss-Jacobi (μ, δ) in
/// t = 2r²-1 times the sphere rule. With x = rξ,
///   ω_μ^{-1} ∫_B f W_μ dx = c_μ^d ∫_{-1}^{1} (1-t)^μ (1+t)^δ <f(rξ)>_S dt.
/// d = 2 uses `angular` trapezoid nodes; d = 3 uses `angular` polar nodes and
/// 2·angular azimuthal nodes. Weights sum to 1.
inline BallRule ball_quadrature(const BallParams& bp, long radial_nodes, long angular_nodes) {
  const int d = bp.d();
  if (d != 2 && d != 3) throw unsupported_dimension(d);
  const QuadratureRule radial = gauss_jacobi_rule(JacobiParams(bp.mu(), bp.delta()), radial_nodes);
  const SphereRule sphere = sphere_rule(d, angular_nodes, d == 2 ? angular_nodes : 2 * angular_nodes);
  const double c = bp.c();
  BallRule rule;
  rule.points.reserve(radial.size() * sphere.points.size());
  for (std::size_t a = 0; a < radial.size(); ++a) {
    const double r = std::sqrt(0.5 * (1.0 + radial.nodes[a]));
    for (std::size_t b = 0; b < sphere.points.size(); ++b) {
      rule.points.emplace_back(r, sphere.points[b]);
      rule.weights.push_back(c * radial.weights[a] * sphere.weights[b]);
    }
  }
  return rule;
}

/// Points of the sphere rule as ball points (r = 1) for the mass term.
inline BallRule sphere_quadrature(const BallParams& bp, long angular_nodes) {
  const int d = bp.d();
  const SphereRule sphere = sphere_rule(d, angular_nodes, d == 2 ? angular_nodes : 2 * angular_nodes);
  BallRule rule;
  for (std::size_t b = 0; b < sphere.points.size(); ++b) {
    rule.points.emplace_back(1.0, sphere.points[b]);
    rule.weights.push_back(sphere.weights[b]);
  }
  return rule;
}

/// <f,g>_μ^λ by quadrature (exact for polynomial f·g of degree < 2·min(radial, angular)).
inline double ball_inner_product(const BallParams& bp, const std::function<double(const BallPoint&)>& f,
                                 const std::function<double(const BallPoint&)>& g, long radial_nodes,
                                 long angular_nodes) {
  const BallRule interior = ball_quadrature(bp, radial_nodes, angular_nodes);
  double acc = 0.0;
  for (std::size_t i = 0; i < interior.points.size(); ++i)
    acc += interior.weights[i] * f(interior.points[i]) * g(interior.points[i]);
  if (bp.lambda() > 0.0) {
    const BallRule sphere = sphere_quadrature(bp, angular_nodes);
    double s = 0.0;
    for (std::size_t i = 0; i < sphere.points.size(); ++i)
      s += sphere.weights[i] * f(sphere.points[i]) * g(sphere.points[i]);
    acc += bp.lambda() * s;
  }
  return acc;
}

}  // namespace uvball
