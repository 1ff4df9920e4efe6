#pragma once

// Independent reference computations used by the verification suites and the
// tests: Gauss-Jacobi quadrature plus the point mass for the univariate
// inner product, and explicit basis sums for the ball kernels. None of these
// go through the closed forms or the Gegenbauer reduction they check.

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "uvball/ball.hpp"
#include "uvball/harmonics.hpp"
#include "uvball/jacobi.hpp"
#include "uvball/uvarov.hpp"

namespace uvball::oracle {

/// (f,g)^M = Σ w_i f(t_i) g(t_i) + M f(1) g(1) with an n-node Gauss-Jacobi rule.
inline double mass_inner_product(const JacobiParams& p, double mass, const std::function<double(double)>& f,
                                 const std::function<double(double)>& g, long nodes) {
  const QuadratureRule rule = gauss_jacobi_rule(p, nodes);
  double acc = 0.0;
  for (std::size_t i = 0; i < rule.size(); ++i) acc += rule.weights[i] * f(rule.nodes[i]) * g(rule.nodes[i]);
  return acc + mass * f(1.0) * g(1.0);
}

/// G[i][j] = (q_i, q_j)^M for i, j <= kmax, with q tabulated once on the rule.
inline std::vector<std::vector<double>> uvarov_mass_gram(const UvarovParams& u, long kmax, long nodes) {
  const QuadratureRule rule = gauss_jacobi_rule(u.base(), nodes);
  const auto count = static_cast<std::size_t>(kmax + 1);
  std::vector<std::vector<double>> q(count, std::vector<double>(rule.size() + 1));
  for (std::size_t k = 0; k < count; ++k) {
    for (std::size_t i = 0; i < rule.size(); ++i) q[k][i] = uvarov_eval(u, static_cast<long>(k), rule.nodes[i]);
    q[k][rule.size()] = uvarov_eval(u, static_cast<long>(k), 1.0);
  }
  std::vector<std::vector<double>> gram(count, std::vector<double>(count));
  for (std::size_t a = 0; a < count; ++a)
    for (std::size_t b = 0; b <= a; ++b) {
      double acc = 0.0;
      for (std::size_t i = 0; i < rule.size(); ++i) acc += rule.weights[i] * q[a][i] * q[b][i];
      gram[a][b] = gram[b][a] = acc + u.mass() * q[a][rule.size()] * q[b][rule.size()];
    }
  return gram;
}

/// Σ_{j<=k} q_j(t) q_j(s) / h̃_j from uvarov_eval and uvarov_norm.
inline double uvarov_kernel_sum(const UvarovParams& u, long k, double t, double s) {
  double acc = 0.0;
  for (long j = 0; j <= k; ++j) acc += uvarov_eval(u, j, t) * uvarov_eval(u, j, s) / uvarov_norm(u, j);
  return acc;
}

/// One element of the ball basis of total degree n: (n, j, ν).
struct BasisIndex {
  long n;
  long j;
  long nu;
};

/// All (n, j, ν) with n <= max_degree, ordered by n, then j, then ν.
inline std::vector<BasisIndex> ball_basis_indices(int d, long max_degree) {
  std::vector<BasisIndex> out;
  for (long n = 0; n <= max_degree; ++n)
    for (long j = 0; 2 * j <= n; ++j) {
      const long count = static_cast<long>(harmonic_dim(n - 2 * j, d));
      for (long nu = 1; nu <= count; ++nu) out.push_back({n, j, nu});
    }
  return out;
}

/// 𝕂_n(x,y) (modified = false) or 𝕂̃_n(x,y) (modified = true) as an explicit
/// sum over the mutually orthogonal basis, d in {2, 3}.
inline double ball_kernel_basis_sum(const BallParams& bp, long n, const BallPoint& x, const BallPoint& y,
                                    bool modified) {
  double acc = 0.0;
  for (const auto& b : ball_basis_indices(bp.d(), n)) {
    const RadialIndex idx(b.n, b.j);
    if (modified)
      acc += modified_basis_eval(bp, idx, b.nu, x) * modified_basis_eval(bp, idx, b.nu, y) / modified_norm_H(bp, idx);
    else
      acc += classical_basis_eval(bp, idx, b.nu, x) * classical_basis_eval(bp, idx, b.nu, y) /
             classical_norm_H(bp, idx);
  }
  return acc;
}

/// Largest normalized deviation |G_ab - δ_ab H_a| / sqrt(H_a H_b) of the
/// quadrature Gram matrix of the classical (or modified) basis of degree
/// <= max_degree from its predicted diagonal.
inline double gram_matrix_deviation(const BallParams& bp, long max_degree, bool modified, long radial_nodes,
                                    long angular_nodes) {
  const auto basis = ball_basis_indices(bp.d(), max_degree);
  const auto eval = [&](const BasisIndex& b, const BallPoint& x) {
    const RadialIndex idx(b.n, b.j);
    return modified ? modified_basis_eval(bp, idx, b.nu, x) : classical_basis_eval(bp, idx, b.nu, x);
  };
  const auto fill = [&](const BallRule& rule) {
    Eigen::MatrixXd values(static_cast<Eigen::Index>(rule.points.size()), static_cast<Eigen::Index>(basis.size()));
    for (std::size_t i = 0; i < rule.points.size(); ++i)
      for (std::size_t a = 0; a < basis.size(); ++a)
        values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(a)) =
            std::sqrt(rule.weights[i]) * eval(basis[a], rule.points[i]);
    return values;
  };
  const Eigen::MatrixXd interior = fill(ball_quadrature(bp, radial_nodes, angular_nodes));
  Eigen::MatrixXd gram = interior.transpose() * interior;
  if (modified && bp.lambda() > 0.0) {
    const Eigen::MatrixXd sphere = fill(sphere_quadrature(bp, angular_nodes));
    gram += bp.lambda() * (sphere.transpose() * sphere);
  }
  std::vector<double> norms;
  norms.reserve(basis.size());
  for (const auto& b : basis) {
    const RadialIndex idx(b.n, b.j);
    norms.push_back(modified ? modified_norm_H(bp, idx) : classical_norm_H(bp, idx));
  }
  double worst = 0.0;
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const double expected = a == b ? norms[a] : 0.0;
      const double dev = std::fabs(gram(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) - expected) /
                         std::sqrt(norms[a] * norms[b]);
      worst = std::max(worst, dev);
    }
  return worst;
}

}  // namespace uvball::oracle
