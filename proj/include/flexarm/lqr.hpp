#pragma once

#include <vector>

#include "flexarm/perturbation.hpp"

namespace flexarm {

/// Standard quadratic weights: Q symmetric positive semidefinite over the
/// fast state, R symmetric positive definite over the input.
struct LqrWeights {
  Eigen::MatrixXd Q, R;
};

/// Result of a Riccati design. `K` already carries the stabilizing sign, so
/// the feedback law reads u = K phi = K_pf phi1 + K_df phi2.
struct LqrGains {
  Eigen::MatrixXd K;  // n_inputs x n_states, equals -R^{-1} B^T P
  Eigen::MatrixXd P;  // stabilizing Riccati solution
  double residual = 0.0;
  Eigen::VectorXcd closed_loop_eigenvalues;

  /// Position/velocity halves of K; requires an even state dimension.
  Eigen::MatrixXd K_pf() const;
  Eigen::MatrixXd K_df() const;
};

/// Solves F^T X + X F + C = 0 by dense Kronecker linearization. Intended for
/// the small systems handled here; throws std::domain_error when the
/// linearized system is singular.
Eigen::MatrixXd solve_lyapunov(const Eigen::MatrixXd& F,
                               const Eigen::MatrixXd& C);

bool is_hurwitz(const Eigen::MatrixXd& A);

/// Stabilizing solution of A^T P + P A - P B R^{-1} B^T P + Q = 0 by
/// Newton-Kleinman iteration, seeded with an eigenvalue-shift stabilizing
/// gain when A itself is not Hurwitz. Deterministic: identical inputs give
/// bit-identical gains. Throws DesignError when (A, B) is not stabilizable,
/// (Q, A) is not detectable, the residual stays above
/// 1e-8 * (1 + max|Q|), or the closed loop is not Hurwitz.
LqrGains solve_care(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B,
                    const LqrWeights& weights);

/// u = K_pf phi1 + K_df phi2; exactly zero on the manifold (phi = 0).
Eigen::VectorXd fast_control(const LqrGains& gains, const FastState& phi);

/// Trapezoidal quadrature of phi^T Q phi + u^T R u over a uniformly sampled
/// trajectory; `phi[k]` is the stacked fast state at sample k.
double cost(const std::vector<Eigen::VectorXd>& phi,
            const std::vector<Eigen::VectorXd>& u, const LqrWeights& weights,
            double dt);

}  // namespace flexarm
