#pragma once

#include <Eigen/Dense>
#include <limits>

namespace flexarm {

/// Tuning of the sliding-mode tracking controller. `lambda` and `beta` are
/// per-joint, `gamma` is the SPD adaptation gain over the parameter vector,
/// `eta` is a per-joint margin used by the decrease diagnostics only.
struct SlidingConfig {
  Eigen::VectorXd lambda;
  Eigen::VectorXd beta;
  Eigen::MatrixXd gamma;
  Eigen::VectorXd eta;
  /// Optional safety clamp on the switching gains; disabled by default.
  double rho_clamp = std::numeric_limits<double>::infinity();

  static SlidingConfig broadcast(int n_joints, int n_params,
                                 double lambda = 10.0, double beta = 1.3,
                                 double gamma = 1e-4, double eta = 0.01);
  void validate(int n_joints, int n_params) const;
};

/// Adaptive estimates: model parameters a_hat and switching gains rho_hat.
/// rho_hat starts at zero and never decreases.
struct SlidingState {
  Eigen::VectorXd a_hat;
  Eigen::VectorXd rho_hat;

  static SlidingState cold(int n_params, int n_joints);
};

/// Per-sample surface bookkeeping. By construction s = edot + lambda.*e and
/// s0 is exactly zero inside the boundary layer.
struct SurfaceSample {
  Eigen::VectorXd e, edot;
  Eigen::VectorXd s, s0;
  Eigen::VectorXd ef_dot, ef_ddot;  // reference-shifted velocity/acceleration
};

/// sgn(s) outside the layer, s/beta inside.
double sat(double s, double beta);

SurfaceSample surfaces(const Eigen::VectorXd& q_r, const Eigen::VectorXd& dq_r,
                       const Eigen::VectorXd& q_d, const Eigen::VectorXd& dq_d,
                       const Eigen::VectorXd& ddq_d, const SlidingConfig& cfg);

/// tau = Y a_hat - diag(rho_hat) sat(s ./ beta)
Eigen::VectorXd control(const Eigen::MatrixXd& regressor,
                        const SlidingState& state, const SurfaceSample& sample,
                        const SlidingConfig& cfg);

/// Explicit-Euler update of the adaptive laws, driven entirely by s0:
///   a_hat   <- a_hat - gamma Y^T s0 dt
///   rho_hat <- rho_hat + |s0| dt
/// Both estimates are exactly unchanged while the surfaces stay inside the
/// boundary layer.
SlidingState adapt(const SlidingState& state, const Eigen::MatrixXd& regressor,
                   const SurfaceSample& sample, const SlidingConfig& cfg,
                   double dt);

/// Diagnostic energy
///   V = 1/2 (s0^T M_rr s0 + a~^T gamma^{-1} a~ + rho~^T rho~)
/// with a~ = a_hat - true_a and rho~ = rho_hat - true_rho. The true values
/// are only ever known to a test harness.
double lyapunov(const SurfaceSample& sample, const SlidingState& state,
                const Eigen::MatrixXd& M_rr, const Eigen::VectorXd& true_a,
                const Eigen::VectorXd& true_rho, const SlidingConfig& cfg);

}  // namespace flexarm
