#pragma once

#include "flexarm/dynamics.hpp"

namespace flexarm {

/// Two-time-scale separation constants: eps^2 = 1/k_m with k_m the smallest
/// stiffness constant, and the scaled stiffness K_tilde = K_ff / k_m.
struct ScaleFactor {
  double k_m = 0.0;
  double epsilon = 0.0;
  Eigen::MatrixXd K_tilde;
};

/// k_m is the smallest diagonal entry for diagonal K_ff and the smallest
/// eigenvalue otherwise. Throws std::domain_error when k_m is not positive.
ScaleFactor scale_factor(const Eigen::MatrixXd& K_ff);

/// Blocks of H(q) = M(q)^{-1}, partitioned conformally with (r, f).
struct InverseBlocks {
  Eigen::MatrixXd H_rr, H_rf, H_fr, H_ff;
};

/// Throws std::domain_error when M is singular or indefinite.
InverseBlocks invert_blocks(const PartitionedDynamics& pd);

/// The H-premultiplied composites:
///   B1_r = H_rr B_r + H_rf B_f      B1_f = H_fr B_r + H_ff B_f
///   V1_rr = H_rr V_rr + H_rf V_fr   V1_fr = H_fr V_rr + H_ff V_fr
///   V1_rf = H_rr V_rf + H_rf V_ff   V1_ff = H_fr V_rf + H_ff V_ff
struct ReducedMatrices {
  Eigen::MatrixXd B1_r, B1_f, V1_rr, V1_fr, V1_rf, V1_ff;
};

ReducedMatrices reduced_matrices(const PartitionedDynamics& pd,
                                 const InverseBlocks& H);

/// Quasi-static deflection the flexible coordinates settle on when the scale
/// factor is sent to zero:
///   psi_bar = K_tilde^{-1} H_ff^{-1} (B1_f u - V1_fr dq_r
///             - H_fr F_r - H_fr G_r - H_ff G_f)
/// `tau_slow` is the slow input in the partitioned form's units.
Eigen::VectorXd slow_manifold(const PartitionedDynamics& pd,
                              const InverseBlocks& H,
                              const ReducedMatrices& rm,
                              const Eigen::MatrixXd& K_tilde,
                              const Eigen::VectorXd& tau_slow,
                              const Eigen::VectorXd& dq_r);

/// Rigid-equivalent acceleration of the reduced slow subsystem:
///   qdd_r = M_rr^{-1} (B_r u - V_rr dq_r - F_r - G_r)
Eigen::VectorXd slow_dynamics(const PartitionedDynamics& pd,
                              const Eigen::VectorXd& tau_slow,
                              const Eigen::VectorXd& dq_r);

/// Linear fast subsystem d phi / dT = A_F phi + B_F u in the stretched time
/// T = t / eps, phi = [phi1; phi2]. The first-order damping term
/// -V1_ff * eps is kept in the lower-right block.
struct FastModel {
  Eigen::MatrixXd A_F;  // [[0, I], [-H_ff K_tilde, -V1_ff eps]]
  Eigen::MatrixXd B_F;  // [0; B1_f]
  double epsilon = 0.0;
};

FastModel fast_model(const PartitionedDynamics& pd, const InverseBlocks& H,
                     const ReducedMatrices& rm, const Eigen::MatrixXd& K_tilde,
                     double epsilon);

/// Boundary-layer coordinates: phi1 = psi - psi_bar, phi2 = eps * dpsi.
struct FastState {
  Eigen::VectorXd phi1, phi2;
  Eigen::VectorXd packed() const;  // [phi1; phi2]
};

FastState fast_state(const Eigen::VectorXd& psi, const Eigen::VectorXd& dpsi,
                     const Eigen::VectorXd& psi_bar, double epsilon);

}  // namespace flexarm
