#pragma once

#include <Eigen/Dense>

namespace flexarm {

/// Physical constants of the link and its hub drive.
struct ArmParams {
  double motor_inertia = 0.002;       // I_h, kg m^2
  double length = 0.45;               // L, m
  double height = 0.02;               // m
  double thickness = 0.0008;          // m
  double mass = 0.06;                 // kg
  double linear_density = 0.1333;     // rho, kg/m
  double flexural_rigidity = 0.1621;  // EI, N m^2

  /// Hub-side inertia of the equivalent rigid link, I_h + rho L^3 / 3.
  double rigid_inertia() const;

  /// Throws std::invalid_argument on non-positive fields or when
  /// linear_density * length disagrees with mass by more than 1%.
  void validate() const;
};

/// Truncated modal description of the flexible link. `phi_prime0` holds the
/// per-mode torque coupling coefficients (base slopes of the mode shapes in
/// the model's input convention, 1/m).
struct ModalModel {
  Eigen::VectorXd omega;       // natural frequencies, rad/s, strictly increasing
  double delta = 0.01;         // shared modal damping ratio, [0, 1)
  Eigen::VectorXd phi_prime0;  // torque coupling per mode, 1/m
  double hub_inertia = 0.0;    // I_r, kg m^2

  int n_modes() const { return static_cast<int>(omega.size()); }
  void validate() const;
};

/// Generalized coordinates split into rigid (joint) and flexible (modal)
/// parts, with their rates.
struct FullState {
  Eigen::VectorXd q_r, q_f, dq_r, dq_f;

  static FullState zero(int n_rigid, int n_flex);

  /// [q_r; q_f; dq_r; dq_f]
  Eigen::VectorXd pack() const;
  static FullState unpack(const Eigen::VectorXd& y, int n_rigid, int n_flex);

  void validate(int n_rigid, int n_flex) const;
};

/// Blocks of the rigid/flexible-partitioned equations of motion
///
///   M qdd + V_m qd + K q + F + G = B u
///
/// with M, V_m, B partitioned conformally with (rigid, flexible), the
/// stiffness acting on the flexible coordinates only and friction acting on
/// the rigid ones only.
struct PartitionedDynamics {
  Eigen::MatrixXd M_rr, M_rf, M_fr, M_ff;
  Eigen::MatrixXd V_rr, V_rf, V_fr, V_ff;
  Eigen::MatrixXd K_ff;
  Eigen::VectorXd F_r;
  Eigen::VectorXd G_r, G_f;
  Eigen::MatrixXd B_r, B_f;

  int n_rigid() const { return static_cast<int>(M_rr.rows()); }
  int n_flex() const { return static_cast<int>(M_ff.rows()); }

  Eigen::MatrixXd mass() const;       // assembled M
  Eigen::MatrixXd coriolis() const;   // assembled V_m
  Eigen::MatrixXd stiffness() const;  // assembled K (zero outside the ff block)
  Eigen::MatrixXd input() const;      // assembled B
  Eigen::VectorXd friction() const;   // [F_r; 0]
  Eigen::VectorXd gravity() const;    // [G_r; G_f]
};

/// A plant expressed in the partitioned form above. Models are immutable
/// after construction; evaluation is a pure function of (model, state).
class PlantModel {
 public:
  virtual ~PlantModel() = default;

  virtual int rigid_dof() const = 0;
  virtual int flex_dof() const = 0;
  int dof() const { return rigid_dof() + flex_dof(); }

  virtual PartitionedDynamics eval(const FullState& state) const = 0;

  /// Diagonal map from applied joint torque (N m) to the input `u` of the
  /// partitioned form. Ones unless the model's coordinates are normalized.
  virtual Eigen::VectorXd input_scale() const;

  /// qdd = M^{-1} (B u - V_m qd - K q - F - G) with u = input_scale .* tau.
  /// Throws std::domain_error if M is not positive definite at `state`.
  Eigen::VectorXd accel(const FullState& state,
                        const Eigen::VectorXd& tau) const;
};

/// Single-link plant with mass-normalized modal coordinates: M = I,
/// K_ff = diag(omega_i^2), modal damping 2 delta omega_i on the ff Coriolis
/// block, B_r = 1 and B_f = I_r * phi_prime0. The applied motor torque maps
/// to the normalized input through input_scale() = 1/I_r, so accel()
/// reproduces the plant's physical state-space response.
class SingleLinkPlant final : public PlantModel {
 public:
  SingleLinkPlant(const ArmParams& params, ModalModel modal,
                  double stiffness_scale = 1.0);

  int rigid_dof() const override { return 1; }
  int flex_dof() const override { return modal_.n_modes(); }

  PartitionedDynamics eval(const FullState& state) const override;
  Eigen::VectorXd input_scale() const override;

  const ModalModel& modal() const { return modal_; }
  double hub_inertia() const { return modal_.hub_inertia; }
  double stiffness_scale() const { return stiffness_scale_; }

  /// First-order form xdot = A x + b tau, x = [q_r, q_f; dq_r, dq_f],
  /// tau in N m.
  std::pair<Eigen::MatrixXd, Eigen::VectorXd> first_order() const;

 private:
  ModalModel modal_;
  double stiffness_scale_ = 1.0;
  PartitionedDynamics blocks_;  // state independent
};

SingleLinkPlant build_single_link(const ArmParams& params,
                                  const ModalModel& modal,
                                  double stiffness_scale = 1.0);

/// Measured reference modal data: omega = (21.80, 128.80) rad/s, delta and
/// hub inertia defaults, couplings filled from the analytic beam modes.
ModalModel reference_modal(const ArmParams& params);

struct BeamModes {
  Eigen::VectorXd omega;       // rad/s
  Eigen::VectorXd phi_prime0;  // torque coupling, 1/m
  Eigen::VectorXd beta_l;      // roots of the characteristic equation
};

/// Clamped-free Euler-Bernoulli modal analysis. Solves
/// cos(bL) cosh(bL) = -1 by bracketed bisection and returns
/// omega_i = b_i^2 sqrt(EI/rho) together with the per-mode torque coupling
/// of the hub-driven link (the literal base slope of a clamped shape is
/// identically zero, which would leave the input decoupled from the modes;
/// the returned coefficients are the hub-coupling values
/// -int(x phi_i) / (L I_r) for the standard dimensionless shapes).
BeamModes beam_modes(const ArmParams& params, int n_modes);

}  // namespace flexarm
