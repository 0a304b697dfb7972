#pragma once

#include "flexarm/dynamics.hpp"

namespace flexarm {

/// Link and friction constants of the rigid two-link planar arm.
struct TwoLinkParams {
  double m1 = 1.0, m2 = 1.0;  // kg
  double l1 = 0.5, l2 = 0.5;  // m, centers of mass at l/2, I = m l^2 / 12
  Eigen::Vector2d viscous{0.1, 0.1};   // N m s
  Eigen::Vector2d coulomb{0.0, 0.0};   // N m
};

/// Rigid two-link arm moving in the horizontal plane (no gravity), with
/// closed-form configuration-dependent inertia and Coriolis matrices and
/// viscous + Coulomb joint friction. Exercises the structural properties a
/// linear plant cannot (skew symmetry, state-dependent blocks) and gives the
/// adaptive controller a regressor with known true parameters.
class TwoLinkPlanarArm final : public PlantModel {
 public:
  explicit TwoLinkPlanarArm(TwoLinkParams params = {});

  int rigid_dof() const override { return 2; }
  int flex_dof() const override { return 0; }

  PartitionedDynamics eval(const FullState& state) const override;

  /// dM/dt at (q, dq), closed form.
  Eigen::MatrixXd mass_rate(const FullState& state) const;

  /// Regressor Y such that Y * [a1 a2 a3 fv1 fv2]^T =
  /// M(q) ef_ddot + V_m(q, dq) ef_dot + diag(fv) dq. Coulomb friction is
  /// deliberately not parametrized.
  Eigen::MatrixXd regressor(const FullState& state,
                            const Eigen::VectorXd& ef_dot,
                            const Eigen::VectorXd& ef_ddot) const;

  /// [a1, a2, a3, fv1, fv2]
  Eigen::VectorXd true_params() const;

  const TwoLinkParams& params() const { return params_; }
  double a1() const { return a1_; }
  double a2() const { return a2_; }
  double a3() const { return a3_; }

 private:
  TwoLinkParams params_;
  double a1_ = 0.0, a2_ = 0.0, a3_ = 0.0;
};

}  // namespace flexarm
