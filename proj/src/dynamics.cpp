#include "flexarm/dynamics.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace flexarm {

double ArmParams::rigid_inertia() const {
  return motor_inertia + linear_density * length * length * length / 3.0;
}

void ArmParams::validate() const {
  const auto positive = [](double v, const char* name) {
    if (!(v > 0.0)) {
      throw std::invalid_argument(std::string(name) + " must be positive");
    }
  };
  positive(motor_inertia, "motor_inertia");
  positive(length, "length");
  positive(height, "height");
  positive(thickness, "thickness");
  positive(mass, "mass");
  positive(linear_density, "linear_density");
  positive(flexural_rigidity, "flexural_rigidity");
  if (std::abs(linear_density * length - mass) / mass > 0.01) {
    throw std::invalid_argument(
        "linear_density * length disagrees with mass by more than 1%");
  }
}

void ModalModel::validate() const {
  if (omega.size() == 0) {
    throw std::invalid_argument("omega must have at least one mode");
  }
  if (phi_prime0.size() != omega.size()) {
    throw std::invalid_argument("phi_prime0 size must match omega");
  }
  for (int i = 0; i < omega.size(); ++i) {
    if (!(omega[i] > 0.0)) {
      throw std::invalid_argument("omega entries must be positive");
    }
    if (i > 0 && !(omega[i] > omega[i - 1])) {
      throw std::invalid_argument("omega must be strictly increasing");
    }
  }
  if (!(delta >= 0.0) || delta >= 1.0) {
    throw std::invalid_argument("delta must lie in [0, 1)");
  }
  if (!(hub_inertia > 0.0)) {
    throw std::invalid_argument("hub_inertia must be positive");
  }
}

FullState FullState::zero(int n_rigid, int n_flex) {
  FullState st;
  st.q_r = Eigen::VectorXd::Zero(n_rigid);
  st.q_f = Eigen::VectorXd::Zero(n_flex);
  st.dq_r = Eigen::VectorXd::Zero(n_rigid);
  st.dq_f = Eigen::VectorXd::Zero(n_flex);
  return st;
}

Eigen::VectorXd FullState::pack() const {
  Eigen::VectorXd y(q_r.size() + q_f.size() + dq_r.size() + dq_f.size());
  y.head(q_r.size()) = q_r;
  y.segment(q_r.size(), q_f.size()) = q_f;
  y.segment(q_r.size() + q_f.size(), dq_r.size()) = dq_r;
  y.tail(dq_f.size()) = dq_f;
  return y;
}

FullState FullState::unpack(const Eigen::VectorXd& y, int n_rigid,
                            int n_flex) {
  if (y.size() != 2 * (n_rigid + n_flex)) {
    throw std::invalid_argument("packed state has the wrong dimension");
  }
  FullState st;
  st.q_r = y.head(n_rigid);
  st.q_f = y.segment(n_rigid, n_flex);
  st.dq_r = y.segment(n_rigid + n_flex, n_rigid);
  st.dq_f = y.tail(n_flex);
  return st;
}

void FullState::validate(int n_rigid, int n_flex) const {
  if (q_r.size() != n_rigid || dq_r.size() != n_rigid ||
      q_f.size() != n_flex || dq_f.size() != n_flex) {
    throw std::invalid_argument("state dimensions do not match the model");
  }
  if (!q_r.allFinite() || !q_f.allFinite() || !dq_r.allFinite() ||
      !dq_f.allFinite()) {
    throw std::invalid_argument("state contains non-finite entries");
  }
}

namespace {

Eigen::MatrixXd assemble(const Eigen::MatrixXd& rr, const Eigen::MatrixXd& rf,
                         const Eigen::MatrixXd& fr,
                         const Eigen::MatrixXd& ff) {
  const int n = static_cast<int>(rr.rows());
  const int m = static_cast<int>(ff.rows());
  Eigen::MatrixXd out(n + m, n + m);
  out.topLeftCorner(n, n) = rr;
  out.topRightCorner(n, m) = rf;
  out.bottomLeftCorner(m, n) = fr;
  out.bottomRightCorner(m, m) = ff;
  return out;
}

}  // namespace

Eigen::MatrixXd PartitionedDynamics::mass() const {
  return assemble(M_rr, M_rf, M_fr, M_ff);
}

Eigen::MatrixXd PartitionedDynamics::coriolis() const {
  return assemble(V_rr, V_rf, V_fr, V_ff);
}

Eigen::MatrixXd PartitionedDynamics::stiffness() const {
  const int n = n_rigid();
  const int m = n_flex();
  Eigen::MatrixXd K = Eigen::MatrixXd::Zero(n + m, n + m);
  K.bottomRightCorner(m, m) = K_ff;
  return K;
}

Eigen::MatrixXd PartitionedDynamics::input() const {
  const int n = n_rigid();
  const int m = n_flex();
  Eigen::MatrixXd B(n + m, static_cast<int>(B_r.cols()));
  B.topRows(n) = B_r;
  B.bottomRows(m) = B_f;
  return B;
}

Eigen::VectorXd PartitionedDynamics::friction() const {
  Eigen::VectorXd F = Eigen::VectorXd::Zero(n_rigid() + n_flex());
  F.head(n_rigid()) = F_r;
  return F;
}

Eigen::VectorXd PartitionedDynamics::gravity() const {
  Eigen::VectorXd G(n_rigid() + n_flex());
  G.head(n_rigid()) = G_r;
  G.tail(n_flex()) = G_f;
  return G;
}

Eigen::VectorXd PlantModel::input_scale() const {
  return Eigen::VectorXd::Ones(rigid_dof());
}

Eigen::VectorXd PlantModel::accel(const FullState& state,
                                  const Eigen::VectorXd& tau) const {
  state.validate(rigid_dof(), flex_dof());
  if (tau.size() != rigid_dof()) {
    throw std::invalid_argument("torque dimension does not match the model");
  }
  const PartitionedDynamics pd = eval(state);
  const Eigen::MatrixXd M = pd.mass();
  Eigen::VectorXd dq(dof());
  dq.head(rigid_dof()) = state.dq_r;
  dq.tail(flex_dof()) = state.dq_f;
  Eigen::VectorXd q(dof());
  q.head(rigid_dof()) = state.q_r;
  q.tail(flex_dof()) = state.q_f;

  const Eigen::VectorXd u = input_scale().cwiseProduct(tau);
  const Eigen::VectorXd rhs = pd.input() * u - pd.coriolis() * dq -
                              pd.stiffness() * q - pd.friction() -
                              pd.gravity();
  Eigen::LLT<Eigen::MatrixXd> llt(M);
  if (llt.info() != Eigen::Success) {
    throw std::domain_error("mass matrix is singular or indefinite");
  }
  return llt.solve(rhs);
}

SingleLinkPlant::SingleLinkPlant(const ArmParams& params, ModalModel modal,
                                 double stiffness_scale)
    : modal_(std::move(modal)), stiffness_scale_(stiffness_scale) {
  params.validate();
  if (modal_.hub_inertia <= 0.0) {
    modal_.hub_inertia = params.rigid_inertia();
  }
  modal_.validate();
  if (!(stiffness_scale_ > 0.0)) {
    throw std::invalid_argument("stiffness_scale must be positive");
  }

  const int m = modal_.n_modes();
  blocks_.M_rr = Eigen::MatrixXd::Identity(1, 1);
  blocks_.M_rf = Eigen::MatrixXd::Zero(1, m);
  blocks_.M_fr = Eigen::MatrixXd::Zero(m, 1);
  blocks_.M_ff = Eigen::MatrixXd::Identity(m, m);
  blocks_.V_rr = Eigen::MatrixXd::Zero(1, 1);
  blocks_.V_rf = Eigen::MatrixXd::Zero(1, m);
  blocks_.V_fr = Eigen::MatrixXd::Zero(m, 1);
  blocks_.V_ff =
      (2.0 * modal_.delta * modal_.omega.array()).matrix().asDiagonal();
  blocks_.K_ff =
      (stiffness_scale_ * modal_.omega.array().square()).matrix().asDiagonal();
  blocks_.F_r = Eigen::VectorXd::Zero(1);
  blocks_.G_r = Eigen::VectorXd::Zero(1);
  blocks_.G_f = Eigen::VectorXd::Zero(m);
  blocks_.B_r = Eigen::MatrixXd::Ones(1, 1);
  blocks_.B_f = modal_.hub_inertia * modal_.phi_prime0;
}

PartitionedDynamics SingleLinkPlant::eval(const FullState& state) const {
  state.validate(rigid_dof(), flex_dof());
  return blocks_;
}

Eigen::VectorXd SingleLinkPlant::input_scale() const {
  Eigen::VectorXd s(1);
  s[0] = 1.0 / modal_.hub_inertia;
  return s;
}

std::pair<Eigen::MatrixXd, Eigen::VectorXd> SingleLinkPlant::first_order()
    const {
  const int m = modal_.n_modes();
  const int d = 1 + m;
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(2 * d, 2 * d);
  A.topRightCorner(d, d).setIdentity();
  A.bottomLeftCorner(d, d) = -blocks_.stiffness();
  A.bottomRightCorner(d, d) = -blocks_.coriolis();
  Eigen::VectorXd b = Eigen::VectorXd::Zero(2 * d);
  b.segment(d, d) = blocks_.input() * input_scale();
  return {A, b};
}

SingleLinkPlant build_single_link(const ArmParams& params,
                                  const ModalModel& modal,
                                  double stiffness_scale) {
  return SingleLinkPlant(params, modal, stiffness_scale);
}

ModalModel reference_modal(const ArmParams& params) {
  ModalModel modal;
  modal.omega = Eigen::Vector2d(21.80, 128.80);
  modal.delta = 0.01;
  modal.hub_inertia = params.rigid_inertia();
  modal.phi_prime0 = beam_modes(params, 2).phi_prime0;
  return modal;
}

}  // namespace flexarm
