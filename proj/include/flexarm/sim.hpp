#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "flexarm/dynamics.hpp"
#include "flexarm/errors.hpp"
#include "flexarm/lqr.hpp"
#include "flexarm/reference.hpp"
#include "flexarm/sliding.hpp"
#include "flexarm/trace.hpp"

namespace flexarm {

/// Viscous + Coulomb torque acting on the rigid joints of the plant during a
/// run. The controller model never sees it.
struct JointFriction {
  double viscous = 0.004;  // N m s
  double coulomb = 0.002;  // N m
};

struct SimConfig {
  double dt_plant = 1e-4;  // integration step, s
  double dt_ctrl = 1e-3;   // controller sample period, s (multiple of dt_plant)
  double horizon = 16.0;   // s
  double noise_angle = 0.0;   // std dev added to measured q_r, rad
  double noise_strain = 0.0;  // std dev added to measured q_f, modal units
  JointFriction friction;
  double disturbance = 0.0;  // additive fast-input torque, N m
  std::uint64_t seed = 0;
  double divergence_bound = 50.0;  // rad, on |q_r|

  void validate() const;
  int substeps() const;  // dt_ctrl / dt_plant
  int ticks() const;     // horizon / dt_ctrl
};

enum class ControllerMode { composite, slow_only };

/// Everything the closed loop needs besides the plant: sliding-controller
/// tuning and initial estimates, the regressor of the modeled slow dynamics,
/// and the fast-design weights (composite mode).
struct ControllerSetup {
  ControllerMode mode = ControllerMode::composite;
  SlidingConfig sliding;
  SlidingState initial;
  std::function<Eigen::MatrixXd(const FullState&, const SurfaceSample&)>
      regressor;
  int n_params = 0;
  LqrWeights weights;
};

/// Regressor [ef_ddot, dq_r] over parameters (inertia, viscous coefficient);
/// Coulomb friction stays unmodeled.
ControllerSetup single_link_controller(ControllerMode mode,
                                       const SlidingConfig& sliding,
                                       const LqrWeights& weights);

/// Classical fixed-step RK4. Throws SimulationError when the derivative map
/// returns non-finite values.
template <typename F>
Eigen::VectorXd rk4_step(F&& f, const Eigen::VectorXd& y, double t,
                         double dt) {
  const Eigen::VectorXd k1 = f(t, y);
  const Eigen::VectorXd k2 = f(t + 0.5 * dt, (y + 0.5 * dt * k1).eval());
  const Eigen::VectorXd k3 = f(t + 0.5 * dt, (y + 0.5 * dt * k2).eval());
  const Eigen::VectorXd k4 = f(t + dt, (y + dt * k3).eval());
  if (!k1.allFinite() || !k2.allFinite() || !k3.allFinite() ||
      !k4.allFinite()) {
    throw SimulationError("non-finite derivative", t);
  }
  return y + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

/// tau = tau_slow + tau_fast
Eigen::VectorXd composite_torque(const Eigen::VectorXd& tau_slow,
                                 const Eigen::VectorXd& tau_fast);

/// Closed-loop run: plant integrated at dt_plant, zero-order-hold control at
/// dt_ctrl, sensor noise added to the measured positions before the
/// controller sees them. Deterministic for a fixed config (including seed).
TraceLog run(const PlantModel& plant, const Reference& reference,
             const ControllerSetup& controller, const SimConfig& cfg);

struct Metrics {
  double tracking_rms = 0.0;
  double tracking_max = 0.0;
  std::optional<double> steady_deflection_rms;  // absent when no dwell found
  std::optional<double> steady_tracking_max;
  double transient_deflection_peak = 0.0;
  double control_effort = 0.0;  // integral of |tau|^2 dt
  double cost_j = 0.0;          // quadratic deflection-state cost over the run
  std::vector<std::pair<double, double>> steady_intervals;  // trimmed, s
};

/// Weights and scale used for the run-cost column of the metrics.
struct MetricsOptions {
  LqrWeights weights;
  double epsilon = 0.0459;
  MetricsOptions();
};

/// Dwell windows are detected as maximal spans where the sampled reference
/// is exactly constant for longer than 0.5 s, trimmed by 0.2 s at each end.
Metrics metrics(const TraceLog& trace, const MetricsOptions& opt = {});

struct SweepPoint {
  double factor = 1.0;
  double epsilon = 0.0;
  double gap = 0.0;  // sup-norm distance between q_r and the slow replay
};

struct SweepResult {
  std::vector<SweepPoint> points;
  double slope = 0.0;  // log-log regression of gap against epsilon
};

/// For each stiffness factor (>= 1): build the stiffened plant, run the
/// composite loop, replay the recorded slow torque through the reduced slow
/// subsystem, and report the sup-norm gap between the full and slow rigid
/// trajectories. The integrator step is refined as the fast frequencies grow.
SweepResult epsilon_sweep(const ArmParams& params, const ModalModel& modal,
                          const std::vector<double>& factors,
                          const Reference& reference,
                          const ControllerSetup& controller,
                          const SimConfig& cfg);

}  // namespace flexarm
