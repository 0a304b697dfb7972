#pragma once

#include <string>

#include "flexarm/dynamics.hpp"
#include "flexarm/sim.hpp"

namespace flexarm {

/// Fully resolved toolkit configuration. An empty file yields the reference
/// defaults (Table-1-class arm constants, measured modal frequencies,
/// lambda = 10, beta = 1.3, Q = diag(150, 500, 1, 0), R = 2).
struct ToolkitConfig {
  ArmParams arm;
  ModalModel modal;
  SlidingConfig sliding;  // resolved for 1 joint, 2 parameters
  Eigen::VectorXd a_hat0; // initial parameter estimates
  LqrWeights weights;
  SimConfig sim;
  Reference reference;

  /// Renders the complete resolved configuration back to the sectioned
  /// key-value format with round-trip number formatting; parsing the result
  /// reproduces this configuration exactly.
  std::string resolved_ini() const;
};

/// Parses the sectioned key-value format ([arm], [modal], [sliding], [lqr],
/// [sim], [reference]). Unknown sections or keys are hard errors; invariant
/// violations are reported as `section.key: message`.
ToolkitConfig parse_config_text(const std::string& text);

/// Reads and parses a configuration file. Throws ConfigError when the file
/// cannot be read.
ToolkitConfig parse_config(const std::string& path);

SingleLinkPlant plant_from(const ToolkitConfig& cfg,
                           double stiffness_scale = 1.0);
ControllerSetup controller_from(const ToolkitConfig& cfg, ControllerMode mode);

}  // namespace flexarm
