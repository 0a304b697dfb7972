#pragma once

#include <stdexcept>
#include <string>

namespace flexarm {

/// Raised when a feedback design cannot be completed (unstabilizable or
/// undetectable pair, Riccati residual out of bounds, unstable closed loop).
class DesignError : public std::runtime_error {
 public:
  explicit DesignError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when a closed-loop run fails: non-finite integrator output or the
/// rigid coordinates leaving the configured bound. Carries the run time.
class SimulationError : public std::runtime_error {
 public:
  SimulationError(const std::string& what, double t)
      : std::runtime_error(what + " (t = " + std::to_string(t) + " s)"),
        time(t) {}
  double time;
};

/// Raised by the configuration loader; the message names `section.key`.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace flexarm
