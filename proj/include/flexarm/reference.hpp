#pragma once

#include <string>

namespace flexarm {

enum class ReferenceKind { step_train, smoothed_square, sine };

ReferenceKind reference_kind_from(const std::string& name);
std::string to_string(ReferenceKind kind);

struct ReferencePoint {
  double q = 0.0, dq = 0.0, ddq = 0.0;
};

/// Scalar reference waveform, broadcast across joints by the simulator.
/// `period` is one full up/down cycle. The smoothed square uses a C^2
/// polynomial ramp of duration `smoothing` between levels, so position,
/// velocity and acceleration are consistent closed forms and the dwell
/// segments have exactly zero velocity.
struct Reference {
  ReferenceKind kind = ReferenceKind::smoothed_square;
  double amplitude = 0.5;  // rad
  double period = 2.0;     // s
  double smoothing = 0.2;  // transition duration, s; ignored by `sine`

  ReferencePoint at(double t) const;
  void validate() const;
};

}  // namespace flexarm
