#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

namespace flexarm {

/// One controller-rate sample of a closed-loop run. Adaptive estimates are
/// the values the controller used at this tick (pre-update).
struct TraceRow {
  double t = 0.0;
  Eigen::VectorXd q_r, q_d, e;
  Eigen::VectorXd q_f, dq_f;
  Eigen::VectorXd tau_slow, tau_fast, tau;
  Eigen::VectorXd s, s0;
  Eigen::VectorXd rho_hat, a_hat;
  double v_lyap = 0.0;

  bool operator==(const TraceRow& other) const;
};

/// Uniformly sampled record of one run, one row per controller period.
struct TraceLog {
  std::vector<TraceRow> rows;

  std::size_t size() const { return rows.size(); }
  bool empty() const { return rows.empty(); }
  double dt() const;  // sample spacing; requires >= 2 rows

  /// Fixed single-link column layout; doubles are written with
  /// shortest-round-trip formatting so parsing recovers them exactly.
  /// Requires the 1-joint / 2-mode / 2-parameter shape.
  static const char* csv_header();
  std::string to_csv() const;
  static TraceLog from_csv(const std::string& text);

  bool operator==(const TraceLog& other) const;
};

}  // namespace flexarm
