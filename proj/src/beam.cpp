#include <cmath>
#include <numbers>
#include <stdexcept>

#include "flexarm/dynamics.hpp"

namespace flexarm {

namespace {

// cos(x) cosh(x) + 1 = 0 rewritten as cos(x) + sech(x) = 0; same roots,
// bounded values, no cosh overflow.
double char_eq(double x) { return std::cos(x) + 1.0 / std::cosh(x); }

// Root k sits next to (2k - 1) pi / 2; the raw half-pi-wide brackets hold
// two roots each beyond the first, so use narrow windows around the
// asymptotes instead.
double bisect_root(int k) {
  constexpr double pi = std::numbers::pi;
  double lo, hi;
  if (k == 1) {
    lo = 0.5 * pi + 1e-9;
    hi = pi;
  } else {
    const double center = (2.0 * k - 1.0) * 0.5 * pi;
    lo = center - 0.45;
    hi = center + 0.45;
  }
  double flo = char_eq(lo);
  if (flo * char_eq(hi) > 0.0) {
    throw std::runtime_error("beam mode bracket does not straddle a root");
  }
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;  // bracket at machine resolution
    const double fmid = char_eq(mid);
    if (flo * fmid <= 0.0) {
      hi = mid;
    } else {
      lo = mid;
      flo = fmid;
    }
  }
  const double root = 0.5 * (lo + hi);
  if (std::abs(char_eq(root)) > 1e-10) {
    throw std::runtime_error("beam mode root finder did not converge");
  }
  return root;
}

// Clamped-free shape in the standard dimensionless normalization.
double mode_shape(double beta_x, double sigma) {
  return std::cosh(beta_x) - std::cos(beta_x) -
         sigma * (std::sinh(beta_x) - std::sin(beta_x));
}

}  // namespace

BeamModes beam_modes(const ArmParams& params, int n_modes) {
  params.validate();
  if (n_modes < 1) {
    throw std::invalid_argument("n_modes must be at least 1");
  }

  const double L = params.length;
  const double wave_speed =
      std::sqrt(params.flexural_rigidity / params.linear_density);
  const double hub = params.rigid_inertia();

  BeamModes out;
  out.omega.resize(n_modes);
  out.phi_prime0.resize(n_modes);
  out.beta_l.resize(n_modes);

  for (int k = 1; k <= n_modes; ++k) {
    const double x = bisect_root(k);
    const double beta = x / L;
    out.beta_l[k - 1] = x;
    out.omega[k - 1] = beta * beta * wave_speed;

    const double sigma =
        (std::cosh(x) + std::cos(x)) / (std::sinh(x) + std::sin(x));

    // Simpson quadrature of int x phi dx and int phi^2 dx over [0, L].
    const int steps = 4000;  // even
    const double h = L / steps;
    double moment = 0.0, norm = 0.0;
    for (int i = 0; i <= steps; ++i) {
      const double xi = i * h;
      const double phi = mode_shape(beta * xi, sigma);
      const double w = (i == 0 || i == steps) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
      moment += w * xi * phi;
      norm += w * phi * phi;
    }
    moment *= h / 3.0;
    norm *= h / 3.0;

    // Torque coupling of the hub-driven link: the hub acceleration tau/I_r
    // forces each modal equation through the shape's first moment. The
    // literal base slope of a clamped shape is zero and would decouple the
    // input entirely.
    out.phi_prime0[k - 1] = -moment / (norm / L * L * hub);
  }
  return out;
}

}  // namespace flexarm
