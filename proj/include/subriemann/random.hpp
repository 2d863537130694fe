#pragma once

// Seeded samplers for group elements. Uniformity is only approximate; the
// samplers exist to cover every case of the distance formulas.

#include <cmath>
#include <numbers>
#include <random>

#include "subriemann/algebra.hpp"

namespace subriemann {

using Rng = std::mt19937_64;

/// Normalized Gaussian quaternion (A, B).
inline SU2Element random_su2(Rng& rng) {
  std::normal_distribution<double> normal;
  for (;;) {
    const double q[4] = {normal(rng), normal(rng), normal(rng), normal(rng)};
    const double n = std::sqrt(q[0] * q[0] + q[1] * q[1] + q[2] * q[2] + q[3] * q[3]);
    if (n > 1e-6) return SU2Element::from_components(q[0] / n, q[1] / n, q[2] / n, q[3] / n);
  }
}

inline SO3Element random_so3(Rng& rng) { return klein_omega(random_su2(rng)); }

/// Element with Re(A) = 0, whose image is a half-turn.
inline SU2Element random_su2_half_turn(Rng& rng) {
  std::normal_distribution<double> normal;
  for (;;) {
    const double q[3] = {normal(rng), normal(rng), normal(rng)};
    const double n = std::sqrt(q[0] * q[0] + q[1] * q[1] + q[2] * q[2]);
    if (n > 1e-6) return SU2Element::from_components(0.0, q[0] / n, q[1] / n, q[2] / n);
  }
}

/// Element (e^{i angle}, 0) with the angle uniform on (-pi, pi].
inline SU2Element random_su2_diagonal(Rng& rng) {
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  const double a = angle(rng);
  return SU2Element::from_components(std::cos(a), std::sin(a), 0.0, 0.0);
}

}  // namespace subriemann
