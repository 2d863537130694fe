#pragma once

// Brute-force geodesic shooting, used to check the closed-form distances.
//
// The parameter box phi0 in [0, 2pi), beta in [-beta_max, beta_max],
// t in (0, cut_time_bound(beta)] is scanned on a regular grid. Grid points
// that are local minima of the endpoint mismatch are refined by damped
// Gauss-Newton, and the shortest refined geodesic that hits the target is
// reported together with every other distinct geodesic of (nearly) the same
// length.

#include <array>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "subriemann/algebra.hpp"
#include "subriemann/su2_distance.hpp"

namespace subriemann {

struct GridSpec {
  int n_phi = 256;
  int n_beta = 256;
  double beta_max = 8.0;
  int n_t = 512;
  int refine_steps = 60;
};

struct Minimizer {
  double phi0 = 0.0;
  double beta = 0.0;
  double t = 0.0;
  double mismatch = 0.0;  // max componentwise endpoint deviation
};

struct ShootResult {
  double t_min = 0.0;
  std::vector<Minimizer> minimizers;  // sorted by (t, phi0, beta), deduplicated
  GridSpec grid;
  std::size_t grid_candidates = 0;
  std::size_t refined_matches = 0;
};

/// Thrown when no refined grid candidate reaches the target.
class NoMatch : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A refined geodesic counts as hitting the target within this deviation.
inline constexpr double kRefinedMatchTolerance = 1e-6;
/// Grid-stage allowance on top of the cell Lipschitz bound.
inline constexpr double kGridMatchTolerance = 1e-3;
/// Slack on t when collecting minimizers and comparing against exact distances.
inline constexpr double kTimeTolerance = 2e-2;
/// Minimizers closer than this in (phi0, beta) are the same geodesic.
inline constexpr double kDedupRadius = 0.1;

/// Throws std::invalid_argument unless every size is >= 64 and beta_max >= 8.
void validate_grid(const GridSpec& grid);

ShootResult shoot_min_time(const SU2Element& target, const GridSpec& grid = {});
ShootResult shoot_min_time_so3(const SO3Element& target, const GridSpec& grid = {});

/// Enlarges beta_max when the exact minimizer's |beta| lies within 10% of the window edge.
GridSpec widen_for_target(const SU2Element& target, GridSpec grid);
GridSpec widen_for_target(const SO3Element& target, GridSpec grid);

/// Residuals of the earlier literature's system for rho(g, e):
///   r1 = -beta t / 2 + arctan((beta / w) tan(t w / 2)) - argA
///   r2 = sin(t w / 2) / w - sqrt(1 - absA^2),          w = sqrt(1 + beta^2),
/// with the arctan continued across the pole at t w / 2 = pi / 2.
std::array<double, 2> br_system_residual(double t, double beta, double abs_a, double arg_a);

struct BrNonuniquenessReport {
  double abs_a = 0.0;
  double t_short = 0.0;  // 2 arcsin sqrt(1 - absA^2)
  double t_long = 0.0;   // 2pi - t_short
  std::array<double, 2> residual_short{};
  std::array<double, 2> residual_long{};
  DistanceResult exact;  // distance of (absA, sqrt(1 - absA^2))
};

/// Two solutions of the system at beta = 0, argA = 0, compared with the exact distance.
BrNonuniquenessReport demonstrate_br_nonuniqueness(double abs_a);

}  // namespace subriemann
