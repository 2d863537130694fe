#pragma once

// Unit-speed horizontal geodesics from the identity,
//
//     gamma(t) = exp(t (cos(phi0) p1 + sin(phi0) p2 + beta k)) exp(-t beta k),
//
// evaluated either from the closed-form coordinates or from the product of
// exponentials. The second route only exists to cross-check the first.

#include "subriemann/algebra.hpp"

namespace subriemann {

/// Initial horizontal direction phi0 (normalized to [0, 2pi)) and vertical momentum beta.
class GeodesicParams {
public:
  GeodesicParams() = default;
  GeodesicParams(double phi0, double beta);

  double phi0() const noexcept { return phi0_; }
  double beta() const noexcept { return beta_; }

private:
  double phi0_ = 0.0;
  double beta_ = 0.0;
};

/// Wraps an angle into [0, 2pi).
double normalize_angle(double angle) noexcept;

/// Closed-form point gamma(t); t is arclength.
SU2Element geodesic_point(const GeodesicParams& p, double t);

/// The same point from the product of two one-parameter subgroups.
SU2Element geodesic_point_exp(const GeodesicParams& p, double t);

/// Image of geodesic_point under klein_omega.
SO3Element geodesic_point_so3(const GeodesicParams& p, double t);

/// 2pi / sqrt(1 + beta^2): no geodesic with momentum beta minimizes past this time.
double cut_time_bound(double beta) noexcept;

}  // namespace subriemann
