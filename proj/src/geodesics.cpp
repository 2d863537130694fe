#include "subriemann/geodesics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace subriemann {

namespace {

void require_time(double t) {
  if (!(t >= 0.0) || !std::isfinite(t)) throw std::invalid_argument("geodesic time must be finite and >= 0");
}

}  // namespace

double normalize_angle(double angle) noexcept {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double r = std::fmod(angle, two_pi);
  if (r < 0.0) r += two_pi;
  // fmod of a tiny negative value can round up to exactly 2pi.
  return r >= two_pi ? 0.0 : r;
}

GeodesicParams::GeodesicParams(double phi0, double beta) : phi0_(normalize_angle(phi0)), beta_(beta) {
  if (!std::isfinite(phi0) || !std::isfinite(beta)) {
    throw std::invalid_argument("geodesic parameters must be finite");
  }
}

SU2Element geodesic_point(const GeodesicParams& p, double t) {
  require_time(t);
  const double beta = p.beta();
  const double omega = std::sqrt(1.0 + beta * beta);
  const double s = std::sin(0.5 * t * omega);
  const double c = std::cos(0.5 * t * omega);
  const double sv = std::sin(0.5 * beta * t);
  const double cv = std::cos(0.5 * beta * t);
  const double k = beta / omega;

  const double a_re = k * s * sv + c * cv;
  const double a_im = k * s * cv - c * sv;
  const double phase = 0.5 * beta * t + p.phi0();
  const double radius = s / omega;
  return SU2Element::from_components(a_re, a_im, radius * std::cos(phase), radius * std::sin(phase));
}

SU2Element geodesic_point_exp(const GeodesicParams& p, double t) {
  require_time(t);
  const AlgebraVector generator{std::cos(p.phi0()), std::sin(p.phi0()), p.beta()};
  const AlgebraVector vertical{0.0, 0.0, -p.beta()};
  return su2_mul(su2_exp(generator, t), su2_exp(vertical, t));
}

SO3Element geodesic_point_so3(const GeodesicParams& p, double t) { return klein_omega(geodesic_point(p, t)); }

double cut_time_bound(double beta) noexcept { return 2.0 * std::numbers::pi / std::sqrt(1.0 + beta * beta); }

}  // namespace subriemann
