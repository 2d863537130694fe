#include "subriemann/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace subriemann {

namespace {

std::string describe(const std::string& invariant, double residual) {
  std::ostringstream os;
  os.precision(3);
  os << invariant << " (residual " << residual << ")";
  return os.str();
}

double det3(const Matrix3& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

}  // namespace

InvariantViolation::InvariantViolation(const std::string& invariant, double residual)
    : std::domain_error(describe(invariant, residual)), invariant_(invariant), residual_(residual) {}

SU2Element::SU2Element(Complex a, Complex b) {
  const double norm2 = std::norm(a) + std::norm(b);
  if (!std::isfinite(norm2) || std::abs(norm2 - 1.0) > kUnitTolerance) {
    throw InvariantViolation("unit-norm violation", std::isfinite(norm2) ? norm2 - 1.0 : norm2);
  }
  const double scale = 1.0 / std::sqrt(norm2);
  a_ = a * scale;
  b_ = b * scale;
}

SU2Element SU2Element::operator-() const noexcept { return SU2Element(-a_, -b_, Trusted{}); }

SO3Element::SO3Element() : m_{{{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}}} {}

SO3Element::SO3Element(const Matrix3& m) : m_(m) {
  double orth = 0.0;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (!std::isfinite(m[i][j])) throw InvariantViolation("non-finite matrix entry", m[i][j]);
      double dot = 0.0;
      for (int k = 0; k < 3; ++k) dot += m[k][i] * m[k][j];
      orth = std::max(orth, std::abs(dot - (i == j ? 1.0 : 0.0)));
    }
  }
  if (orth > kRotationTolerance) throw InvariantViolation("orthogonality violation", orth);
  const double det = det3(m);
  if (std::abs(det - 1.0) > kRotationTolerance) {
    throw InvariantViolation("determinant violation", det - 1.0);
  }
}

SO3Element SO3Element::transpose() const noexcept {
  Matrix3 t{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) t[i][j] = m_[j][i];
  return SO3Element(t, Trusted{});
}

double SO3Element::deviation_from_identity() const noexcept {
  double dev = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) dev = std::max(dev, std::abs(m_[i][j] - (i == j ? 1.0 : 0.0)));
  return dev;
}

SU2Element su2_mul(const SU2Element& g, const SU2Element& h) {
  // First row of [[A, B], [-conj B, conj A]] * [[C, D], [-conj D, conj C]].
  const Complex a = g.a_ * h.a_ - g.b_ * std::conj(h.b_);
  const Complex b = g.a_ * h.b_ + g.b_ * std::conj(h.a_);
  const double scale = 1.0 / std::sqrt(std::norm(a) + std::norm(b));
  return SU2Element(a * scale, b * scale, SU2Element::Trusted{});
}

SU2Element su2_inv(const SU2Element& g) {
  return SU2Element(std::conj(g.a_), -g.b_, SU2Element::Trusted{});
}

SU2Element su2_exp(const AlgebraVector& v, double t) {
  const double omega = std::sqrt(v.x * v.x + v.y * v.y + v.z * v.z);
  if (omega == 0.0) return SU2Element::identity();
  const double half = 0.5 * t * omega;
  const double c = std::cos(half);
  const double s = std::sin(half) / omega;
  return SU2Element(Complex{c, v.z * s}, Complex{v.x * s, v.y * s});
}

SO3Element so3_mul(const SO3Element& lhs, const SO3Element& rhs) {
  Matrix3 p{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double sum = 0.0;
      for (int k = 0; k < 3; ++k) sum += lhs.m_[i][k] * rhs.m_[k][j];
      p[i][j] = sum;
    }
  return SO3Element(p, SO3Element::Trusted{});
}

SO3Element rotation_axis1(double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return SO3Element(Matrix3{{{1.0, 0.0, 0.0}, {0.0, c, -s}, {0.0, s, c}}});
}

SO3Element klein_omega(const SU2Element& g) {
  const double a1 = g.a_re(), a2 = g.a_im(), b1 = g.b_re(), b2 = g.b_im();
  Matrix3 m{};
  m[0][0] = a1 * a1 + a2 * a2 - b1 * b1 - b2 * b2;
  m[0][1] = 2.0 * (a2 * b1 - b2 * a1);
  m[0][2] = 2.0 * (a2 * b2 + b1 * a1);
  m[1][0] = 2.0 * (a2 * b1 + b2 * a1);
  m[1][1] = a1 * a1 - a2 * a2 + b1 * b1 - b2 * b2;
  m[1][2] = 2.0 * (b1 * b2 - a1 * a2);
  m[2][0] = 2.0 * (a2 * b2 - b1 * a1);
  m[2][1] = 2.0 * (b2 * b1 + a2 * a1);
  m[2][2] = a1 * a1 - a2 * a2 - b1 * b1 + b2 * b2;
  return SO3Element(m, SO3Element::Trusted{});
}

std::pair<SU2Element, SU2Element> lift_so3(const SO3Element& c) {
  const double c11 = c(0, 0), c22 = c(1, 1), c33 = c(2, 2);
  const double c12 = c(0, 1), c13 = c(0, 2), c21 = c(1, 0), c31 = c(2, 0);
  const double c23 = c(1, 2), c32 = c(2, 1);
  const double orientation = sgn(c32 - c23);

  double a1 = 0.0, a2 = 0.0, b1 = 0.0, b2 = 0.0;
  if (c11 >= 0.0) {
    // |A| >= |B|: take A from the diagonal, then the smaller component of A and
    // all of B from the off-diagonal entries, dividing by the larger of |A1|, |A2|.
    a1 = 0.5 * std::sqrt(std::max(0.0, 1.0 + c11 + c22 + c33));
    a2 = orientation * 0.5 * std::sqrt(std::max(0.0, 1.0 + c11 - c22 - c33));
    if (std::abs(a1) >= std::abs(a2)) {
      a2 = (c32 - c23) / (4.0 * a1);
      b1 = (c13 - c31) / (4.0 * a1);
      b2 = (c21 - c12) / (4.0 * a1);
    } else {
      a1 = (c32 - c23) / (4.0 * a2);
      b1 = (c12 + c21) / (4.0 * a2);
      b2 = (c13 + c31) / (4.0 * a2);
    }
  } else {
    // |B| > |A|: the diagonal formulas for A lose accuracy, so recover B first
    // and solve the first row and column for A.
    b1 = 0.5 * std::sqrt(std::max(0.0, 1.0 - c11 + c22 - c33));
    b2 = sgn(c23 + c32) * 0.5 * std::sqrt(std::max(0.0, 1.0 - c11 - c22 + c33));
    if (std::abs(b1) >= std::abs(b2)) {
      b2 = (c23 + c32) / (4.0 * b1);
      a1 = (c13 - c31) / (4.0 * b1);
      a2 = (c12 + c21) / (4.0 * b1);
    } else {
      b1 = (c23 + c32) / (4.0 * b2);
      a1 = (c21 - c12) / (4.0 * b2);
      a2 = (c13 + c31) / (4.0 * b2);
    }
    if (a1 < 0.0 || (a1 == 0.0 && a2 * orientation < 0.0)) {
      a1 = -a1;
      a2 = -a2;
      b1 = -b1;
      b2 = -b2;
    }
  }
  const double norm = std::sqrt(a1 * a1 + a2 * a2 + b1 * b1 + b2 * b2);
  const SU2Element lift(Complex{a1 / norm, a2 / norm}, Complex{b1 / norm, b2 / norm});
  return {lift, -lift};
}

double max_abs_diff(const SU2Element& g, const SU2Element& h) noexcept {
  const auto x = g.components();
  const auto y = h.components();
  double d = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) d = std::max(d, std::abs(x[i] - y[i]));
  return d;
}

double max_abs_diff(const SO3Element& lhs, const SO3Element& rhs) noexcept {
  double d = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) d = std::max(d, std::abs(lhs(i, j) - rhs(i, j)));
  return d;
}

}  // namespace subriemann
