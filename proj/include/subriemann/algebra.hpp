#pragma once

// Group and Lie-algebra arithmetic for SU(2) and SO(3).
//
// An element of SU(2) is stored as the pair (A, B) of complex numbers that
// fills the first row of
//
//     |  A        B     |
//     | -conj(B)  conj(A) |,     |A|^2 + |B|^2 = 1.
//
// su(2) is spanned by p1, p2 (horizontal) and k (vertical):
//
//     p1 = 1/2 [[0, 1], [-1, 0]],  p2 = 1/2 [[0, i], [i, 0]],  k = 1/2 [[i, 0], [0, -i]].

#include <array>
#include <complex>
#include <stdexcept>
#include <string>
#include <utility>

namespace subriemann {

using Complex = std::complex<double>;

/// Raised when a value does not satisfy the invariant of its type.
class InvariantViolation : public std::domain_error {
public:
  InvariantViolation(const std::string& invariant, double residual);

  const std::string& invariant() const noexcept { return invariant_; }
  double residual() const noexcept { return residual_; }

private:
  std::string invariant_;
  double residual_;
};

/// sgn with sgn(0) = +1.
constexpr double sgn(double x) noexcept { return x >= 0.0 ? 1.0 : -1.0; }

/// Coefficients in the basis (p1, p2, k) of su(2) or (a, b, c) of so(3).
struct AlgebraVector {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

class SU2Element {
public:
  /// Construction tolerance on | |A|^2 + |B|^2 - 1 |.
  static constexpr double kUnitTolerance = 1e-9;

  SU2Element() = default;

  /// Validates the unit invariant within kUnitTolerance and renormalizes.
  SU2Element(Complex a, Complex b);

  static SU2Element from_components(double a_re, double a_im, double b_re, double b_im) {
    return {Complex{a_re, a_im}, Complex{b_re, b_im}};
  }
  static SU2Element identity() { return {}; }

  Complex a() const noexcept { return a_; }
  Complex b() const noexcept { return b_; }
  double a_re() const noexcept { return a_.real(); }
  double a_im() const noexcept { return a_.imag(); }
  double b_re() const noexcept { return b_.real(); }
  double b_im() const noexcept { return b_.imag(); }

  std::array<double, 4> components() const noexcept {
    return {a_.real(), a_.imag(), b_.real(), b_.imag()};
  }

  SU2Element operator-() const noexcept;

private:
  struct Trusted {};
  SU2Element(Complex a, Complex b, Trusted) noexcept : a_(a), b_(b) {}
  friend SU2Element su2_mul(const SU2Element&, const SU2Element&);
  friend SU2Element su2_inv(const SU2Element&);

  Complex a_{1.0, 0.0};
  Complex b_{0.0, 0.0};
};

using Matrix3 = std::array<std::array<double, 3>, 3>;

class SO3Element {
public:
  /// Construction tolerance on M^T M - I (max entry) and det M - 1.
  static constexpr double kRotationTolerance = 1e-9;

  SO3Element();

  /// Validates orthogonality and unit determinant within kRotationTolerance.
  explicit SO3Element(const Matrix3& m);

  static SO3Element identity() { return {}; }

  /// Row-major, 0-based: (0, 0) is c11.
  double operator()(int i, int j) const noexcept { return m_[i][j]; }
  const Matrix3& matrix() const noexcept { return m_; }

  SO3Element transpose() const noexcept;

  /// Largest entry of |M - E|.
  double deviation_from_identity() const noexcept;

private:
  struct Trusted {};
  SO3Element(const Matrix3& m, Trusted) noexcept : m_(m) {}
  friend SO3Element so3_mul(const SO3Element&, const SO3Element&);
  friend SO3Element klein_omega(const SU2Element&);

  Matrix3 m_;
};

SU2Element su2_mul(const SU2Element& g, const SU2Element& h);

/// (A, B) -> (conj(A), -B).
SU2Element su2_inv(const SU2Element& g);

/// Closed-form exp(t (x p1 + y p2 + z k)).
SU2Element su2_exp(const AlgebraVector& v, double t);

SO3Element so3_mul(const SO3Element& lhs, const SO3Element& rhs);

/// Rotation block-diag(1, R(angle)) about the first coordinate axis.
SO3Element rotation_axis1(double angle);

/// Klein's two-to-one epimorphism SU(2) -> SO(3).
SO3Element klein_omega(const SU2Element& g);

/// Both preimages of C under klein_omega. The first one is canonical:
/// Re(A) = sqrt(1 + tr C) / 2 >= 0 and sgn(Im A) = sgn(c32 - c23).
std::pair<SU2Element, SU2Element> lift_so3(const SO3Element& c);

/// Largest componentwise difference.
double max_abs_diff(const SU2Element& g, const SU2Element& h) noexcept;
double max_abs_diff(const SO3Element& lhs, const SO3Element& rhs) noexcept;

}  // namespace subriemann
