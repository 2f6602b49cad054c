#pragma once

// Geometric algebra G2 over the Euclidean plane.
//
// Basis {1, e1, e2, I2} with e1^2 = e2^2 = 1, e1 e2 = -e2 e1 = I2.
// A general element is stored densely as four coefficients; the
// geometric product is the closed-form table in mv_mul().

#include <cmath>

#include "secantq/errors.hpp"

namespace secantq {

namespace detail {
inline double require_finite(double v, const char* what) {
  if (!std::isfinite(v)) throw NonFiniteValue(std::string(what) + " must be finite");
  return v;
}
}  // namespace detail

class Vector2 {
 public:
  constexpr Vector2() = default;
  Vector2(double x, double y)
      : x_(detail::require_finite(x, "Vector2.x")), y_(detail::require_finite(y, "Vector2.y")) {}

  double x() const noexcept { return x_; }
  double y() const noexcept { return y_; }

  double norm2() const noexcept { return x_ * x_ + y_ * y_; }
  double norm() const noexcept { return std::hypot(x_, y_); }

  friend Vector2 operator+(Vector2 a, Vector2 b) { return {a.x_ + b.x_, a.y_ + b.y_}; }
  friend Vector2 operator-(Vector2 a, Vector2 b) { return {a.x_ - b.x_, a.y_ - b.y_}; }
  friend Vector2 operator-(Vector2 a) { return {-a.x_, -a.y_}; }
  friend Vector2 operator*(double s, Vector2 v) { return {s * v.x_, s * v.y_}; }
  friend Vector2 operator*(Vector2 v, double s) { return {v.x_ * s, v.y_ * s}; }
  friend Vector2 operator/(Vector2 v, double s) { return {v.x_ / s, v.y_ / s}; }
  friend bool operator==(Vector2 a, Vector2 b) noexcept { return a.x_ == b.x_ && a.y_ == b.y_; }

 private:
  double x_ = 0.0;
  double y_ = 0.0;
};

class Multivector {
 public:
  constexpr Multivector() = default;
  Multivector(double s, double x, double y, double b)
      : s_(detail::require_finite(s, "Multivector.s")),
        x_(detail::require_finite(x, "Multivector.x")),
        y_(detail::require_finite(y, "Multivector.y")),
        b_(detail::require_finite(b, "Multivector.b")) {}

  static Multivector scalar(double s) { return {s, 0.0, 0.0, 0.0}; }
  static Multivector vector(Vector2 v) { return {0.0, v.x(), v.y(), 0.0}; }
  static Multivector bivector(double b) { return {0.0, 0.0, 0.0, b}; }
  static Multivector e1() { return {0.0, 1.0, 0.0, 0.0}; }
  static Multivector e2() { return {0.0, 0.0, 1.0, 0.0}; }
  static Multivector pseudoscalar() { return {0.0, 0.0, 0.0, 1.0}; }

  double s() const noexcept { return s_; }
  double x() const noexcept { return x_; }
  double y() const noexcept { return y_; }
  double b() const noexcept { return b_; }

  Multivector grade0() const { return {s_, 0.0, 0.0, 0.0}; }
  Multivector grade1() const { return {0.0, x_, y_, 0.0}; }
  Multivector grade2() const { return {0.0, 0.0, 0.0, b_}; }
  Vector2 vector_part() const { return {x_, y_}; }

  // Clifford conjugate (s, -x, -y, -b).
  Multivector conjugate() const { return {s_, -x_, -y_, -b_}; }

  // Largest absolute coefficient.
  double max_abs() const noexcept {
    return std::fmax(std::fmax(std::fabs(s_), std::fabs(x_)), std::fmax(std::fabs(y_), std::fabs(b_)));
  }

  friend Multivector operator+(const Multivector& l, const Multivector& r) {
    return {l.s_ + r.s_, l.x_ + r.x_, l.y_ + r.y_, l.b_ + r.b_};
  }
  friend Multivector operator-(const Multivector& l, const Multivector& r) {
    return {l.s_ - r.s_, l.x_ - r.x_, l.y_ - r.y_, l.b_ - r.b_};
  }
  friend Multivector operator-(const Multivector& m) { return {-m.s_, -m.x_, -m.y_, -m.b_}; }
  friend Multivector operator*(double k, const Multivector& m) {
    return {k * m.s_, k * m.x_, k * m.y_, k * m.b_};
  }
  friend bool operator==(const Multivector& l, const Multivector& r) noexcept {
    return l.s_ == r.s_ && l.x_ == r.x_ && l.y_ == r.y_ && l.b_ == r.b_;
  }

 private:
  double s_ = 0.0;
  double x_ = 0.0;
  double y_ = 0.0;
  double b_ = 0.0;
};

struct PolarForm {
  double r = 0.0;      // |u||v|
  double theta = 0.0;  // oriented angle from u to v, in [0, 2pi)
};

enum class Side { left, right };

/// Geometric product.
Multivector mv_mul(const Multivector& lhs, const Multivector& rhs);

double vec_dot(Vector2 u, Vector2 v) noexcept;

/// I2 coefficient of u^v, i.e. det[[u.x, u.y], [v.x, v.y]].
double vec_wedge(Vector2 u, Vector2 v) noexcept;

/// v / |v|^2. Throws ZeroVector for the null vector.
Vector2 vec_inverse(Vector2 v);

/// Inverse through the Clifford conjugate: m^-1 = conj(m) / (s^2 + b^2 - x^2 - y^2).
/// Throws NonInvertible when that norm vanishes.
Multivector mv_inverse(const Multivector& m);

/// Quarter turn by the orientation. Side::right gives v I2 = (-v.y, v.x);
/// Side::left gives I2 v = (v.y, -v.x).
Vector2 rotate90(Vector2 v, Side side);

// Determinant of the matrix with rows u, v, as (u^v) I2^-1 through mv_mul.
double det2_via_wedge(Vector2 u, Vector2 v);

// Determinant of the matrix with rows u, v, as the scalar product (u I2).v.
double det2_via_rotation(Vector2 u, Vector2 v);

/// uv = r (cos theta + I2 sin theta). Throws ZeroVector if either norm is zero.
PolarForm polar_decompose(Vector2 u, Vector2 v);

}  // namespace secantq
