#pragma once

// Secant planes of graphs z = f(x, y) through three sample points, and
// the one-variable secant line they generalize.
//
// The plane through (a, f(a)), (b, f(b)), (c, f(c)) is written
//
//     z = f(a) + q . (v - a)
//
// and q, the difference vector quotient, is available three ways:
//   q_quotient            geometric quotient N (2 tau I2)^-1 in G2
//   q_normal_combination  symmetric combination of the rotated edges
//   plane_from_determinant  Laplace expansion of the 3x3 plane determinant
// The last one touches no G2 code and serves as the reference for the others.

#include <array>

#include "secantq/ga2.hpp"

namespace secantq {

struct SamplePoint {
  Vector2 p;
  double fval = 0.0;

  SamplePoint() = default;
  SamplePoint(Vector2 point, double value) : p(point), fval(detail::require_finite(value, "SamplePoint.fval")) {}
};

// |2 tau| at or below this fraction of (longest edge)^2 counts as collinear.
inline constexpr double kCollinearTolerance = 1e-12;

/// Non-degenerate oriented triangle with cached edge vectors
/// da = c - b, db = a - c, dc = b - a and doubled signed area.
class Triangle {
 public:
  /// Throws CollinearPoints when the points do not span the plane.
  Triangle(Vector2 a, Vector2 b, Vector2 c);

  Vector2 a() const noexcept { return a_; }
  Vector2 b() const noexcept { return b_; }
  Vector2 c() const noexcept { return c_; }
  Vector2 edge_a() const noexcept { return da_; }
  Vector2 edge_b() const noexcept { return db_; }
  Vector2 edge_c() const noexcept { return dc_; }
  double two_tau() const noexcept { return two_tau_; }
  double tau() const noexcept { return 0.5 * two_tau_; }

 private:
  Vector2 a_, b_, c_;
  Vector2 da_, db_, dc_;
  double two_tau_ = 0.0;
};

struct SecantPlane {
  Vector2 base;
  double fbase = 0.0;
  Vector2 q;
};

// Unit normal of a plane in (x, y, z) space, oriented with nz <= 0.
struct PlaneNormal3 {
  double nx = 0.0;
  double ny = 0.0;
  double nz = -1.0;
};

/// Signed area tau of the triangle (a, b, c), positive when counter-clockwise.
double oriented_area(Vector2 a, Vector2 b, Vector2 c) noexcept;

/// Raw G2 product [(fb - fa)(c - a) - (fc - fa)(b - a)] [(b - a)^(c - a)]^-1
/// before grade projection. Throws CollinearPoints.
Multivector q_quotient_raw(const SamplePoint& sa, const SamplePoint& sb, const SamplePoint& sc);

/// Grade-1 part of q_quotient_raw(); the discarded grades are checked to vanish.
Vector2 q_quotient(const SamplePoint& sa, const SamplePoint& sb, const SamplePoint& sc);

/// q = [(fa+fb) dc_perp + (fa+fc) db_perp + (fb+fc) da_perp] / (2 tau), d_perp = I2 d.
Vector2 q_normal_combination(const SamplePoint& sa, const SamplePoint& sb, const SamplePoint& sc);

/// Reference plane from schoolbook determinant arithmetic, anchored at sa.
SecantPlane plane_from_determinant(const SamplePoint& sa, const SamplePoint& sb, const SamplePoint& sc);

double plane_eval(const SecantPlane& plane, Vector2 v) noexcept;

PlaneNormal3 plane_unit_normal3(const SecantPlane& plane);

// Applies the PlaneNormal3 sign convention to an arbitrary non-zero 3-vector.
PlaneNormal3 normalize_normal3(double nx, double ny, double nz);

/// (gb - ga) / (b - a). Throws CoincidentAbscissae when a == b.
double diff_quotient_1d(double ga, double gb, double a, double b);

struct SecantLine1d {
  double a = 0.0;
  double ga = 0.0;
  double slope = 0.0;

  double operator()(double x) const noexcept { return ga + slope * (x - a); }
  // det[[x - a, z - ga], [b - a, gb - ga]] with b, gb the second sample.
  double determinant_form(double x, double z, double b, double gb) const noexcept {
    return (x - a) * (gb - ga) - (z - ga) * (b - a);
  }
};

SecantLine1d secant_line_1d(double ga, double gb, double a, double b);

}  // namespace secantq
