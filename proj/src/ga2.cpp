#include "secantq/ga2.hpp"

#include <numbers>

namespace secantq {

Multivector mv_mul(const Multivector& l, const Multivector& r) {
  return {
      l.s() * r.s() + l.x() * r.x() + l.y() * r.y() - l.b() * r.b(),
      l.s() * r.x() + l.x() * r.s() - l.y() * r.b() + l.b() * r.y(),
      l.s() * r.y() + l.y() * r.s() + l.x() * r.b() - l.b() * r.x(),
      l.s() * r.b() + l.b() * r.s() + l.x() * r.y() - l.y() * r.x(),
  };
}

double vec_dot(Vector2 u, Vector2 v) noexcept { return u.x() * v.x() + u.y() * v.y(); }

double vec_wedge(Vector2 u, Vector2 v) noexcept { return u.x() * v.y() - u.y() * v.x(); }

Vector2 vec_inverse(Vector2 v) {
  const double n2 = v.norm2();
  if (n2 == 0.0) throw ZeroVector("vector inverse of the null vector");
  return v / n2;
}

Multivector mv_inverse(const Multivector& m) {
  const double norm = m.s() * m.s() + m.b() * m.b() - m.x() * m.x() - m.y() * m.y();
  if (norm == 0.0) throw NonInvertible("multivector has zero Clifford norm");
  return (1.0 / norm) * m.conjugate();
}

Vector2 rotate90(Vector2 v, Side side) {
  const Multivector i2 = Multivector::pseudoscalar();
  const Multivector mv = Multivector::vector(v);
  return (side == Side::right ? mv_mul(mv, i2) : mv_mul(i2, mv)).vector_part();
}

double det2_via_wedge(Vector2 u, Vector2 v) {
  const Multivector mu = Multivector::vector(u);
  const Multivector mv = Multivector::vector(v);
  // u^v = (uv - vu)/2, then divide by I2 on the right.
  const Multivector wedge = 0.5 * (mv_mul(mu, mv) - mv_mul(mv, mu));
  return mv_mul(wedge.grade2(), mv_inverse(Multivector::pseudoscalar())).s();
}

double det2_via_rotation(Vector2 u, Vector2 v) { return vec_dot(rotate90(u, Side::right), v); }

PolarForm polar_decompose(Vector2 u, Vector2 v) {
  if (u.norm2() == 0.0 || v.norm2() == 0.0) throw ZeroVector("polar form needs non-zero vectors");
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double theta = std::atan2(vec_wedge(u, v), vec_dot(u, v));
  if (theta < 0.0) theta += two_pi;
  if (theta >= two_pi) theta = 0.0;
  return {u.norm() * v.norm(), theta};
}

}  // namespace secantq
