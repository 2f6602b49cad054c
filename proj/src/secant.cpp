#include "secantq/secant.hpp"

#include <algorithm>
#include <stdexcept>

namespace secantq {

namespace {

constexpr double kGradePurityTolerance = 1e-10;

bool is_collinear(double two_tau, double max_edge2) noexcept {
  return std::fabs(two_tau) <= kCollinearTolerance * max_edge2;
}

}  // namespace

Triangle::Triangle(Vector2 a, Vector2 b, Vector2 c)
    : a_(a), b_(b), c_(c), da_(c - b), db_(a - c), dc_(b - a), two_tau_(vec_wedge(b - a, c - a)) {
  const double max_edge2 = std::max({da_.norm2(), db_.norm2(), dc_.norm2()});
  if (is_collinear(two_tau_, max_edge2)) throw CollinearPoints("sample points are collinear");
}

double oriented_area(Vector2 a, Vector2 b, Vector2 c) noexcept { return 0.5 * vec_wedge(b - a, c - a); }

Multivector q_quotient_raw(const SamplePoint& sa, const SamplePoint& sb, const SamplePoint& sc) {
  const Triangle tri(sa.p, sb.p, sc.p);
  const Vector2 numerator = (sb.fval - sa.fval) * (sc.p - sa.p) - (sc.fval - sa.fval) * (sb.p - sa.p);
  const Multivector orientation = Multivector::bivector(tri.two_tau());
  return mv_mul(Multivector::vector(numerator), mv_inverse(orientation));
}

Vector2 q_quotient(const SamplePoint& sa, const SamplePoint& sb, const SamplePoint& sc) {
  const Multivector raw = q_quotient_raw(sa, sb, sc);
  const Vector2 q = raw.vector_part();
  const double residue = std::fmax(std::fabs(raw.s()), std::fabs(raw.b()));
  if (residue > kGradePurityTolerance * std::fmax(1.0, q.norm()))
    throw std::logic_error("vector quotient has non-vector grades");
  return q;
}

Vector2 q_normal_combination(const SamplePoint& sa, const SamplePoint& sb, const SamplePoint& sc) {
  const Triangle tri(sa.p, sb.p, sc.p);
  const Vector2 perp_a = rotate90(tri.edge_a(), Side::left);
  const Vector2 perp_b = rotate90(tri.edge_b(), Side::left);
  const Vector2 perp_c = rotate90(tri.edge_c(), Side::left);
  const double two_tau = tri.two_tau();
  return ((sa.fval + sb.fval) / two_tau) * perp_c + ((sa.fval + sc.fval) / two_tau) * perp_b +
         ((sb.fval + sc.fval) / two_tau) * perp_a;
}

SecantPlane plane_from_determinant(const SamplePoint& sa, const SamplePoint& sb, const SamplePoint& sc) {
  // Rows of the 3x3 determinant, relative to a:
  //   | x - a1   y - a2   z - fa |
  //   | b1 - a1  b2 - a2  fb - fa |
  //   | c1 - a1  c2 - a2  fc - fa |
  const double b1 = sb.p.x() - sa.p.x();
  const double b2 = sb.p.y() - sa.p.y();
  const double c1 = sc.p.x() - sa.p.x();
  const double c2 = sc.p.y() - sa.p.y();
  const double fb = sb.fval - sa.fval;
  const double fc = sc.fval - sa.fval;

  // Cofactors along the first row.
  const double cof_x = b2 * fc - fb * c2;
  const double cof_y = -(b1 * fc - fb * c1);
  const double cof_z = b1 * c2 - b2 * c1;

  const double e1 = (sc.p.x() - sb.p.x()) * (sc.p.x() - sb.p.x()) + (sc.p.y() - sb.p.y()) * (sc.p.y() - sb.p.y());
  const double e2 = c1 * c1 + c2 * c2;
  const double e3 = b1 * b1 + b2 * b2;
  if (is_collinear(cof_z, std::max({e1, e2, e3}))) throw CollinearPoints("sample points are collinear");

  // cof_x (x - a1) + cof_y (y - a2) + cof_z (z - fa) = 0
  return {sa.p, sa.fval, Vector2(-cof_x / cof_z, -cof_y / cof_z)};
}

double plane_eval(const SecantPlane& plane, Vector2 v) noexcept {
  return plane.fbase + vec_dot(plane.q, v - plane.base);
}

PlaneNormal3 normalize_normal3(double nx, double ny, double nz) {
  const double len = std::hypot(nx, ny, nz);
  if (len == 0.0 || !std::isfinite(len)) throw ZeroVector("plane normal has no direction");
  nx /= len;
  ny /= len;
  nz /= len;
  const bool flip = nz > 0.0 || (nz == 0.0 && (ny < 0.0 || (ny == 0.0 && nx < 0.0)));
  if (flip) return {-nx, -ny, -nz};
  return {nx, ny, nz};
}

PlaneNormal3 plane_unit_normal3(const SecantPlane& plane) {
  return normalize_normal3(plane.q.x(), plane.q.y(), -1.0);
}

double diff_quotient_1d(double ga, double gb, double a, double b) {
  if (a == b) throw CoincidentAbscissae("difference quotient needs distinct abscissae");
  return (gb - ga) / (b - a);
}

SecantLine1d secant_line_1d(double ga, double gb, double a, double b) {
  return {a, ga, diff_quotient_1d(ga, gb, a, b)};
}

}  // namespace secantq
