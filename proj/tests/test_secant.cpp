#include <algorithm>
#include <array>
#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "secantq/secant.hpp"

using namespace secantq;

namespace {

std::array<SamplePoint, 3> sample(const oracle::Poly& f, const std::array<oracle::Pt, 3>& t) {
  std::array<SamplePoint, 3> s;
  for (int i = 0; i < 3; ++i) s[i] = SamplePoint(Vector2(t[i].x, t[i].y), f(t[i].x, t[i].y));
  return s;
}

double paraboloid(Vector2 v) { return v.x() * v.x() + v.y() * v.y(); }

// Sample points of the shrinking symmetric triangle a = 0, b = (-d, e), c = (d, e).
std::array<SamplePoint, 3> paraboloid_triangle(double d, double e) {
  const Vector2 a(0, 0), b(-d, e), c(d, e);
  return {SamplePoint(a, paraboloid(a)), SamplePoint(b, paraboloid(b)), SamplePoint(c, paraboloid(c))};
}

}  // namespace

TEST_CASE("oriented_area") {
  CHECK(oriented_area({0, 0}, {1, 0}, {0, 1}) == 0.5);
  CHECK(oriented_area({0, 0}, {0, 1}, {1, 0}) == -0.5);
  // Classic determinant: 0.5 * det[[-0.1, 0.1], [0.1, 0.1]] = -0.01.
  const double expected = 0.5 * static_cast<double>(oracle::det2(-0.1L, 0.1L, 0.1L, 0.1L));
  CHECK(oriented_area({0, 0}, {-0.1, 0.1}, {0.1, 0.1}) == doctest::Approx(expected).epsilon(1e-14));
  CHECK(oriented_area({0, 0}, {-0.1, 0.1}, {0.1, 0.1}) == doctest::Approx(-0.01).epsilon(1e-14));
}

TEST_CASE("oriented_area flips sign under odd permutations") {
  SplitMix64 rng(21);
  for (int i = 0; i < 500; ++i) {
    const Vector2 a(rng.uniform(-1, 1), rng.uniform(-1, 1));
    const Vector2 b(rng.uniform(-1, 1), rng.uniform(-1, 1));
    const Vector2 c(rng.uniform(-1, 1), rng.uniform(-1, 1));
    const double t = oriented_area(a, b, c);
    const double tol = 1e-14;
    CHECK(std::fabs(oriented_area(b, a, c) + t) <= tol);
    CHECK(std::fabs(oriented_area(a, c, b) + t) <= tol);
    CHECK(std::fabs(oriented_area(c, b, a) + t) <= tol);
    CHECK(std::fabs(oriented_area(b, c, a) - t) <= tol);
  }
}

TEST_CASE("Triangle edge frame") {
  SplitMix64 rng(8);
  for (int i = 0; i < 500; ++i) {
    const auto p = oracle::random_triangle(rng);
    const Triangle t({p[0].x, p[0].y}, {p[1].x, p[1].y}, {p[2].x, p[2].y});
    const Vector2 sum = t.edge_a() + t.edge_b() + t.edge_c();
    CHECK(std::fabs(sum.x()) <= 1e-15);
    CHECK(std::fabs(sum.y()) <= 1e-15);
    const double ref = static_cast<double>(
        oracle::det2(p[1].x - p[0].x, p[1].y - p[0].y, p[2].x - p[0].x, p[2].y - p[0].y));
    const double tol = 1e-12 * std::max(1e-3, std::fabs(ref));
    CHECK(std::fabs(t.two_tau() - ref) <= tol);
    CHECK(std::fabs(vec_wedge(t.edge_a(), t.edge_b()) - ref) <= tol);
    CHECK(std::fabs(vec_wedge(t.edge_b(), t.edge_c()) - ref) <= tol);
    CHECK(std::fabs(vec_wedge(t.edge_c(), t.edge_a()) - ref) <= tol);
  }
}

TEST_CASE("collinear and coincident points are rejected") {
  const SamplePoint a({0, 0}, 1), b({1, 1}, 2), c({2, 2}, 3), same({0, 0}, 5);
  CHECK_THROWS_AS(Triangle({0, 0}, {1, 1}, {2, 2}), CollinearPoints);
  CHECK_THROWS_AS(q_quotient(a, b, c), CollinearPoints);
  CHECK_THROWS_AS(q_normal_combination(a, b, c), CollinearPoints);
  CHECK_THROWS_AS(plane_from_determinant(a, b, c), CollinearPoints);
  CHECK_THROWS_AS(plane_from_determinant(a, same, c), CollinearPoints);
  CHECK_THROWS_AS(q_quotient(a, a, a), CollinearPoints);
  // Threshold is relative to the longest edge: a tiny but well-shaped triangle is fine.
  const double s = 1e-9;
  CHECK_NOTHROW(Triangle({0, 0}, {s, 0}, {0, s}));
  CHECK_THROWS_AS(Triangle({0, 0}, {1, 0}, {0.5, 1e-13}), CollinearPoints);
}

TEST_CASE("q on the affine example is the coefficient vector") {
  const auto f = [](Vector2 v) { return 2 * v.x() + 3 * v.y() + 1; };
  const Vector2 a(0, 0), b(1, 0), c(0, 1);
  const SamplePoint sa(a, f(a)), sb(b, f(b)), sc(c, f(c));
  CHECK(q_quotient(sa, sb, sc) == Vector2(2, 3));
  CHECK(q_normal_combination(sa, sb, sc) == Vector2(2, 3));
  CHECK(plane_from_determinant(sa, sb, sc).q == Vector2(2, 3));
}

TEST_CASE("q vanishes for a flat graph") {
  SplitMix64 rng(4);
  for (int i = 0; i < 100; ++i) {
    const auto p = oracle::random_triangle(rng);
    const double k = rng.uniform(-5, 5);
    const SamplePoint sa({p[0].x, p[0].y}, 0.0), sb({p[1].x, p[1].y}, 0.0), sc({p[2].x, p[2].y}, 0.0);
    CHECK(q_quotient(sa, sb, sc).norm() == 0.0);
    const SamplePoint ka({p[0].x, p[0].y}, k), kb({p[1].x, p[1].y}, k), kc({p[2].x, p[2].y}, k);
    CHECK(q_normal_combination(ka, kb, kc).norm() <= 1e-9 * std::fabs(k));
  }
}

TEST_CASE("paraboloid triangle with delta = eta = 0.1") {
  const auto s = paraboloid_triangle(0.1, 0.1);
  const auto ref = oracle::plane_slope({{{0, 0}, {-0.1, 0.1}, {0.1, 0.1}}}, {s[0].fval, s[1].fval, s[2].fval});
  CHECK(ref[0] == doctest::Approx(0.0));
  CHECK(ref[1] == doctest::Approx(0.2).epsilon(1e-14));
  for (const Vector2 q : {q_quotient(s[0], s[1], s[2]), q_normal_combination(s[0], s[1], s[2]),
                          plane_from_determinant(s[0], s[1], s[2]).q}) {
    CHECK(std::fabs(q.x()) <= 1e-14);
    CHECK(q.y() == doctest::Approx(0.2).epsilon(1e-13));
  }
}

TEST_CASE("raw quotient has no scalar or bivector part") {
  SplitMix64 rng(13);
  for (int i = 0; i < 1000; ++i) {
    const auto s = sample(oracle::random_poly(rng, 4), oracle::random_triangle(rng));
    const Multivector raw = q_quotient_raw(s[0], s[1], s[2]);
    const double bound = 1e-10 * std::max(1.0, raw.vector_part().norm());
    CHECK(std::fabs(raw.s()) <= bound);
    CHECK(std::fabs(raw.b()) <= bound);
  }
}

TEST_CASE("three quotient routes agree with the elimination oracle") {
  SplitMix64 rng(17);
  double worst = 0.0;
  for (int i = 0; i < 5000; ++i) {
    const auto t = oracle::random_triangle(rng);
    const auto f = oracle::random_poly(rng, 4);
    const auto s = sample(f, t);
    const auto ref = oracle::plane_slope(t, {s[0].fval, s[1].fval, s[2].fval});
    const double scale = std::max({1.0, std::fabs(ref[0]), std::fabs(ref[1])});
    for (const Vector2 q : {q_quotient(s[0], s[1], s[2]), q_normal_combination(s[0], s[1], s[2]),
                            plane_from_determinant(s[0], s[1], s[2]).q}) {
      worst = std::max({worst, std::fabs(q.x() - ref[0]) / scale, std::fabs(q.y() - ref[1]) / scale});
    }
  }
  INFO("worst relative deviation ", worst);
  CHECK(worst <= 1e-10);
}

TEST_CASE("secant plane interpolates its three samples") {
  SplitMix64 rng(19);
  for (int i = 0; i < 2000; ++i) {
    const auto s = sample(oracle::random_poly(rng, 4), oracle::random_triangle(rng));
    for (const SecantPlane plane : {plane_from_determinant(s[0], s[1], s[2]),
                                    SecantPlane{s[0].p, s[0].fval, q_quotient(s[0], s[1], s[2])}}) {
      for (const auto& p : s) {
        const double tol = 1e-10 * std::max(1.0, std::fabs(p.fval));
        CHECK(std::fabs(plane_eval(plane, p.p) - p.fval) <= tol);
      }
    }
  }
}

TEST_CASE("q is symmetric in the order of the samples") {
  SplitMix64 rng(23);
  for (int i = 0; i < 2000; ++i) {
    auto s = sample(oracle::random_poly(rng, 4), oracle::random_triangle(rng));
    const Vector2 ref = q_normal_combination(s[0], s[1], s[2]);
    const double scale = std::max(1.0, ref.norm());
    std::array<int, 3> idx{0, 1, 2};
    do {
      const SamplePoint& a = s[idx[0]];
      const SamplePoint& b = s[idx[1]];
      const SamplePoint& c = s[idx[2]];
      const Vector2 qn = q_normal_combination(a, b, c);
      const Vector2 qq = q_quotient(a, b, c);
      CHECK((qn - ref).norm() <= 1e-12 * scale);
      CHECK((qq - ref).norm() <= 1e-11 * scale);
    } while (std::next_permutation(idx.begin(), idx.end()));
  }
}

TEST_CASE("affine functions are reproduced exactly") {
  SplitMix64 rng(29);
  for (int i = 0; i < 1000; ++i) {
    const Vector2 v(rng.uniform(-10, 10), rng.uniform(-10, 10));
    const double phi = rng.uniform(-10, 10);
    const auto t = oracle::random_triangle(rng);
    std::array<SamplePoint, 3> s;
    for (int k = 0; k < 3; ++k) s[k] = SamplePoint({t[k].x, t[k].y}, v.x() * t[k].x + v.y() * t[k].y + phi);
    const Vector2 q = q_quotient(s[0], s[1], s[2]);
    CHECK((q - v).norm() <= 1e-12 * std::max(1.0, v.norm()));
  }
}

TEST_CASE("plane_eval") {
  const SecantPlane p{Vector2(0, 0), 1.0, Vector2(2, 3)};
  CHECK(plane_eval(p, Vector2(0, 0)) == 1.0);
  CHECK(plane_eval(p, Vector2(1, 1)) == 6.0);
  const SecantPlane shifted{Vector2(-1, 2), 4.0, Vector2(0.5, -1)};
  CHECK(plane_eval(shifted, Vector2(-1, 2)) == 4.0);
}

TEST_CASE("plane_unit_normal3") {
  const auto n0 = plane_unit_normal3({Vector2(), 0.0, Vector2(0, 0)});
  CHECK(n0.nx == 0.0);
  CHECK(n0.ny == 0.0);
  CHECK(n0.nz == -1.0);
  const auto n1 = plane_unit_normal3({Vector2(), 0.0, Vector2(0, 1)});
  CHECK(n1.ny == doctest::Approx(1 / std::sqrt(2.0)));
  CHECK(n1.nz == doctest::Approx(-1 / std::sqrt(2.0)));
  const auto big = plane_unit_normal3({Vector2(), 0.0, Vector2(0, 1000)});
  CHECK(std::hypot(big.nx, big.ny - 1.0, big.nz) <= 1e-3);
  SplitMix64 rng(31);
  for (int i = 0; i < 500; ++i) {
    const Vector2 q(rng.uniform(-1e3, 1e3), rng.uniform(-1e3, 1e3));
    const auto n = plane_unit_normal3({Vector2(), 0.0, q});
    CHECK(std::fabs(n.nx * n.nx + n.ny * n.ny + n.nz * n.nz - 1.0) <= 1e-14);
    CHECK(n.nz <= 0.0);
  }
  // Vertical planes: ny >= 0, then nx >= 0.
  const auto v = normalize_normal3(0.0, -2.0, 0.0);
  CHECK(v.ny == 1.0);
  const auto w = normalize_normal3(-3.0, 0.0, 0.0);
  CHECK(w.nx == 1.0);
  CHECK_THROWS_AS(normalize_normal3(0, 0, 0), ZeroVector);
}

TEST_CASE("one-variable difference quotient and secant line") {
  CHECK(diff_quotient_1d(1.0, 9.0, 1.0, 3.0) == 4.0);
  CHECK(diff_quotient_1d(5.0, 5.0, -1.0, 2.0) == 0.0);
  CHECK_THROWS_AS(diff_quotient_1d(1.0, 2.0, 3.0, 3.0), CoincidentAbscissae);
  CHECK_THROWS_AS(secant_line_1d(1.0, 2.0, 3.0, 3.0), CoincidentAbscissae);

  const SecantLine1d line = secant_line_1d(1.0, 9.0, 1.0, 3.0);
  CHECK(line.slope == 4.0);
  CHECK(line(1.0) == 1.0);
  CHECK(line(3.0) == 9.0);
  CHECK(line.determinant_form(1.0, 1.0, 3.0, 9.0) == 0.0);
  CHECK(line.determinant_form(3.0, 9.0, 3.0, 9.0) == 0.0);
  CHECK(secant_line_1d(5.0, 5.0, 0.0, 1.0).slope == 0.0);

  SplitMix64 rng(37);
  for (int i = 0; i < 200; ++i) {
    const double a = rng.uniform(-2, 2), b = rng.uniform(-2, 2);
    if (a == b) continue;
    const double ga = std::sin(a), gb = std::sin(b);
    CHECK(secant_line_1d(ga, gb, a, b).slope == diff_quotient_1d(ga, gb, a, b));
  }
}

TEST_CASE("strong derivative of x^2 converges at the C1 rate") {
  SplitMix64 rng(41);
  for (const double x0 : {-1.5, 0.0, 1.0, 3.0}) {
    for (const double h : {1e-1, 1e-3, 1e-5}) {
      double worst = 0.0;
      for (int i = 0; i < 1000; ++i) {
        const double a = rng.uniform(x0 - h, x0 + h), b = rng.uniform(x0 - h, x0 + h);
        if (a == b) continue;
        worst = std::max(worst, std::fabs(diff_quotient_1d(a * a, b * b, a, b) - 2 * x0));
      }
      CHECK(worst <= 2 * h);
    }
  }
}
