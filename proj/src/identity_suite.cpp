#include "secantq/identity_suite.hpp"

#include <cstdio>
#include <numbers>
#include <stdexcept>

#include "secantq/rng.hpp"

namespace secantq {

namespace {

std::string describe(const Vector2& v) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "(%.17g, %.17g)", v.x(), v.y());
  return buf;
}

std::string describe(const Multivector& m) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "(%.17g, %.17g, %.17g, %.17g)", m.s(), m.x(), m.y(), m.b());
  return buf;
}

double max_abs_diff(const Multivector& l, const Multivector& r) { return (l - r).max_abs(); }

class Tracker {
 public:
  Tracker(std::string name, double tolerance) {
    result_.name = std::move(name);
    result_.tolerance = tolerance;
  }

  template <class Describe>
  void record(double error, Describe&& describe_input) {
    if (!(error <= result_.tolerance)) {
      if (result_.passed) result_.first_failure = describe_input();
      result_.passed = false;
    }
    if (!(error <= result_.max_error)) result_.max_error = error;
  }

  InvariantResult take() { return std::move(result_); }

 private:
  InvariantResult result_;
};

Vector2 random_vector(SplitMix64& rng) { return {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)}; }

Multivector random_multivector(SplitMix64& rng) {
  return {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
}

}  // namespace

bool IdentityReport::all_passed() const {
  for (const auto& r : results)
    if (!r.passed) return false;
  return true;
}

const InvariantResult* IdentityReport::find(const std::string& name) const {
  for (const auto& r : results)
    if (r.name == name) return &r;
  return nullptr;
}

IdentityReport run_ga_check(std::uint64_t seed, std::size_t trials, const ProductFn& product) {
  if (trials == 0) throw std::invalid_argument("ga-check needs at least one trial");

  constexpr double ulp = 0x1.0p-52;
  Tracker grades("grade-projection", 0.0);
  Tracker quadratic("quadratic-form", ulp);
  Tracker symmetric("symmetric-part", 1e-13);
  Tracker anticomm("anti-commutation", 1e-13);
  Tracker assoc("associativity", 1e-12);
  Tracker pseudo("pseudoscalar-square", 0.0);
  Tracker orient("orientation-invariance", 1e-14);
  Tracker zerodiv("zero-divisor", 0.0);
  Tracker vinv("vector-inverse", 1e-14);
  Tracker minv("multivector-inverse", 1e-12);
  Tracker det("determinant-paths", 0.0);
  Tracker polar("polar-form", 1e-12);

  const Multivector one = Multivector::scalar(1.0);
  const Multivector i2 = Multivector::pseudoscalar();
  const Multivector e1 = Multivector::e1();

  SplitMix64 rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    const Vector2 u = random_vector(rng);
    const Vector2 v = random_vector(rng);
    const Multivector mu = Multivector::vector(u);
    const Multivector mv = Multivector::vector(v);
    const Multivector m1 = random_multivector(rng);
    const Multivector m2 = random_multivector(rng);
    const Multivector m3 = random_multivector(rng);
    const auto pair = [&] { return "u=" + describe(u) + " v=" + describe(v); };

    {
      const bool ok = m1.grade0() + m1.grade1() + m1.grade2() == m1;
      grades.record(ok ? 0.0 : 1.0, [&] { return describe(m1); });
    }

    {
      const double n2 = v.norm2();
      quadratic.record(max_abs_diff(product(mv, mv), Multivector::scalar(n2)) / n2, [&] { return describe(v); });
    }

    const Multivector uv = product(mu, mv);
    const Multivector vu = product(mv, mu);
    const double scale = u.norm() * v.norm();
    const double dot = vec_dot(u, v);
    {
      const Multivector sym = 0.5 * (uv + vu);
      symmetric.record(max_abs_diff(sym, Multivector::scalar(dot)) / scale, pair);
      const Multivector controlled = Multivector::scalar(2.0 * dot) - uv;
      anticomm.record(max_abs_diff(vu, controlled) / scale, pair);
    }

    {
      const Multivector lhs = product(product(m1, m2), m3);
      const Multivector rhs = product(m1, product(m2, m3));
      assoc.record(max_abs_diff(lhs, rhs), [&] { return describe(m1) + " " + describe(m2) + " " + describe(m3); });
    }

    {
      const double err = std::fmax(max_abs_diff(product(i2, i2), Multivector::scalar(-1.0)),
                                   std::fmax(max_abs_diff(product(i2, mv_inverse(i2)), one),
                                             max_abs_diff(mv_inverse(i2), -i2)));
      pseudo.record(err, [] { return std::string("I2"); });
    }

    {
      const double angle = rng.uniform(0.0, 2.0 * std::numbers::pi);
      const bool reflect = (rng() & 1u) != 0;
      const double c = std::cos(angle), s = std::sin(angle);
      const Vector2 f1(c, s);
      const Vector2 f2 = reflect ? Vector2(s, -c) : Vector2(-s, c);
      const double sign = reflect ? -1.0 : 1.0;
      const Multivector f12 = product(Multivector::vector(f1), Multivector::vector(f2));
      orient.record(max_abs_diff(f12, sign * i2), [&] { return "e1'=" + describe(f1) + " e2'=" + describe(f2); });
    }

    zerodiv.record(product(one + e1, one - e1).max_abs(), [] { return std::string("(1+e1)(1-e1)"); });

    if (v.norm2() > 0.0) {
      const Multivector inv = Multivector::vector(vec_inverse(v));
      vinv.record(max_abs_diff(product(mv, inv), one), [&] { return describe(v); });
    }

    {
      const double norm = m1.s() * m1.s() + m1.b() * m1.b() - m1.x() * m1.x() - m1.y() * m1.y();
      const double mag = m1.s() * m1.s() + m1.b() * m1.b() + m1.x() * m1.x() + m1.y() * m1.y();
      if (std::fabs(norm) >= 0.1 * mag && mag > 0.0)
        minv.record(max_abs_diff(product(m1, mv_inverse(m1)), one), [&] { return describe(m1); });
    }

    {
      const double schoolbook = u.x() * v.y() - u.y() * v.x();
      const Multivector wedge = 0.5 * (uv - vu);
      const double via_wedge = product(wedge.grade2(), mv_inverse(i2)).s();
      const double via_rotation = vec_dot(product(mu, i2).vector_part(), v);
      const bool exact = via_wedge == schoolbook && via_rotation == schoolbook &&
                         det2_via_wedge(u, v) == schoolbook && det2_via_rotation(u, v) == schoolbook;
      const double err = std::fmax(std::fabs(via_wedge - schoolbook), std::fabs(via_rotation - schoolbook));
      det.record(exact ? 0.0 : std::fmax(err, 0x1.0p-1074), pair);
    }

    if (scale > 0.0) {
      const PolarForm pf = polar_decompose(u, v);
      const double err = std::fmax(std::fabs(pf.r * std::cos(pf.theta) - uv.s()),
                                   std::fabs(pf.r * std::sin(pf.theta) - uv.b())) /
                         pf.r;
      polar.record(err, pair);
    }
  }

  IdentityReport report;
  report.seed = seed;
  report.trials = trials;
  for (Tracker* t : {&grades, &quadratic, &symmetric, &anticomm, &assoc, &pseudo, &orient, &zerodiv, &vinv, &minv,
                     &det, &polar})
    report.results.push_back(t->take());
  return report;
}

}  // namespace secantq
