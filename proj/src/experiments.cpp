#include "secantq/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "secantq/rng.hpp"

namespace secantq {

double quotient_discrepancy(Vector2 q1, Vector2 q2) noexcept {
  const double scale = std::max({1.0, q1.norm(), q2.norm()});
  return std::hypot(q1.x() - q2.x(), q1.y() - q2.y()) / scale;
}

double QuotientTriple::max_discrepancy() const noexcept {
  return std::max({quotient_discrepancy(by_quotient, by_normals), quotient_discrepancy(by_quotient, by_determinant),
                   quotient_discrepancy(by_normals, by_determinant)});
}

QuotientTriple all_quotients(const SamplePoint& sa, const SamplePoint& sb, const SamplePoint& sc) {
  return {q_quotient(sa, sb, sc), q_normal_combination(sa, sb, sc), plane_from_determinant(sa, sb, sc).q};
}

SecantReport compute_secant(const Expr& f, Vector2 a, Vector2 b, Vector2 c) {
  SecantReport r;
  r.samples = {SamplePoint(a, eval2(f, a.x(), a.y())), SamplePoint(b, eval2(f, b.x(), b.y())),
               SamplePoint(c, eval2(f, c.x(), c.y()))};
  const Triangle tri(a, b, c);
  r.tau = tri.tau();
  r.edge_a = tri.edge_a();
  r.edge_b = tri.edge_b();
  r.edge_c = tri.edge_c();
  r.q = all_quotients(r.samples[0], r.samples[1], r.samples[2]);
  const SecantPlane plane{a, r.samples[0].fval, r.q.by_quotient};
  for (std::size_t i = 0; i < 3; ++i) r.plane_at[i] = plane_eval(plane, r.samples[i].p);
  r.normal = plane_unit_normal3(plane);
  return r;
}

// ---------------------------------------------------------------------------

void SweepConfig::validate() const {
  if (!(k > 0.0) || !std::isfinite(k)) throw std::invalid_argument("path exponent k must be positive");
  if (!(delta_start > 0.0) || !(delta_end > 0.0) || !std::isfinite(delta_start))
    throw std::invalid_argument("delta bounds must be positive");
  if (!(delta_start > delta_end)) throw std::invalid_argument("delta-start must exceed delta-end");
  if (steps < 2) throw std::invalid_argument("a sweep needs at least two steps");
}

std::array<Vector2, 3> family_triangle(TriangleFamily family, Vector2 x0, double delta, double eta) {
  Vector2 ob(-delta, eta);
  Vector2 oc(delta, eta);
  if (family == TriangleFamily::rotated) {
    const double h = std::numbers::sqrt2 / 2.0;
    const auto turn = [h](Vector2 v) { return Vector2(h * (v.x() - v.y()), h * (v.x() + v.y())); };
    ob = turn(ob);
    oc = turn(oc);
  }
  return {x0, x0 + ob, x0 + oc};
}

std::vector<double> geometric_schedule(double start, double end, std::size_t steps) {
  if (steps < 2) throw std::invalid_argument("geometric schedule needs at least two steps");
  std::vector<double> out(steps);
  const double ratio = std::pow(end / start, 1.0 / static_cast<double>(steps - 1));
  for (std::size_t i = 0; i < steps; ++i) out[i] = start * std::pow(ratio, static_cast<double>(i));
  out.front() = start;
  out.back() = end;
  return out;
}

namespace {

// Angle between two planes given by unit normals, folded into [0, pi/2].
double plane_angle(const PlaneNormal3& n, const PlaneNormal3& t) {
  const double dot = std::fabs(n.nx * t.nx + n.ny * t.ny + n.nz * t.nz);
  const double cx = n.ny * t.nz - n.nz * t.ny;
  const double cy = n.nz * t.nx - n.nx * t.nz;
  const double cz = n.nx * t.ny - n.ny * t.nx;
  return std::atan2(std::hypot(cx, cy, cz), dot);
}

}  // namespace

std::vector<SweepRecord> run_sweep(const SweepConfig& cfg) {
  cfg.validate();
  const Vector2 grad = grad_fd(cfg.f, cfg.x0);
  const PlaneNormal3 tangent = normalize_normal3(grad.x(), grad.y(), -1.0);

  const std::vector<double> deltas = geometric_schedule(cfg.delta_start, cfg.delta_end, cfg.steps);
  std::vector<SweepRecord> rows(deltas.size());
  // Rows are independent; each writes only its own slot.
  std::transform(deltas.begin(), deltas.end(), rows.begin(), [&](double delta) {
    SweepRecord rec;
    rec.delta = delta;
    rec.eta = std::pow(delta, cfg.k);
    try {
      const auto pts = family_triangle(cfg.family, cfg.x0, delta, rec.eta);
      std::array<SamplePoint, 3> s;
      for (std::size_t i = 0; i < 3; ++i) s[i] = SamplePoint(pts[i], eval2(cfg.f, pts[i].x(), pts[i].y()));
      const QuotientTriple q = all_quotients(s[0], s[1], s[2]);
      rec.q = q.by_quotient;
      rec.q_norm = rec.q.norm();
      rec.discrepancy = q.max_discrepancy();
      rec.normal = plane_unit_normal3({s[0].p, s[0].fval, rec.q});
      rec.tangent_gap = plane_angle(rec.normal, tangent);
    } catch (const CollinearPoints&) {
      rec.degenerate = true;
    } catch (const EvalError&) {
      rec.degenerate = true;
    } catch (const NonFiniteValue&) {
      rec.degenerate = true;
    }
    return rec;
  });
  return rows;
}

std::string_view to_string(LimitKind kind) noexcept {
  switch (kind) {
    case LimitKind::vanishing: return "vanishing";
    case LimitKind::finite: return "finite";
    case LimitKind::divergent: return "divergent";
    case LimitKind::indeterminate: break;
  }
  return "indeterminate";
}

LimitSummary classify_limit(std::span<const SweepRecord> rows) {
  std::vector<const SweepRecord*> good;
  for (const auto& r : rows)
    if (!r.degenerate) good.push_back(&r);
  LimitSummary out;
  if (good.size() < 2) return out;
  std::sort(good.begin(), good.end(), [](const SweepRecord* l, const SweepRecord* r) { return l->delta > r->delta; });
  const SweepRecord& prev = *good[good.size() - 2];
  const SweepRecord& last = *good.back();
  out.q = last.q;
  out.normal = last.normal;
  if (prev.q_norm == 0.0) {
    out.ratio = last.q_norm == 0.0 ? 1.0 : INFINITY;
  } else {
    out.ratio = last.q_norm / prev.q_norm;
  }
  const double step = std::hypot(last.q.x() - prev.q.x(), last.q.y() - prev.q.y());
  if (last.q_norm == 0.0 && prev.q_norm == 0.0) out.kind = LimitKind::vanishing;
  else if (out.ratio < 0.5) out.kind = LimitKind::vanishing;
  else if (out.ratio >= 0.9 && out.ratio <= 1.1 && step < 1e-6) out.kind = LimitKind::finite;
  else if (out.ratio > 2.0) out.kind = LimitKind::divergent;
  return out;
}

// ---------------------------------------------------------------------------

std::vector<double> decade_schedule(std::size_t levels) {
  std::vector<double> out;
  out.reserve(levels);
  for (std::size_t i = 1; i <= levels; ++i) out.push_back(std::pow(10.0, -static_cast<double>(i)));
  return out;
}

StrongDerivativeReport run_strong_derivative(const Expr& g, double x0, std::span<const double> h_schedule,
                                             std::size_t trials, std::uint64_t seed,
                                             std::optional<double> exact_derivative) {
  if (trials == 0) throw std::invalid_argument("strong-derivative needs at least one trial");
  StrongDerivativeReport report;
  report.x0 = x0;
  report.derivative = exact_derivative ? *exact_derivative : deriv_fd(g, x0);

  SplitMix64 rng(seed);
  for (const double h : h_schedule) {
    if (!(h > 0.0)) throw std::invalid_argument("step sizes must be positive");
    StrongDerivativeLevel level{h, 0.0, trials};
    for (std::size_t t = 0; t < trials; ++t) {
      double a = rng.uniform(x0 - h, x0 + h);
      double b = rng.uniform(x0 - h, x0 + h);
      while (a == b) b = rng.uniform(x0 - h, x0 + h);
      const double q = diff_quotient_1d(eval2(g, a, 0.0), eval2(g, b, 0.0), a, b);
      level.max_error = std::max(level.max_error, std::fabs(q - report.derivative));
    }
    report.levels.push_back(level);
  }
  return report;
}

}  // namespace secantq
