#pragma once

// Experiments driven by the command-line front-end: a single secant plane with
// all three quotient formulas side by side, the shrinking-triangle sweep that
// exposes path-dependent limits of q, and the one-variable strong-derivative
// convergence check.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "secantq/expr.hpp"
#include "secantq/secant.hpp"

namespace secantq {

// |q1 - q2| / max(1, |q1|, |q2|)
double quotient_discrepancy(Vector2 q1, Vector2 q2) noexcept;

struct QuotientTriple {
  Vector2 by_quotient;
  Vector2 by_normals;
  Vector2 by_determinant;

  double max_discrepancy() const noexcept;
};

/// All three routes on the same samples. Throws CollinearPoints.
QuotientTriple all_quotients(const SamplePoint& sa, const SamplePoint& sb, const SamplePoint& sc);

struct SecantReport {
  std::array<SamplePoint, 3> samples;
  double tau = 0.0;
  Vector2 edge_a, edge_b, edge_c;
  QuotientTriple q;
  std::array<double, 3> plane_at{};  // plane evaluated at a, b, c
  PlaneNormal3 normal;
};

/// Throws EvalError from f, CollinearPoints for degenerate triangles.
SecantReport compute_secant(const Expr& f, Vector2 a, Vector2 b, Vector2 c);

// ---------------------------------------------------------------------------
// Sweeps

// Triangle shape for a given (delta, eta), anchored at x0:
//   symmetric: b = x0 + (-delta, eta), c = x0 + (delta, eta)
//   rotated:   the symmetric offsets turned by 45 degrees
enum class TriangleFamily { symmetric, rotated };

struct SweepConfig {
  Expr f = Expr::constant(0.0);
  Vector2 x0;
  double k = 1.0;  // eta = delta^k
  double delta_start = 1e-1;
  double delta_end = 1e-5;
  std::size_t steps = 5;
  TriangleFamily family = TriangleFamily::symmetric;

  /// Throws std::invalid_argument on an unusable configuration.
  void validate() const;
};

struct SweepRecord {
  double delta = 0.0;
  double eta = 0.0;
  bool degenerate = false;
  Vector2 q;  // zero when degenerate
  double q_norm = 0.0;
  PlaneNormal3 normal;
  double tangent_gap = 0.0;      // angle between secant and tangent plane normals, [0, pi/2]
  double discrepancy = 0.0;      // spread of the three q formulas
};

// Three domain points of the family at one (delta, eta).
std::array<Vector2, 3> family_triangle(TriangleFamily family, Vector2 x0, double delta, double eta);

/// start, start*r, ..., end with constant ratio; steps >= 2.
std::vector<double> geometric_schedule(double start, double end, std::size_t steps);

/// Rows in decreasing delta. Degenerate or unevaluable rows are flagged, not fatal.
std::vector<SweepRecord> run_sweep(const SweepConfig& cfg);

enum class LimitKind { vanishing, finite, divergent, indeterminate };

std::string_view to_string(LimitKind kind) noexcept;

struct LimitSummary {
  LimitKind kind = LimitKind::indeterminate;
  double ratio = 0.0;  // |q| at the smallest delta over |q| at the one before
  Vector2 q;           // q at the smallest delta
  PlaneNormal3 normal;
};

/// Compares the two smallest-delta non-degenerate rows:
/// ratio < 0.5 vanishing; ratio in [0.9, 1.1] with |dq| < 1e-6 finite;
/// ratio > 2 divergent; anything else indeterminate.
LimitSummary classify_limit(std::span<const SweepRecord> rows);

// ---------------------------------------------------------------------------
// Strong derivative

struct StrongDerivativeLevel {
  double h = 0.0;
  double max_error = 0.0;
  std::size_t trials = 0;
};

struct StrongDerivativeReport {
  double x0 = 0.0;
  double derivative = 0.0;  // reference value the quotients are compared with
  std::vector<StrongDerivativeLevel> levels;
};

/// h = 10^-1, ..., 10^-levels.
std::vector<double> decade_schedule(std::size_t levels);

/// For each h, draws `trials` pairs a != b uniformly in [x0 - h, x0 + h] and
/// records max |(g(b) - g(a)) / (b - a) - g'(x0)|. g'(x0) is the central
/// difference of g unless `exact_derivative` is given.
StrongDerivativeReport run_strong_derivative(const Expr& g, double x0, std::span<const double> h_schedule,
                                             std::size_t trials, std::uint64_t seed,
                                             std::optional<double> exact_derivative = std::nullopt);

}  // namespace secantq
