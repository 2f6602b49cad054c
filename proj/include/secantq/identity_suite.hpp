#pragma once

// Randomized check of the G2 identities: symmetric part equals the dot
// product, anti-commutation control, associativity, I2^2 = -1, orientation
// invariance, zero divisors, both determinant routes, polar form.
//
// The product under test is a parameter so a deliberately broken table can be
// run through the same suite.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "secantq/ga2.hpp"

namespace secantq {

using ProductFn = std::function<Multivector(const Multivector&, const Multivector&)>;

struct InvariantResult {
  std::string name;
  double max_error = 0.0;
  double tolerance = 0.0;
  bool passed = true;
  std::string first_failure;  // input that first broke the invariant, empty if none
};

struct IdentityReport {
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::vector<InvariantResult> results;

  bool all_passed() const;
  const InvariantResult* find(const std::string& name) const;
};

/// Throws std::invalid_argument when trials == 0.
IdentityReport run_ga_check(std::uint64_t seed, std::size_t trials, const ProductFn& product = mv_mul);

}  // namespace secantq
