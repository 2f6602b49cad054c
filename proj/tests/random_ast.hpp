#pragma once

#include <cstdint>

#include "secantq/expr.hpp"
#include "secantq/rng.hpp"

namespace testing_support {

// Random tree over the full node set; constants are non-negative because the
// grammar has no negative literals (a leading '-' is a Neg node).
inline secantq::Expr random_ast(secantq::SplitMix64& rng, int depth) {
  using secantq::Expr;
  if (depth <= 1 || rng.below(4) == 0) {
    switch (rng.below(3)) {
      case 0: return Expr::var(secantq::ast::Var::x);
      case 1: return Expr::var(secantq::ast::Var::y);
      default: return Expr::constant(static_cast<double>(rng.below(1000)) / 8.0 + (rng.below(2) ? rng.unit() : 0.0));
    }
  }
  switch (rng.below(7)) {
    case 0: return Expr::neg(random_ast(rng, depth - 1));
    case 1: return Expr::pow(random_ast(rng, depth - 1), static_cast<std::uint32_t>(rng.below(4)));
    default: {
      const auto op = static_cast<secantq::ast::BinOp>(rng.below(4));
      return Expr::binary(op, random_ast(rng, depth - 1), random_ast(rng, depth - 1));
    }
  }
}

}  // namespace testing_support
