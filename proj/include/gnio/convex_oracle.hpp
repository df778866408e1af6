#pragma once

#include <functional>
#include <vector>

#include "gnio/instance.hpp"

namespace gnio {

// A univariate convex loss given by value and one-sided derivative
// callbacks.  dleft and dright must be finite, non-decreasing, and satisfy
// dleft(x) <= dright(x); the subgradient at x is [dleft(x), dright(x)].
// [hint_lo, hint_hi] should bracket every finite minimizer; the solver
// doubles the bracket outward when a target derivative level lies outside.
struct ScalarConvexOracle {
  std::function<double(double)> eval;
  std::function<double(double)> dleft;
  std::function<double(double)> dright;
  double hint_lo = -1.0;
  double hint_hi = 1.0;
};

// w(x-y)^2 with derivative 2w(x-y).
ScalarConvexOracle square_oracle(double w, double y);

// w|x-y| with derivative -w / +w and a kink at y.
ScalarConvexOracle abs_oracle(double w, double y);

// Pointwise sum; the hint is the union of the operands' hints.
ScalarConvexOracle sum_oracle(const ScalarConvexOracle& f,
                              const ScalarConvexOracle& g);

// Per-point oracles for an Abs or Square instance.
std::vector<ScalarConvexOracle> oracles_for(const GnioInstance& instance);

}  // namespace gnio
