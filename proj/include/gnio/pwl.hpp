#pragma once

#include <map>

#include "gnio/breakpoint.hpp"
#include "gnio/instance.hpp"

namespace gnio {

// Convex piecewise linear function: an ordered tree of breakpoints carrying
// positive slope deltas, plus the boundary slopes.  The slope left of every
// key is sL plus the deltas of all smaller keys; invariant
// sL + sum(deltas) = sR.  Duplicate breakpoints merge by adding deltas, so
// tree size never exceeds the number of distinct breakpoints.
struct PwlFunction {
  std::map<double, double> tree;
  double sL = 0.0;
  double sR = 0.0;
};

// w|x - y|: one breakpoint with a 2w slope jump.
PwlFunction pwl_from_abs(double w, double y);

// Adds w|x - y| in place: insert-or-merge (y, 2w), widen boundary slopes.
PwlFunction& pwl_sum(PwlFunction& h, double w, double y);

// One DP stage in place: truncate the derivative to [-lambda, mu].  Left
// side: if lambda = inf, or -lambda is below every slope the function
// attains, b- = -inf and nothing changes; else pop minimum entries while
// the running slope stays <= -lambda, land b- on the breakpoint whose jump
// crosses -lambda, shave the consumed part of that jump (residuals below
// 1e-12 drop the entry), and set sL = -lambda.  A plateau exactly at
// -lambda resolves to its right endpoint (supremum); the mirrored right
// side resolves plateaus at mu to the left endpoint (infimum).
// lambda = mu = 0 collapses to the constant min g at the flat-face
// midpoint.  Pops and entry removals go to stats as deletions; pwl_sum
// insertions are counted by the caller.
BreakpointPair pwl_update(PwlFunction& g, const StagePenalty& pen,
                          SolverStats& stats, std::size_t stage = 0);

// Minimizer: walk ascending until the running slope reaches 0; a flat
// optimal face resolves to its midpoint.
double pwl_argmin(const PwlFunction& g);

// One-sided derivatives (the function has kinks).
double pwl_dleft(const PwlFunction& g, double x);
double pwl_dright(const PwlFunction& g, double x);

double pwl_value_diff(const PwlFunction& g, double x, double x0);

// Structural checks: positive deltas, strictly increasing keys (by map
// construction), sL + sum = sR.  Throws DegeneratePiece on violation.
void pwl_check(const PwlFunction& g);

// Full l1 solver: forward sum/update sweep, argmin, backward recover.
Solution solve_l1(const GnioInstance& instance);

}  // namespace gnio
