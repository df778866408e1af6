#pragma once

#include <utility>

#include "gnio/breakpoint.hpp"
#include "gnio/convex_oracle.hpp"

namespace gnio {

// One DP stage for an arbitrary convex g with bounded level sets: find the
// derivative-truncation breakpoints by monotone bisection (absolute
// x-tolerance tol) and return the truncated function
//
//   h(y) = g(b-) + lambda (b- - y)   for y < b-
//        = g(y)                      on [b-, b+]
//        = g(b+) + mu (y - b+)       for y > b+
//
// lazily, as three-branch callbacks over a shared copy of g.  An infinite
// penalty pins its breakpoint at the matching infinity and leaves that side
// untouched.  When the target slope is attained on a flat stretch, b- takes
// the supremum and b+ the infimum of the stretch; lambda = mu = 0 puts both
// members at the midpoint of the minimizing face.  If the target level is
// never straddled after doubling the bracket outward ~60 times, the
// breakpoint is reported as the matching infinity (defensive: valid
// instances only reach that through infinite penalties); a grossly inverted
// pair signals an inconsistent oracle via BracketFailure.
std::pair<ScalarConvexOracle, BreakpointPair> update_generic(
    const ScalarConvexOracle& g, const StagePenalty& pen, double tol = 1e-10);

// Midpoint of the minimizing face, by bisection on both one-sided
// derivatives.  Throws BracketFailure when no finite minimizer exists.
double argmin_generic(const ScalarConvexOracle& g, double tol = 1e-10);

// Full chain solver over caller-supplied losses: forward update/sum sweep,
// final argmin, backward recover.  Per-evaluation cost at stage i is O(i)
// through the lazy h chain, so the whole solve is O(n^2 log(1/tol)); this
// is the reference engine, not the fast path.
Solution solve_generic(const GnioInstance& instance,
                       const std::vector<ScalarConvexOracle>& losses,
                       double tol = 1e-10);

}  // namespace gnio
