#pragma once

#include <cstddef>
#include <vector>

namespace gnio {

// One stage of the forward pass produces the pair (b^-, b^+) bounding the
// region where the running minimand is left untouched.  Either end may be
// infinite: b^- = -inf when the downward penalty is an indicator (or the
// slope -lambda is never attained), b^+ = +inf symmetrically.  The invariant
// b^- <= b^+ holds for every stage of a convex problem.
struct BreakpointPair {
  double bminus;
  double bplus;
  std::size_t stage;  // index i of the transition (x_i, x_{i+1}) that made it
};

// x_i = min(b^+, max(b^-, x_{i+1})): clamp the later coordinate into the
// untouched interval of stage i.
inline double clamp_solution(double x_next, const BreakpointPair& bp) {
  double x = x_next;
  if (x < bp.bminus) x = bp.bminus;
  if (x > bp.bplus) x = bp.bplus;
  return x;
}

// Backward pass: given the last coordinate and the stage pairs in forward
// order (pairs[i] produced when moving from i+1 to i+2, zero-based), rebuild
// the full solution vector of length pairs.size() + 1.
std::vector<double> recover_solution(double x_last,
                                     const std::vector<BreakpointPair>& pairs);

}  // namespace gnio
