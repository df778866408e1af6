#pragma once

#include <span>

#include "gnio/instance.hpp"

namespace gnio {

// Uniform grid v_j = lo + j*step covering [lo, hi].
struct GridSpec {
  double lo = 0.0;
  double hi = 0.0;
  double step = 0.0;
};

// [min y - 1, max y + 1]: an optimal solution always lies inside the data
// hull (clamping any coordinate to the hull cannot increase any term), so
// the unit margin is pure safety.
GridSpec default_grid(const GnioInstance& instance, double step);

// Brute-force reference: exact DP over the discretized state space,
//   value[i][v] = f_i(v) + min_u value[i-1][u] + lam_{i-1}(u-v)_+ + mu_{i-1}(v-u)_+,
// evaluated in O(m) per stage with one forward sweep (the mu term) and one
// backward sweep (the lambda term) over the sorted grid; an infinite penalty
// restricts its sweep to u = v.  The returned objective upper-bounds the
// true optimum by at most O(step) times the instance's slope bound.
Solution grid_solve(const GnioInstance& instance, const GridSpec& grid);

// Total-slope bound L used in resolution arguments: rounding every
// coordinate down to the grid changes the objective by at most step * L.
// Sum of per-loss Lipschitz constants over the grid box plus all finite
// penalty weights.
double slope_bound(const GnioInstance& instance, const GridSpec& grid);

// Grid-independent first-order optimality check: no single-coordinate or
// constant-block shift of size eps decreases the objective beyond curvature
// slack.  Block moves matter because a fused optimum can block every
// single-coordinate move while a whole block is still free to slide.
bool perturbation_certificate(const GnioInstance& instance,
                              std::span<const double> x, double eps);

}  // namespace gnio
