#pragma once

#include <cstddef>
#include <memory>

#include "gnio/breakpoint.hpp"
#include "gnio/instance.hpp"

namespace gnio {

// One quadratic piece a*x^2 + b*x; intercepts are never stored (they cancel
// in every derivative equation and the final objective is recomputed from
// the instance).  No default member values: arrays of these are allocated
// uninitialized.
struct CoefPair {
  double a;
  double b;
};

inline CoefPair operator+(CoefPair u, CoefPair v) { return {u.a + v.a, u.b + v.b}; }
inline CoefPair operator-(CoefPair u, CoefPair v) { return {u.a - v.a, u.b - v.b}; }

// Convex differentiable piecewise quadratic in difference-of-coefficients
// form: strictly increasing breakpoints B[0..K), parallel coefficient
// deltas D (crossing B[j] left to right adds D[j] to the running (a, b)),
// plus the explicit leftmost and rightmost pieces cl / cr.  Invariant:
// cl + sum(D) = cr.  Adding a quadratic w(x-y)^2 to the whole function is
// O(1): only cl and cr change, every interior piece is implied by the
// unchanged deltas.
//
// Storage is a flat both-ended buffer instead of a deque: each update
// prepends at most one breakpoint and appends at most one, so over a whole
// solve the head can drift left at most n slots and the tail right at most
// n slots; capacity 2n+4 with the live range starting in the middle never
// wraps or reallocates.  The arrays are left uninitialized on purpose:
// slots are written before they are read, and skipping the zero-fill keeps
// untouched pages of a generously sized buffer unmapped.
class PwqFunction {
 public:
  // Starts as the single quadratic w(x-y)^2 with K = 0.
  PwqFunction(double w, double y, std::size_t capacity_hint = 0);

  std::size_t size() const { return tail_ - head_; }  // K
  bool empty() const { return head_ == tail_; }

  double bp_front() const { return bp_[head_]; }
  double bp_back() const { return bp_[tail_ - 1]; }
  double bp_at(std::size_t j) const { return bp_[head_ + j]; }
  CoefPair delta_at(std::size_t j) const { return delta_[head_ + j]; }

  CoefPair cl() const { return cl_; }
  CoefPair cr() const { return cr_; }

  void set_cl(CoefPair c) { cl_ = c; }
  void set_cr(CoefPair c) { cr_ = c; }

  void push_front(double bp, CoefPair d);
  void push_back(double bp, CoefPair d);
  void pop_front();
  void pop_back();
  void clear() { head_ = tail_; }

  CoefPair& front_delta() { return delta_[head_]; }
  CoefPair& back_delta() { return delta_[tail_ - 1]; }

 private:
  void grow();

  std::unique_ptr<double[]> bp_;
  std::unique_ptr<CoefPair[]> delta_;
  std::size_t cap_ = 0;
  std::size_t head_ = 0;
  std::size_t tail_ = 0;
  CoefPair cl_;
  CoefPair cr_;
};

// The single quadratic w(x-y)^2: coefficients (w, -2wy) on both sides.
PwqFunction pwq_from_quadratic(double w, double y);

// Adds w(x-y)^2 in place: cl and cr gain (w, -2wy), nothing else moves.
PwqFunction& pwq_sum(PwqFunction& h, double w, double y);

// One DP stage in place: truncates the derivative to [-lambda, mu], returns
// the breakpoint pair.  Left side: scan pieces from the left while the
// derivative at the next breakpoint is still below -lambda (deleting the
// scanned breakpoints), solve 2a b- + b = -lambda on the found piece, set
// cl = (0, -lambda) and prepend b- (merging deltas if it lands exactly on
// the surviving front breakpoint).  Right side mirrors with mu and
// cr = (0, mu).  lambda = mu = 0 collapses the function to a constant: both
// breakpoints equal argmin g and every stored breakpoint is deleted.
// Infinite penalties leave their side untouched.  Counts go to stats.
BreakpointPair pwq_update(PwqFunction& g, const StagePenalty& pen,
                          SolverStats& stats, std::size_t stage = 0);

// Scans for the derivative's zero crossing: -b/(2a) on the crossing piece.
double pwq_argmin(const PwqFunction& g);

// Derivative at x (the function is differentiable, so one number).
double pwq_derivative(const PwqFunction& g, double x);

// g(x) - g(x0), reconstructed by integrating the derivative piece by piece;
// absolute values are undefined because intercepts are dropped.
double pwq_value_diff(const PwqFunction& g, double x, double x0);

// Structural checks: strictly sorted breakpoints, cl + sum(D) = cr,
// derivative continuity 2*da*beta + db = 0 at every breakpoint, and
// curvature a >= 0 on every piece.  Throws DegeneratePiece on violation.
void pwq_check(const PwqFunction& g);

// Full l2 solver: forward sum/update sweep, argmin, backward recover.
Solution solve_l2(const GnioInstance& instance);

}  // namespace gnio
