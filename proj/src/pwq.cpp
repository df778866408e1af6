#include "gnio/pwq.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>

namespace gnio {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

PwqFunction::PwqFunction(double w, double y, std::size_t capacity_hint) {
  if (!(w > 0.0)) throw GnioError(ErrorCode::NonPositiveWeight);
  cap_ = std::max<std::size_t>(2 * capacity_hint + 4, 16);
  bp_.reset(new double[cap_]);
  delta_.reset(new CoefPair[cap_]);
  head_ = tail_ = cap_ / 2;
  cl_ = cr_ = CoefPair{w, -2.0 * w * y};
}

void PwqFunction::grow() {
  // Recenter into a doubled buffer; only reachable when no capacity hint
  // was given.
  const std::size_t k = size();
  const std::size_t cap = std::max<std::size_t>(2 * cap_, 16);
  std::unique_ptr<double[]> nbp(new double[cap]);
  std::unique_ptr<CoefPair[]> ndelta(new CoefPair[cap]);
  const std::size_t nhead = (cap - k) / 2;
  std::copy(bp_.get() + head_, bp_.get() + tail_, nbp.get() + nhead);
  std::copy(delta_.get() + head_, delta_.get() + tail_, ndelta.get() + nhead);
  bp_ = std::move(nbp);
  delta_ = std::move(ndelta);
  cap_ = cap;
  head_ = nhead;
  tail_ = nhead + k;
}

void PwqFunction::push_front(double bp, CoefPair d) {
  if (head_ == 0) grow();
  --head_;
  bp_[head_] = bp;
  delta_[head_] = d;
}

void PwqFunction::push_back(double bp, CoefPair d) {
  if (tail_ == cap_) grow();
  bp_[tail_] = bp;
  delta_[tail_] = d;
  ++tail_;
}

void PwqFunction::pop_front() { ++head_; }
void PwqFunction::pop_back() { --tail_; }

PwqFunction pwq_from_quadratic(double w, double y) { return PwqFunction(w, y); }

PwqFunction& pwq_sum(PwqFunction& h, double w, double y) {
  if (!(w > 0.0)) throw GnioError(ErrorCode::NonPositiveWeight);
  const CoefPair add{w, -2.0 * w * y};
  h.set_cl(h.cl() + add);
  h.set_cr(h.cr() + add);
  return h;
}

namespace {

// Left/right plateau endpoint when the crossing piece is affine with slope
// exactly at the target level; unreachable from strictly convex losses but
// kept exact for hand-built functions.
[[noreturn]] void degenerate(const char* what) {
  throw GnioError(ErrorCode::DegeneratePiece, what);
}

}  // namespace

BreakpointPair pwq_update(PwqFunction& g, const StagePenalty& pen,
                          SolverStats& stats, std::size_t stage) {
  const bool lam_inf = pen.lambda.is_infinite();
  const bool mu_inf = pen.mu.is_infinite();

  if (!lam_inf && !mu_inf && pen.lambda.finite_value() == 0.0 &&
      pen.mu.finite_value() == 0.0) {
    // Both penalties zero: h is the constant min g, so the whole breakpoint
    // list dies and both pair members sit at the minimizer.
    CoefPair p = g.cl();
    while (!g.empty()) {
      const double beta = g.bp_front();
      if (2.0 * p.a * beta + p.b < 0.0) {
        p = p + g.delta_at(0);
        g.pop_front();
        ++stats.breakpoints_deleted;
      } else {
        break;
      }
    }
    double m;
    if (p.a > 0.0) {
      m = -p.b / (2.0 * p.a);
    } else if (p.b == 0.0 && !g.empty()) {
      m = g.bp_front();
    } else {
      degenerate("flat piece at zero slope with no right end");
    }
    stats.breakpoints_deleted += g.size();
    g.clear();
    g.set_cl(CoefPair{0.0, 0.0});
    g.set_cr(CoefPair{0.0, 0.0});
    return {m, m, stage};
  }

  double bminus = -kInf;
  double bplus = kInf;

  if (!lam_inf) {
    const double lam = pen.lambda.finite_value();
    CoefPair p = g.cl();
    // Scan while the derivative at the next breakpoint is still below
    // -lambda: the crossing lies further right and the breakpoint dies.
    while (!g.empty()) {
      const double beta = g.bp_front();
      if (2.0 * p.a * beta + p.b < -lam) {
        p = p + g.delta_at(0);
        g.pop_front();
        ++stats.breakpoints_deleted;
      } else {
        break;
      }
    }
    if (p.a > 0.0) {
      bminus = -(p.b + lam) / (2.0 * p.a);
    } else if (p.b == -lam && !g.empty()) {
      bminus = g.bp_front();  // plateau at -lambda: supremum end
    } else {
      degenerate("affine piece cannot meet -lambda");
    }
    const CoefPair cl_new{0.0, -lam};
    if (!g.empty() && bminus >= g.bp_front()) {
      // Crossing landed on the surviving front breakpoint (equality, or a
      // hair past it from rounding): merge instead of prepending so B stays
      // strictly sorted.
      bminus = g.bp_front();
      g.front_delta() = g.front_delta() + (p - cl_new);
    } else {
      g.push_front(bminus, p - cl_new);
      ++stats.breakpoints_inserted;
    }
    g.set_cl(cl_new);
  }

  if (!mu_inf) {
    const double mu = pen.mu.finite_value();
    CoefPair q = g.cr();
    while (!g.empty()) {
      const double beta = g.bp_back();
      if (2.0 * q.a * beta + q.b > mu) {
        q = q - g.delta_at(g.size() - 1);
        g.pop_back();
        ++stats.breakpoints_deleted;
      } else {
        break;
      }
    }
    if (q.a > 0.0) {
      bplus = (mu - q.b) / (2.0 * q.a);
    } else if (q.b == mu && !g.empty()) {
      bplus = g.bp_back();  // plateau at mu: infimum end
    } else {
      degenerate("affine piece cannot meet mu");
    }
    const CoefPair cr_new{0.0, mu};
    if (!g.empty() && bplus <= g.bp_back()) {
      bplus = g.bp_back();
      g.back_delta() = g.back_delta() + (cr_new - q);
    } else {
      g.push_back(bplus, cr_new - q);
      ++stats.breakpoints_inserted;
    }
    g.set_cr(cr_new);
  }

  return {bminus, bplus, stage};
}

double pwq_argmin(const PwqFunction& g) {
  CoefPair p = g.cl();
  std::size_t j = 0;
  for (; j < g.size(); ++j) {
    if (2.0 * p.a * g.bp_at(j) + p.b >= 0.0) break;
    p = p + g.delta_at(j);
  }
  if (p.a > 0.0) return -p.b / (2.0 * p.a);
  if (p.b != 0.0) throw GnioError(ErrorCode::UnboundedBelow);
  // Flat crossing piece: sit in its middle when bounded, else at its one
  // finite end (defensive; strictly convex losses never get here).
  const double lo = j > 0 ? g.bp_at(j - 1) : -kInf;
  const double hi = j < g.size() ? g.bp_at(j) : kInf;
  if (std::isfinite(lo) && std::isfinite(hi)) return 0.5 * (lo + hi);
  if (std::isfinite(lo)) return lo;
  if (std::isfinite(hi)) return hi;
  return 0.0;
}

double pwq_derivative(const PwqFunction& g, double x) {
  CoefPair p = g.cl();
  for (std::size_t j = 0; j < g.size() && g.bp_at(j) <= x; ++j)
    p = p + g.delta_at(j);
  return 2.0 * p.a * x + p.b;
}

double pwq_value_diff(const PwqFunction& g, double x, double x0) {
  const double s = std::min(x, x0);
  const double t = std::max(x, x0);
  CoefPair p = g.cl();
  double total = 0.0;
  double pos = s;
  for (std::size_t j = 0; j <= g.size(); ++j) {
    const double right = j < g.size() ? g.bp_at(j) : kInf;
    if (right > pos) {
      const double q = std::min(right, t);
      if (q > pos) {
        total += p.a * (q * q - pos * pos) + p.b * (q - pos);
        pos = q;
      }
      if (pos >= t) break;
    }
    if (j < g.size()) p = p + g.delta_at(j);
  }
  return x >= x0 ? total : -total;
}

void pwq_check(const PwqFunction& g) {
  if (g.cl().a < 0.0) degenerate("negative curvature on the left piece");
  CoefPair p = g.cl();
  double prev = -kInf;
  double amax = 1.0;  // curvature roundoff is relative to the masses summed
  for (std::size_t j = 0; j < g.size(); ++j) {
    const double beta = g.bp_at(j);
    if (!(beta > prev)) degenerate("breakpoints not strictly increasing");
    const CoefPair d = g.delta_at(j);
    const double jump = 2.0 * d.a * beta + d.b;
    if (std::abs(jump) > 1e-8 * std::max(1.0, std::abs(2.0 * d.a * beta)))
      degenerate("derivative discontinuity at a breakpoint");
    amax = std::max(amax, std::abs(p.a));
    p = p + d;
    if (p.a < -1e-9 * amax) degenerate("negative curvature piece");
    prev = beta;
  }
  const double scale = std::max({1.0, std::abs(g.cr().a), std::abs(g.cr().b)});
  if (std::abs(p.a - g.cr().a) > 1e-8 * scale ||
      std::abs(p.b - g.cr().b) > 1e-8 * scale)
    degenerate("cl + sum(D) != cr");
}

Solution solve_l2(const GnioInstance& instance) {
  validate_instance(instance);
  if (instance.loss != LossKind::Square)
    throw GnioError(ErrorCode::LengthMismatch, "solve_l2 needs Square loss");
  const auto t0 = std::chrono::steady_clock::now();
  const std::size_t n = instance.n();

  Solution sol;
  if (n == 1) {
    sol.x = {instance.y[0]};
    sol.objective = 0.0;
    sol.stats.runtime_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return sol;
  }

  PwqFunction g(instance.w[0], instance.y[0], n);
  std::vector<BreakpointPair> bps;
  bps.reserve(n - 1);
  SolverStats stats{};
  for (std::size_t i = 1; i < n; ++i) {
    bps.push_back(
        pwq_update(g, {instance.lambda[i - 1], instance.mu[i - 1]}, stats, i));
    pwq_sum(g, instance.w[i], instance.y[i]);
  }
  sol.x = recover_solution(pwq_argmin(g), bps);
  sol.objective = objective_value(instance, sol.x);
  stats.runtime_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  sol.stats = stats;
  return sol;
}

}  // namespace gnio
