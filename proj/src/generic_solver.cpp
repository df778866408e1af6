#include "gnio/generic_solver.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <memory>

namespace gnio {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// sup{x : dleft(x) <= level}.  dleft is non-decreasing, so the predicate is
// true on a left ray; bracket by doubling outward from the hint, then
// bisect.  Returns -inf / +inf when the ray is empty / the whole line.
double sup_dleft_at_most(const ScalarConvexOracle& g, double level, double tol) {
  double lo = g.hint_lo;
  double hi = g.hint_hi;
  double width = std::max(1.0, hi - lo);
  for (int k = 0; !(g.dleft(lo) <= level); ++k) {
    if (k >= 60) return -kInf;
    lo -= width;
    width *= 2.0;
  }
  width = std::max(1.0, hi - lo);
  for (int k = 0; g.dleft(hi) <= level; ++k) {
    if (k >= 60) return kInf;
    hi += width;
    width *= 2.0;
  }
  for (int it = 0; it < 200 && hi - lo > tol; ++it) {
    const double mid = 0.5 * (lo + hi);
    (g.dleft(mid) <= level ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

// inf{x : dright(x) >= level}, mirrored.
double inf_dright_at_least(const ScalarConvexOracle& g, double level, double tol) {
  double lo = g.hint_lo;
  double hi = g.hint_hi;
  double width = std::max(1.0, hi - lo);
  for (int k = 0; !(g.dright(hi) >= level); ++k) {
    if (k >= 60) return kInf;
    hi += width;
    width *= 2.0;
  }
  width = std::max(1.0, hi - lo);
  for (int k = 0; g.dright(lo) >= level; ++k) {
    if (k >= 60) return -kInf;
    lo -= width;
    width *= 2.0;
  }
  for (int it = 0; it < 200 && hi - lo > tol; ++it) {
    const double mid = 0.5 * (lo + hi);
    (g.dright(mid) >= level ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

ScalarConvexOracle square_oracle(double w, double y) {
  if (!(w > 0.0)) throw GnioError(ErrorCode::NonPositiveWeight);
  ScalarConvexOracle f;
  f.eval = [w, y](double x) { return w * (x - y) * (x - y); };
  auto d = [w, y](double x) { return 2.0 * w * (x - y); };
  f.dleft = d;
  f.dright = d;
  f.hint_lo = y - 1.0;
  f.hint_hi = y + 1.0;
  return f;
}

ScalarConvexOracle abs_oracle(double w, double y) {
  if (!(w > 0.0)) throw GnioError(ErrorCode::NonPositiveWeight);
  ScalarConvexOracle f;
  f.eval = [w, y](double x) { return w * std::abs(x - y); };
  f.dleft = [w, y](double x) { return x <= y ? -w : w; };
  f.dright = [w, y](double x) { return x < y ? -w : w; };
  f.hint_lo = y - 1.0;
  f.hint_hi = y + 1.0;
  return f;
}

ScalarConvexOracle sum_oracle(const ScalarConvexOracle& f,
                              const ScalarConvexOracle& g) {
  // The operands sit behind shared_ptrs so the three closures share one
  // copy each; capturing them by value would deep-copy the whole lazy chain
  // three ways per stage.
  auto fp = std::make_shared<const ScalarConvexOracle>(f);
  auto gp = std::make_shared<const ScalarConvexOracle>(g);
  ScalarConvexOracle s;
  s.eval = [fp, gp](double x) { return fp->eval(x) + gp->eval(x); };
  s.dleft = [fp, gp](double x) { return fp->dleft(x) + gp->dleft(x); };
  s.dright = [fp, gp](double x) { return fp->dright(x) + gp->dright(x); };
  s.hint_lo = std::min(f.hint_lo, g.hint_lo);
  s.hint_hi = std::max(f.hint_hi, g.hint_hi);
  return s;
}

std::vector<ScalarConvexOracle> oracles_for(const GnioInstance& instance) {
  if (instance.loss == LossKind::Generic)
    throw GnioError(ErrorCode::LengthMismatch,
                    "generic instances supply their own oracles");
  std::vector<ScalarConvexOracle> losses;
  losses.reserve(instance.n());
  for (std::size_t i = 0; i < instance.n(); ++i)
    losses.push_back(instance.loss == LossKind::Abs
                         ? abs_oracle(instance.w[i], instance.y[i])
                         : square_oracle(instance.w[i], instance.y[i]));
  return losses;
}

double argmin_generic(const ScalarConvexOracle& g, double tol) {
  const double lo = inf_dright_at_least(g, 0.0, tol);
  const double hi = sup_dleft_at_most(g, 0.0, tol);
  if (!std::isfinite(lo) || !std::isfinite(hi))
    throw GnioError(ErrorCode::BracketFailure, "no finite minimizer");
  return 0.5 * (lo + hi);
}

std::pair<ScalarConvexOracle, BreakpointPair> update_generic(
    const ScalarConvexOracle& g, const StagePenalty& pen, double tol) {
  const bool lam_inf = pen.lambda.is_infinite();
  const bool mu_inf = pen.mu.is_infinite();
  const double lam = lam_inf ? 0.0 : pen.lambda.finite_value();
  const double mu = mu_inf ? 0.0 : pen.mu.finite_value();

  BreakpointPair bp{-kInf, kInf, 0};
  if (!lam_inf && !mu_inf && lam == 0.0 && mu == 0.0) {
    bp.bminus = bp.bplus = argmin_generic(g, tol);
  } else {
    if (!lam_inf) bp.bminus = sup_dleft_at_most(g, -lam, tol);
    if (!mu_inf) bp.bplus = inf_dright_at_least(g, mu, tol);
    if (bp.bminus > bp.bplus) {
      // The two bisections can cross by rounding when both targets land on
      // one kink; anything beyond their combined tolerance means the
      // oracle's derivatives are inconsistent.
      if (bp.bminus - bp.bplus > 10.0 * tol + 1e-9)
        throw GnioError(ErrorCode::BracketFailure, "b- > b+");
      bp.bminus = bp.bplus = 0.5 * (bp.bminus + bp.bplus);
    }
  }

  auto gp = std::make_shared<const ScalarConvexOracle>(g);
  const double bm = bp.bminus;
  const double bq = bp.bplus;
  ScalarConvexOracle h;
  h.eval = [gp, bm, bq, lam, mu](double x) {
    if (x < bm) return gp->eval(bm) + lam * (bm - x);
    if (x > bq) return gp->eval(bq) + mu * (x - bq);
    return gp->eval(x);
  };
  h.dleft = [gp, bm, bq, lam, mu](double x) {
    if (x <= bm) return -lam;
    if (x > bq) return mu;
    return gp->dleft(x);
  };
  h.dright = [gp, bm, bq, lam, mu](double x) {
    if (x < bm) return -lam;
    if (x >= bq) return mu;
    return gp->dright(x);
  };
  h.hint_lo = g.hint_lo;
  h.hint_hi = g.hint_hi;
  return {std::move(h), bp};
}

Solution solve_generic(const GnioInstance& instance,
                       const std::vector<ScalarConvexOracle>& losses,
                       double tol) {
  validate_instance(instance);
  const std::size_t n = instance.n();
  if (losses.size() != n)
    throw GnioError(ErrorCode::LengthMismatch, "need one oracle per point");
  const auto t0 = std::chrono::steady_clock::now();

  Solution sol;
  if (n == 1) {
    sol.x = {argmin_generic(losses[0], tol)};
  } else {
    ScalarConvexOracle g = losses[0];
    std::vector<BreakpointPair> bps;
    bps.reserve(n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      auto [h, bp] = update_generic(
          g, {instance.lambda[i - 1], instance.mu[i - 1]}, tol);
      bp.stage = i;
      bps.push_back(bp);
      g = sum_oracle(h, losses[i]);
    }
    sol.x = recover_solution(argmin_generic(g, tol), bps);
  }

  if (instance.loss == LossKind::Generic) {
    double loss_total = 0.0;
    for (std::size_t i = 0; i < n; ++i) loss_total += losses[i].eval(sol.x[i]);
    sol.objective = loss_total + penalty_value(instance, sol.x);
  } else {
    sol.objective = objective_value(instance, sol.x);
  }
  sol.stats.runtime_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return sol;
}

}  // namespace gnio
