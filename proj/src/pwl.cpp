#include "gnio/pwl.hpp"

#include <chrono>
#include <cmath>
#include <limits>

namespace gnio {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kDeltaFloor = 1e-12;  // residual jumps below this are dropped

}  // namespace

PwlFunction pwl_from_abs(double w, double y) {
  if (!(w > 0.0)) throw GnioError(ErrorCode::NonPositiveWeight);
  PwlFunction f;
  f.tree.emplace(y, 2.0 * w);
  f.sL = -w;
  f.sR = w;
  return f;
}

PwlFunction& pwl_sum(PwlFunction& h, double w, double y) {
  if (!(w > 0.0)) throw GnioError(ErrorCode::NonPositiveWeight);
  h.tree[y] += 2.0 * w;
  h.sL -= w;
  h.sR += w;
  return h;
}

BreakpointPair pwl_update(PwlFunction& g, const StagePenalty& pen,
                          SolverStats& stats, std::size_t stage) {
  const bool lam_inf = pen.lambda.is_infinite();
  const bool mu_inf = pen.mu.is_infinite();

  if (!lam_inf && !mu_inf && pen.lambda.finite_value() == 0.0 &&
      pen.mu.finite_value() == 0.0) {
    const double m = pwl_argmin(g);
    stats.breakpoints_deleted += g.tree.size();
    g.tree.clear();
    g.sL = g.sR = 0.0;
    return {m, m, stage};
  }

  double bminus = -kInf;
  double bplus = kInf;

  // Left truncation.  The target slope -lambda must be attained somewhere
  // (sL <= -lambda < sR); otherwise the subgradient level set is empty and
  // this side is a no-op with b- = -inf.
  if (!lam_inf) {
    const double lam = pen.lambda.finite_value();
    if (g.sL <= -lam && -lam < g.sR) {
      double run = g.sL;
      while (!g.tree.empty()) {
        auto it = g.tree.begin();
        const double jump = it->second;
        if (run + jump <= -lam) {
          // The slope right of this key still sits at or below -lambda, so
          // the crossing (supremum rule) is further right: popmin.
          run += jump;
          g.tree.erase(it);
          ++stats.breakpoints_deleted;
          continue;
        }
        bminus = it->first;
        const double residual = run + jump + lam;  // part of the jump above -lambda
        if (residual <= kDeltaFloor) {
          g.tree.erase(it);
          ++stats.breakpoints_deleted;
        } else {
          it->second = residual;
        }
        break;
      }
      g.sL = -lam;
    }
  }

  // Right truncation, mirrored: pop maxima while the slope left of the key
  // is still at or above mu (infimum rule for plateaus at mu).
  if (!mu_inf) {
    const double mu = pen.mu.finite_value();
    if (g.sR >= mu && mu > g.sL) {
      double run = g.sR;
      while (!g.tree.empty()) {
        auto it = std::prev(g.tree.end());
        const double jump = it->second;
        if (run - jump >= mu) {
          run -= jump;
          g.tree.erase(it);
          ++stats.breakpoints_deleted;
          continue;
        }
        bplus = it->first;
        const double residual = mu - (run - jump);  // part of the jump below mu
        if (residual <= kDeltaFloor) {
          g.tree.erase(it);
          ++stats.breakpoints_deleted;
        } else {
          it->second = residual;
        }
        break;
      }
      g.sR = mu;
    }
  }

  return {bminus, bplus, stage};
}

double pwl_argmin(const PwlFunction& g) {
  if (g.sL > 0.0 || g.sR < 0.0) throw GnioError(ErrorCode::UnboundedBelow);
  if (g.tree.empty()) return 0.0;  // flat everywhere
  double run = g.sL;
  double flat_start = std::numeric_limits<double>::quiet_NaN();
  for (const auto& [beta, jump] : g.tree) {
    if (run == 0.0) {
      // A zero-slope face that began at flat_start (or stretches from
      // -inf when sL itself is 0) ends at this key.
      return std::isnan(flat_start) ? beta : 0.5 * (flat_start + beta);
    }
    if (run + jump >= 0.0) {
      if (run + jump == 0.0) {
        flat_start = beta;
        run = 0.0;
        continue;
      }
      return beta;  // slope jumps strictly past 0 here
    }
    run += jump;
  }
  // Only reachable when sR == 0: the face extends to +inf; return its
  // finite left end.
  return std::isnan(flat_start) ? g.tree.rbegin()->first : flat_start;
}

double pwl_dleft(const PwlFunction& g, double x) {
  double s = g.sL;
  for (auto it = g.tree.begin(); it != g.tree.end() && it->first < x; ++it)
    s += it->second;
  return s;
}

double pwl_dright(const PwlFunction& g, double x) {
  double s = g.sL;
  for (auto it = g.tree.begin(); it != g.tree.end() && it->first <= x; ++it)
    s += it->second;
  return s;
}

double pwl_value_diff(const PwlFunction& g, double x, double x0) {
  const double s = std::min(x, x0);
  const double t = std::max(x, x0);
  double slope = g.sL;
  double total = 0.0;
  double pos = s;
  for (const auto& [beta, jump] : g.tree) {
    if (beta > pos) {
      const double q = std::min(beta, t);
      total += slope * (q - pos);
      pos = q;
      if (pos >= t) break;
    }
    slope += jump;
  }
  if (pos < t) total += slope * (t - pos);
  return x >= x0 ? total : -total;
}

void pwl_check(const PwlFunction& g) {
  double sum = 0.0;
  for (const auto& [beta, jump] : g.tree) {
    (void)beta;
    if (!(jump > 0.0))
      throw GnioError(ErrorCode::DegeneratePiece, "nonpositive slope delta");
    sum += jump;
  }
  const double scale = std::max({1.0, std::abs(g.sL), std::abs(g.sR)});
  if (std::abs(g.sL + sum - g.sR) > 1e-8 * scale)
    throw GnioError(ErrorCode::DegeneratePiece, "sL + sum(deltas) != sR");
}

Solution solve_l1(const GnioInstance& instance) {
  validate_instance(instance);
  if (instance.loss != LossKind::Abs)
    throw GnioError(ErrorCode::LengthMismatch, "solve_l1 needs Abs loss");
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

  PwlFunction g = pwl_from_abs(instance.w[0], instance.y[0]);
  SolverStats stats{};
  stats.breakpoints_inserted = 1;
  std::vector<BreakpointPair> bps;
  bps.reserve(n - 1);
  for (std::size_t i = 1; i < n; ++i) {
    bps.push_back(
        pwl_update(g, {instance.lambda[i - 1], instance.mu[i - 1]}, stats, i));
    pwl_sum(g, instance.w[i], instance.y[i]);
    ++stats.breakpoints_inserted;
  }
  sol.x = recover_solution(pwl_argmin(g), bps);
  sol.objective = objective_value(instance, sol.x);
  stats.runtime_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  sol.stats = stats;
  return sol;
}

}  // namespace gnio
