#include "gnio/grid_oracle.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstring>
#include <limits>
#include <vector>

namespace gnio {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double loss_at(const GnioInstance& inst, std::size_t i, double v) {
  const double d = v - inst.y[i];
  return inst.loss == LossKind::Abs ? inst.w[i] * std::abs(d)
                                    : inst.w[i] * d * d;
}

}  // namespace

GridSpec default_grid(const GnioInstance& instance, double step) {
  const auto [mn, mx] = std::minmax_element(instance.y.begin(), instance.y.end());
  return GridSpec{*mn - 1.0, *mx + 1.0, step};
}

double slope_bound(const GnioInstance& instance, const GridSpec& grid) {
  double total = 0.0;
  for (std::size_t i = 0; i < instance.n(); ++i) {
    if (instance.loss == LossKind::Abs) {
      total += instance.w[i];
    } else {
      const double reach =
          std::max(std::abs(grid.lo - instance.y[i]), std::abs(grid.hi - instance.y[i]));
      total += 2.0 * instance.w[i] * reach;
    }
  }
  for (std::size_t i = 0; i + 1 < instance.n(); ++i) {
    if (!instance.lambda[i].is_infinite()) total += instance.lambda[i].finite_value();
    if (!instance.mu[i].is_infinite()) total += instance.mu[i].finite_value();
  }
  return total;
}

Solution grid_solve(const GnioInstance& instance, const GridSpec& grid) {
  validate_instance(instance);
  if (instance.loss == LossKind::Generic)
    throw GnioError(ErrorCode::GridTooLarge, "grid oracle needs Abs or Square losses");
  if (!(grid.lo < grid.hi) || !(grid.step > 0.0))
    throw GnioError(ErrorCode::GridTooLarge, "need lo < hi and step > 0");
  const double span = grid.hi - grid.lo;
  if (span / grid.step > 1e7) throw GnioError(ErrorCode::GridTooLarge);

  const auto t0 = std::chrono::steady_clock::now();
  const std::size_t n = instance.n();
  const std::size_t m =
      static_cast<std::size_t>(std::floor(span / grid.step * (1.0 + 1e-12))) + 1;
  if (n * m > 75'000'000ull)
    throw GnioError(ErrorCode::GridTooLarge, "state space too large");
  const double step = grid.step;

  // All stage value arrays are kept so the backward pass can rebuild the
  // argmin without storing per-point predecessor indices.
  std::vector<std::vector<double>> value(n, std::vector<double>(m));
  for (std::size_t j = 0; j < m; ++j)
    value[0][j] = loss_at(instance, 0, grid.lo + static_cast<double>(j) * step);

  std::vector<double> up(m);  // up[j] = min_{u<=j} prev[u] + mu*(j-u)*step
  for (std::size_t i = 1; i < n; ++i) {
    const std::vector<double>& prev = value[i - 1];
    std::vector<double>& cur = value[i];
    const ExtendedPenalty lam = instance.lambda[i - 1];
    const ExtendedPenalty mu = instance.mu[i - 1];

    if (mu.is_infinite()) {
      std::memcpy(up.data(), prev.data(), m * sizeof(double));  // u = j only
    } else {
      const double rise = mu.finite_value() * step;
      double run = kInf;
      for (std::size_t j = 0; j < m; ++j) up[j] = run = std::min(prev[j], run + rise);
    }
    if (lam.is_infinite()) {
      for (std::size_t j = m; j-- > 0;) {
        const double v = grid.lo + static_cast<double>(j) * step;
        cur[j] = loss_at(instance, i, v) + std::min(up[j], prev[j]);
      }
    } else {
      const double drop = lam.finite_value() * step;
      double run = kInf;
      for (std::size_t j = m; j-- > 0;) {
        run = std::min(prev[j], run + drop);
        const double v = grid.lo + static_cast<double>(j) * step;
        cur[j] = loss_at(instance, i, v) + std::min(up[j], run);
      }
    }
  }

  // Leftmost argmin of the final stage, then backward consistency scans.
  std::vector<std::size_t> idx(n);
  idx[n - 1] = static_cast<std::size_t>(
      std::min_element(value[n - 1].begin(), value[n - 1].end()) -
      value[n - 1].begin());
  for (std::size_t i = n - 1; i-- > 0;) {
    const std::size_t vj = idx[i + 1];
    const ExtendedPenalty lam = instance.lambda[i];
    const ExtendedPenalty mu = instance.mu[i];
    double best = kInf;
    std::size_t bestu = vj;
    // u <= vj pays mu*(vj-u)*step; u >= vj pays lam*(u-vj)*step.
    const std::size_t ulo = mu.is_infinite() ? vj : 0;
    const std::size_t uhi = lam.is_infinite() ? vj : m - 1;
    for (std::size_t u = ulo; u <= uhi; ++u) {
      const double gap = (u > vj ? static_cast<double>(u - vj) * step *
                                       lam.finite_value()
                         : u < vj ? static_cast<double>(vj - u) * step *
                                        mu.finite_value()
                                  : 0.0);
      const double c = value[i][u] + gap;
      if (c < best) best = c, bestu = u;
    }
    idx[i] = bestu;
  }

  Solution sol;
  sol.x.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    sol.x[i] = grid.lo + static_cast<double>(idx[i]) * step;
  sol.objective = objective_value(instance, sol.x);
  sol.stats.runtime_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return sol;
}

bool perturbation_certificate(const GnioInstance& instance,
                              std::span<const double> x, double eps) {
  if (!(eps > 0.0))
    throw GnioError(ErrorCode::InfeasiblePoint, "eps must be positive");
  const double base = objective_value(instance, x);
  if (!std::isfinite(base)) throw GnioError(ErrorCode::InfeasiblePoint);
  const std::size_t n = instance.n();
  double wmax = 0.0;
  for (double w : instance.w) wmax = std::max(wmax, w);

  std::vector<double> z(x.begin(), x.end());
  // Shifts [i, j] by delta and tests first-order non-descent with curvature
  // slack c*eps^2 per moved coordinate (c = largest weight).  A move that
  // lands on +inf (hard constraint) trivially passes: that direction is
  // blocked, not descending.
  auto non_descending = [&](std::size_t i, std::size_t j, double delta) {
    for (std::size_t k = i; k <= j; ++k) z[k] += delta;
    const double val = objective_value(instance, z);
    for (std::size_t k = i; k <= j; ++k) z[k] = x[k];
    const double slack =
        1e-12 + wmax * eps * eps * static_cast<double>(j - i + 1);
    return val >= base - slack;
  };

  for (std::size_t i = 0; i < n; ++i)
    if (!non_descending(i, i, eps) || !non_descending(i, i, -eps)) return false;

  // Maximal constant blocks; single coordinates were covered above.
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && std::abs(x[j + 1] - x[i]) <= 1e-12 * (1.0 + std::abs(x[i])))
      ++j;
    if (j > i && (!non_descending(i, j, eps) || !non_descending(i, j, -eps)))
      return false;
    i = j + 1;
  }
  return true;
}

}  // namespace gnio
