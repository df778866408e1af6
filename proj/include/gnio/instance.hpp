#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gnio/penalty.hpp"

namespace gnio {

enum class LossKind { Abs, Square, Generic };

std::string loss_name(LossKind loss);

// A chain problem: n data points with per-point convex losses plus
// asymmetric difference penalties on the n-1 edges,
//
//   min_x  sum_i f_i(x_i) + sum_i lambda_i (x_i - x_{i+1})_+
//                         + sum_i mu_i (x_{i+1} - x_i)_+ .
//
// For Abs, f_i(x) = w_i |x - y_i|; for Square, f_i(x) = w_i (x - y_i)^2.
// Generic instances carry y/w for bracketing hints but take their losses
// from caller-supplied derivative oracles.
struct GnioInstance {
  std::vector<double> y;
  std::vector<double> w;
  std::vector<ExtendedPenalty> lambda;
  std::vector<ExtendedPenalty> mu;
  LossKind loss = LossKind::Square;

  std::size_t n() const { return y.size(); }
};

struct SolverStats {
  std::uint64_t breakpoints_inserted = 0;
  std::uint64_t breakpoints_deleted = 0;
  double runtime_seconds = 0.0;
};

struct Solution {
  std::vector<double> x;
  double objective = 0.0;
  SolverStats stats;
};

// Builds an instance from raw penalty values (+inf allowed, negatives and
// NaN rejected with the offending index) and validates it.
GnioInstance make_instance(std::vector<double> y, std::vector<double> w,
                           const std::vector<double>& lambda_raw,
                           const std::vector<double>& mu_raw, LossKind loss);

// Checks all structural invariants: n >= 1, strictly positive weights and
// penalty vectors of length exactly n-1.  Returns the instance unchanged.
const GnioInstance& validate_instance(const GnioInstance& instance);

// The penalty part of the objective.  +inf when a hard constraint is
// violated; an inactive infinite penalty contributes exactly 0.
double penalty_value(const GnioInstance& instance, std::span<const double> x);

// Full objective for Abs/Square losses.  Throws for Generic instances
// (their losses live outside the instance).
double objective_value(const GnioInstance& instance, std::span<const double> x);

}  // namespace gnio
