#pragma once

#include <cmath>
#include <limits>

#include "gnio/errors.hpp"

namespace gnio {

// Nonnegative penalty weight that may be +infinity.  An infinite penalty is
// the indicator of the corresponding order constraint; callers must branch on
// is_infinite() before touching the numeric value, so the stored infinity
// never enters arithmetic (no 0 * inf).
class ExtendedPenalty {
 public:
  ExtendedPenalty() : v_(0.0) {}

  static ExtendedPenalty finite(double v) {
    if (!(v >= 0.0) || std::isinf(v)) {
      throw GnioError(ErrorCode::NegativePenalty,
                      "finite penalty must satisfy 0 <= v < inf");
    }
    ExtendedPenalty p;
    p.v_ = v;
    return p;
  }

  static ExtendedPenalty infinity() {
    ExtendedPenalty p;
    p.v_ = std::numeric_limits<double>::infinity();
    return p;
  }

  // Accepts any v >= 0 including +inf; rejects negatives and NaN.
  static ExtendedPenalty from_raw(double v) {
    if (std::isinf(v) && v > 0) return infinity();
    return finite(v);
  }

  bool is_infinite() const { return std::isinf(v_); }

  double finite_value() const { return v_; }

  // For printing only: +inf when infinite.
  double raw() const { return v_; }

  bool operator==(const ExtendedPenalty&) const = default;

 private:
  double v_;
};

// The (lambda, mu) pair attached to one chain edge.
struct StagePenalty {
  ExtendedPenalty lambda;
  ExtendedPenalty mu;
};

}  // namespace gnio
