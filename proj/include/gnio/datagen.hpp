#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gnio/instance.hpp"

namespace gnio {

// The seven simulated parameter patterns.  With edges i = 1..n-1 (1-based)
// and natural logarithms:
//   Isotonic        lambda_i = inf,    mu_i = 0
//   NearlyIsotonic  lambda_i = log n,  mu_i = 0
//   Unimodal        lambda_i = inf, mu_i = 0 for i <= m; lambda_i = 0,
//                   mu_i = inf for i > m; m = floor((n-1)/2)
//   Fused           lambda_i = mu_i = log n
//   Uniform         both i.i.d. U(0, 1e3)
//   Gaussian        both i.i.d. N(100, 100), negatives set to 0
//   Mixed           lambda_i = inf for i <= q, mu_i = inf for i >= n-q with
//                   q = floor(n/5); all remaining entries i.i.d. U(0, 1e3)
enum class PatternName {
  Isotonic,
  NearlyIsotonic,
  Unimodal,
  Fused,
  Uniform,
  Gaussian,
  Mixed,
};

// Weight generation: fixed (1 for the absolute loss, 1/2 for the squared
// loss), i.i.d. U(1e-2, 1e2), or i.i.d. N(100, 100) with nonpositive draws
// replaced by 1.
enum class WeightScheme { FixedL1, FixedL2, UniformRandom, GaussianRandom };

struct PatternSpec {
  PatternName name = PatternName::Isotonic;
  std::size_t n = 0;
  std::uint64_t seed = 0;
};

inline constexpr PatternName kAllPatterns[] = {
    PatternName::Isotonic, PatternName::NearlyIsotonic, PatternName::Unimodal,
    PatternName::Fused,    PatternName::Uniform,        PatternName::Gaussian,
    PatternName::Mixed,
};

const char* pattern_name(PatternName name);
PatternName pattern_from_string(const std::string& s);  // throws IoFailure
const char* weight_scheme_name(WeightScheme scheme);
WeightScheme weight_scheme_from_string(const std::string& s);

// Data y_i ~ i.i.d. U(-100, 100) and weights per the scheme.  Deterministic
// in (n, seed, scheme); the y and w streams are independent.
std::pair<std::vector<double>, std::vector<double>> gen_data(
    std::size_t n, std::uint64_t seed, WeightScheme scheme);

// Penalty vectors of length n-1 for the given pattern; the lambda and mu
// streams are independent and random draws are consumed in index order.
std::pair<std::vector<ExtendedPenalty>, std::vector<ExtendedPenalty>>
gen_params(const PatternSpec& spec);

// gen_data + gen_params assembled into a validated instance.
GnioInstance gen_instance(const PatternSpec& spec, WeightScheme scheme,
                          LossKind loss);

}  // namespace gnio
