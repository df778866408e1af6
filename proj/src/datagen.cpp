#include "gnio/datagen.hpp"

#include <cmath>

#include "gnio/rng.hpp"

namespace gnio {
namespace {

// Stream tags: one sub-generator per quantity so consuming one never shifts
// another (byte-for-byte reproducibility of partial regenerations).
enum Purpose : std::uint64_t { kData = 0, kWeights = 1, kLambda = 2, kMu = 3 };

}  // namespace

const char* pattern_name(PatternName name) {
  switch (name) {
    case PatternName::Isotonic: return "isotonic";
    case PatternName::NearlyIsotonic: return "nearly_isotonic";
    case PatternName::Unimodal: return "unimodal";
    case PatternName::Fused: return "fused";
    case PatternName::Uniform: return "uniform";
    case PatternName::Gaussian: return "gaussian";
    case PatternName::Mixed: return "mixed";
  }
  return "?";
}

PatternName pattern_from_string(const std::string& s) {
  for (PatternName p : kAllPatterns)
    if (s == pattern_name(p)) return p;
  throw GnioError(ErrorCode::IoFailure, "unknown pattern '" + s + "'");
}

const char* weight_scheme_name(WeightScheme scheme) {
  switch (scheme) {
    case WeightScheme::FixedL1: return "fixed_l1";
    case WeightScheme::FixedL2: return "fixed_l2";
    case WeightScheme::UniformRandom: return "uniform";
    case WeightScheme::GaussianRandom: return "gaussian";
  }
  return "?";
}

WeightScheme weight_scheme_from_string(const std::string& s) {
  for (WeightScheme w : {WeightScheme::FixedL1, WeightScheme::FixedL2,
                         WeightScheme::UniformRandom, WeightScheme::GaussianRandom})
    if (s == weight_scheme_name(w)) return w;
  throw GnioError(ErrorCode::IoFailure, "unknown weight scheme '" + s + "'");
}

std::pair<std::vector<double>, std::vector<double>> gen_data(
    std::size_t n, std::uint64_t seed, WeightScheme scheme) {
  SplitMix64 root(seed);
  SplitMix64 data = root.stream(kData);
  SplitMix64 weights = root.stream(kWeights);

  std::vector<double> y(n), w(n);
  for (std::size_t i = 0; i < n; ++i) y[i] = data.uniform(-100.0, 100.0);
  switch (scheme) {
    case WeightScheme::FixedL1:
      for (std::size_t i = 0; i < n; ++i) w[i] = 1.0;
      break;
    case WeightScheme::FixedL2:
      for (std::size_t i = 0; i < n; ++i) w[i] = 0.5;
      break;
    case WeightScheme::UniformRandom:
      for (std::size_t i = 0; i < n; ++i) w[i] = weights.uniform(1e-2, 1e2);
      break;
    case WeightScheme::GaussianRandom:
      for (std::size_t i = 0; i < n; ++i) {
        const double v = weights.gaussian(100.0, 100.0);
        w[i] = v > 0.0 ? v : 1.0;
      }
      break;
  }
  return {std::move(y), std::move(w)};
}

std::pair<std::vector<ExtendedPenalty>, std::vector<ExtendedPenalty>>
gen_params(const PatternSpec& spec) {
  const std::size_t n = spec.n;
  if (n < 2)
    throw GnioError(ErrorCode::LengthMismatch, "patterns need n >= 2");
  const std::size_t edges = n - 1;
  const double logn = std::log(static_cast<double>(n));
  const auto inf = ExtendedPenalty::infinity();
  const auto zero = ExtendedPenalty::finite(0.0);

  SplitMix64 root(spec.seed);
  SplitMix64 lam_rng = root.stream(kLambda);
  SplitMix64 mu_rng = root.stream(kMu);

  std::vector<ExtendedPenalty> lambda(edges), mu(edges);
  switch (spec.name) {
    case PatternName::Isotonic:
      for (std::size_t i = 0; i < edges; ++i) lambda[i] = inf, mu[i] = zero;
      break;
    case PatternName::NearlyIsotonic:
      for (std::size_t i = 0; i < edges; ++i)
        lambda[i] = ExtendedPenalty::finite(logn), mu[i] = zero;
      break;
    case PatternName::Unimodal: {
      const std::size_t m = (n - 1) / 2;  // edges 1..m rise, the rest fall
      for (std::size_t i = 0; i < edges; ++i) {
        if (i < m)
          lambda[i] = inf, mu[i] = zero;
        else
          lambda[i] = zero, mu[i] = inf;
      }
      break;
    }
    case PatternName::Fused:
      for (std::size_t i = 0; i < edges; ++i)
        lambda[i] = mu[i] = ExtendedPenalty::finite(logn);
      break;
    case PatternName::Uniform:
      for (std::size_t i = 0; i < edges; ++i)
        lambda[i] = ExtendedPenalty::finite(lam_rng.uniform(0.0, 1e3));
      for (std::size_t i = 0; i < edges; ++i)
        mu[i] = ExtendedPenalty::finite(mu_rng.uniform(0.0, 1e3));
      break;
    case PatternName::Gaussian:
      for (std::size_t i = 0; i < edges; ++i) {
        const double v = lam_rng.gaussian(100.0, 100.0);
        lambda[i] = ExtendedPenalty::finite(v < 0.0 ? 0.0 : v);
      }
      for (std::size_t i = 0; i < edges; ++i) {
        const double v = mu_rng.gaussian(100.0, 100.0);
        mu[i] = ExtendedPenalty::finite(v < 0.0 ? 0.0 : v);
      }
      break;
    case PatternName::Mixed: {
      // lambda_i = inf on the first q edges, mu_i = inf on the last q
      // (1-based i = n-q .. n-1 is 0-based edges-q .. edges-1).
      const std::size_t q = n / 5;
      for (std::size_t i = 0; i < edges; ++i)
        lambda[i] = i < q ? inf : ExtendedPenalty::finite(lam_rng.uniform(0.0, 1e3));
      for (std::size_t i = 0; i < edges; ++i)
        mu[i] = i + q >= edges ? inf
                               : ExtendedPenalty::finite(mu_rng.uniform(0.0, 1e3));
      break;
    }
  }
  return {std::move(lambda), std::move(mu)};
}

GnioInstance gen_instance(const PatternSpec& spec, WeightScheme scheme,
                          LossKind loss) {
  GnioInstance instance;
  auto [y, w] = gen_data(spec.n, spec.seed, scheme);
  auto [lambda, mu] = gen_params(spec);
  instance.y = std::move(y);
  instance.w = std::move(w);
  instance.lambda = std::move(lambda);
  instance.mu = std::move(mu);
  instance.loss = loss;
  validate_instance(instance);
  return instance;
}

}  // namespace gnio
