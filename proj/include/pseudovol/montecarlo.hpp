#pragma once
// Deterministic Monte Carlo sampling on spheres and Grassmannians plus
// Kolmogorov-Smirnov goodness-of-fit helpers. Every sample is drawn from an
// engine seeded by (seed, index) mixing, so results are independent of thread
// count and evaluation order.

#include <cstdint>
#include <vector>

#include "pseudovol/core.hpp"

namespace pseudovol {

// SplitMix64-style avalanche of (seed, index) into an independent stream seed.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index);

struct McEstimate {
  double mean = 0.0;
  double variance = 0.0;   // unbiased sample variance
  double std_error = 0.0;  // sqrt(variance / n)
  long long n = 0;
};

// E[ cosine_between(E, span{e1,e2})^2 ] over rotation-invariant random
// 2-planes E in R^4, accumulated with the deterministic chunked reduction.
McEstimate mc_mean_squared_cosine(long long n_samples, std::uint64_t seed);

// First coordinates of uniform S^2 samples, in index order.
std::vector<double> sphere_first_coordinates(long long n_samples,
                                             std::uint64_t seed);

// Two-sided Kolmogorov-Smirnov distance of the samples against the uniform
// law on [lo, hi]. Sorts a copy of the samples.
double ks_statistic_uniform(std::vector<double> samples, double lo, double hi);

// Asymptotic Kolmogorov p-value Q((sqrt(n) + 0.12 + 0.11/sqrt(n)) * d) with
// the Stephens finite-sample correction.
double ks_p_value(double statistic, long long n_samples);

}  // namespace pseudovol
