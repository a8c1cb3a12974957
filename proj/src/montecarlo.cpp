#include "pseudovol/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "pseudovol/grassmann.hpp"
#include "pseudovol/parallel.hpp"
#include "pseudovol/subspace.hpp"

namespace pseudovol {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t x =
      seed ^ (0x9E3779B97F4A7C15ULL * (index + 0x2545F4914F6CDD1DULL));
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ULL;
  x ^= x >> 27;
  x *= 0x94D049BB133111EBULL;
  x ^= x >> 31;
  return x;
}

McEstimate mc_mean_squared_cosine(long long n_samples, std::uint64_t seed) {
  if (n_samples < 2)
    fail(ErrorCode::InvalidInput, "mc_mean_squared_cosine: need >= 2 samples");
  const Subspace ref = span_of({Vector::Unit(4, 0), Vector::Unit(4, 1)});
  const long long chunk = 4096;
  auto sample = [&](long long i) {
    const Subspace e = random_plane(4, 2, mix_seed(seed, i));
    const double c = cosine_between(e, ref);
    return c * c;
  };
  const double s1 = chunked_sum(n_samples, chunk, sample);
  const double s2 = chunked_sum(n_samples, chunk, [&](long long i) {
    const double x = sample(i);
    return x * x;
  });
  McEstimate out;
  out.n = n_samples;
  out.mean = s1 / static_cast<double>(n_samples);
  out.variance = (s2 - static_cast<double>(n_samples) * out.mean * out.mean) /
                 static_cast<double>(n_samples - 1);
  if (out.variance < 0.0) out.variance = 0.0;
  out.std_error = std::sqrt(out.variance / static_cast<double>(n_samples));
  return out;
}

std::vector<double> sphere_first_coordinates(long long n_samples,
                                             std::uint64_t seed) {
  if (n_samples < 1)
    fail(ErrorCode::InvalidInput, "sphere_first_coordinates: need >= 1 sample");
  std::vector<double> out(static_cast<size_t>(n_samples));
  for (long long i = 0; i < n_samples; ++i) {
    std::mt19937_64 rng(mix_seed(seed, static_cast<std::uint64_t>(i)));
    std::normal_distribution<double> gauss(0.0, 1.0);
    double x = gauss(rng), y = gauss(rng), z = gauss(rng);
    double r = std::sqrt(x * x + y * y + z * z);
    while (r < 1e-12) {  // astronomically rare; redraw for a clean direction
      x = gauss(rng);
      y = gauss(rng);
      z = gauss(rng);
      r = std::sqrt(x * x + y * y + z * z);
    }
    out[static_cast<size_t>(i)] = x / r;
  }
  return out;
}

double ks_statistic_uniform(std::vector<double> samples, double lo,
                            double hi) {
  if (samples.empty())
    fail(ErrorCode::InvalidInput, "ks_statistic_uniform: empty sample set");
  if (!(hi > lo))
    fail(ErrorCode::InvalidInput, "ks_statistic_uniform: need hi > lo");
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double d = 0.0;
  for (size_t i = 0; i < samples.size(); ++i) {
    double f = (samples[i] - lo) / (hi - lo);
    f = std::min(1.0, std::max(0.0, f));
    const double below = f - static_cast<double>(i) / n;
    const double above = static_cast<double>(i + 1) / n - f;
    d = std::max(d, std::max(below, above));
  }
  return d;
}

double ks_p_value(double statistic, long long n_samples) {
  if (n_samples < 1)
    fail(ErrorCode::InvalidInput, "ks_p_value: need >= 1 sample");
  if (statistic <= 0.0) return 1.0;
  const double rn = std::sqrt(static_cast<double>(n_samples));
  const double lam = (rn + 0.12 + 0.11 / rn) * statistic;
  double q = 0.0;
  double sign = 1.0;
  for (int j = 1; j <= 200; ++j) {
    const double term = std::exp(-2.0 * j * j * lam * lam);
    q += 2.0 * sign * term;
    sign = -sign;
    if (term < 1e-18) break;
  }
  return std::min(1.0, std::max(0.0, q));
}

}  // namespace pseudovol
