#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "doctest.h"
#include "pseudovol/montecarlo.hpp"

using namespace pseudovol;

TEST_CASE("seed mixing decorrelates nearby indices") {
  const std::uint64_t a = mix_seed(42, 0);
  const std::uint64_t b = mix_seed(42, 1);
  const std::uint64_t c = mix_seed(43, 0);
  CHECK(a != b);
  CHECK(a != c);
  CHECK(b != c);
  // reproducible
  CHECK(mix_seed(42, 0) == a);
}

TEST_CASE("mean squared cosine against a fixed plane: 10^6 samples") {
  // Over uniformly random 2-planes in R^4 the squared cosine against a fixed
  // plane has mean 1/6 and variance 7/180.
  const McEstimate est = mc_mean_squared_cosine(1000000, 2026);
  CHECK(est.n == 1000000);
  CHECK(est.std_error == doctest::Approx(std::sqrt(est.variance / est.n)));
  CHECK(std::abs(est.mean - 1.0 / 6.0) <= 3.0 * est.std_error);
  CHECK(est.variance == doctest::Approx(7.0 / 180.0).epsilon(0.02));
}

TEST_CASE("monte carlo estimates are deterministic in the seed") {
  const McEstimate a = mc_mean_squared_cosine(20000, 7);
  const McEstimate b = mc_mean_squared_cosine(20000, 7);
  const McEstimate c = mc_mean_squared_cosine(20000, 8);
  CHECK(a.mean == b.mean);
  CHECK(a.variance == b.variance);
  CHECK(a.mean != c.mean);
  CHECK_THROWS_AS(mc_mean_squared_cosine(1, 7), Error);
}

TEST_CASE("first coordinate of uniform sphere points is uniform on [-1,1]") {
  const std::vector<double> xs = sphere_first_coordinates(1000000, 31415);
  const auto [lo, hi] = std::minmax_element(xs.begin(), xs.end());
  CHECK(*lo >= -1.0);
  CHECK(*hi <= 1.0);
  const double d = ks_statistic_uniform(xs, -1.0, 1.0);
  const double p = ks_p_value(d, xs.size());
  CHECK(p > 0.01);
  // determinism
  const std::vector<double> ys = sphere_first_coordinates(1000, 31415);
  CHECK(ys[0] == xs[0]);
  CHECK(ys[999] == xs[999]);
}

TEST_CASE("the uniformity test has power against a skewed sample") {
  std::vector<double> xs = sphere_first_coordinates(100000, 99);
  for (double& x : xs) x = x * std::abs(x);  // pushes mass toward 0
  const double d = ks_statistic_uniform(xs, -1.0, 1.0);
  CHECK(ks_p_value(d, xs.size()) < 1e-8);
}

TEST_CASE("Kolmogorov statistic and p-value: pinned behavior") {
  // evenly spread points attain the minimal statistic 1/(2n)
  const int n = 100;
  std::vector<double> grid(n);
  for (int i = 0; i < n; ++i) grid[i] = (i + 0.5) / n;
  CHECK(ks_statistic_uniform(grid, 0.0, 1.0) ==
        doctest::Approx(0.5 / n).epsilon(1e-12));
  CHECK(ks_p_value(ks_statistic_uniform(grid, 0.0, 1.0), n) > 0.999);

  // the 5% critical point of the finite-sample-corrected statistic
  const double n_big = 1000000.0;
  const double d_crit =
      1.358 / (std::sqrt(n_big) + 0.12 + 0.11 / std::sqrt(n_big));
  CHECK(ks_p_value(d_crit, static_cast<std::size_t>(n_big)) ==
        doctest::Approx(0.05).epsilon(0.01));

  // p decreases as the statistic grows
  double prev = 1.0;
  for (double d = 0.0002; d < 0.01; d += 0.0008) {
    const double p = ks_p_value(d, 1000000);
    CHECK(p <= prev + 1e-15);
    prev = p;
  }
  CHECK(ks_p_value(0.0, 1000) == 1.0);

  CHECK_THROWS_AS(ks_statistic_uniform({}, 0.0, 1.0), Error);
  CHECK_THROWS_AS(ks_statistic_uniform({0.5}, 1.0, 0.0), Error);
}
