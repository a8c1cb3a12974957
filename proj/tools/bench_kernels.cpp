// Benchmark comparing the OpenMP chunked reduction against its serial
// reference on the library's two dominant kernel shapes: per-sample plane
// statistics (the Monte Carlo workload) and dense torus-average evaluation.
// Both paths must agree bitwise; timings and speedup are reported.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>

#include "CLI11.hpp"
#include "pseudovol/crofton.hpp"
#include "pseudovol/grassmann.hpp"
#include "pseudovol/montecarlo.hpp"
#include "pseudovol/parallel.hpp"
#include "pseudovol/subspace.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct BenchResult {
  double serial_s = 0.0;
  double parallel_s = 0.0;
  bool bitwise_equal = false;
};

template <class F>
BenchResult run_both(long long n, long long chunk, F&& f, int repeat) {
  BenchResult r;
  double vs = 0.0, vp = 0.0;
  auto t0 = Clock::now();
  for (int i = 0; i < repeat; ++i) vs = pseudovol::chunked_sum_serial(n, chunk, f);
  r.serial_s = seconds_since(t0) / repeat;
  t0 = Clock::now();
  for (int i = 0; i < repeat; ++i) vp = pseudovol::chunked_sum(n, chunk, f);
  r.parallel_s = seconds_since(t0) / repeat;
  r.bitwise_equal = (vs == vp);
  return r;
}

void report(const char* name, const BenchResult& r) {
  std::printf("%-28s serial %8.3f s   parallel %8.3f s   speedup %5.2fx   %s\n",
              name, r.serial_s, r.parallel_s,
              r.parallel_s > 0.0 ? r.serial_s / r.parallel_s : 0.0,
              r.bitwise_equal ? "bitwise equal" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  long long n_samples = 400000;
  long long grid = 512;
  long long chunk = 1024;
  int repeat = 3;
  CLI::App app{"serial vs OpenMP kernel comparison"};
  app.add_option("--samples", n_samples, "plane samples for the statistic kernel")
      ->check(CLI::PositiveNumber);
  app.add_option("--grid", grid, "side length of the torus-average grid")
      ->check(CLI::PositiveNumber);
  app.add_option("--chunk", chunk, "reduction chunk size")
      ->check(CLI::PositiveNumber);
  app.add_option("--repeat", repeat, "timed repetitions per kernel")
      ->check(CLI::PositiveNumber);
  CLI11_PARSE(app, argc, argv);

  std::printf("threads: %d (cap via PSEUDOVOL_THREADS)\n",
              pseudovol::thread_count());

  // Kernel 1: independent random-plane statistics, one plane per index.
  const pseudovol::Subspace ref = pseudovol::random_plane(4, 2, 7);
  auto plane_stat = [&](long long i) {
    const pseudovol::Subspace e = pseudovol::random_plane(
        4, 2, pseudovol::mix_seed(20260825, static_cast<std::uint64_t>(i)));
    const double c = pseudovol::cosine_between(ref, e);
    return c * c;
  };
  report("plane statistic", run_both(n_samples, chunk, plane_stat, repeat));

  // Kernel 2: dense evaluation of a semi-analytic torus average on a grid.
  const pseudovol::TorusAverage phi =
      pseudovol::cosine_kernel_average(pseudovol::random_plane(4, 2, 11));
  const long long cells = grid * grid;
  const double step = 1.8 / static_cast<double>(grid - 1);
  auto grid_eval = [&](long long i) {
    const double z = -0.9 + step * static_cast<double>(i / grid);
    const double w = -0.9 + step * static_cast<double>(i % grid);
    return phi(z, w);
  };
  report("torus-average grid", run_both(cells, chunk, grid_eval, repeat));
  return 0;
}
