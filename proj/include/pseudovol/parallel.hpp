#pragma once
// Thread-count plumbing and deterministic parallel reductions.
//
// All OpenMP loops in the library reduce over fixed-size chunks whose partial
// sums are combined in chunk order, so results are bitwise identical for any
// thread count (including the serial reference paths used in tests).

#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace pseudovol {

// Effective thread cap: PSEUDOVOL_THREADS env var wins, else OpenMP default,
// else 1 when built without OpenMP.
inline int thread_count() {
#ifdef _OPENMP
  int n = omp_get_max_threads();
#else
  int n = 1;
#endif
  if (const char* env = std::getenv("PSEUDOVOL_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v >= 1) n = static_cast<int>(v);
  }
  return n < 1 ? 1 : n;
}

// Deterministic sum of f(i) for i in [0, n): partial sums over chunks of
// `chunk` consecutive indices, combined in increasing chunk order.
inline double chunked_sum(long long n, long long chunk,
                          const std::function<double(long long)>& f) {
  if (n <= 0) return 0.0;
  if (chunk < 1) chunk = 1;
  const long long nchunks = (n + chunk - 1) / chunk;
  std::vector<double> partial(static_cast<size_t>(nchunks), 0.0);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(thread_count())
#endif
  for (long long c = 0; c < nchunks; ++c) {
    const long long lo = c * chunk;
    const long long hi = std::min<long long>(n, lo + chunk);
    double s = 0.0;
    for (long long i = lo; i < hi; ++i) s += f(i);
    partial[static_cast<size_t>(c)] = s;
  }
  double total = 0.0;
  for (double s : partial) total += s;
  return total;
}

// Serial reference implementation (same chunk order, no OpenMP), kept so tests
// can assert bitwise agreement with the parallel path.
inline double chunked_sum_serial(long long n, long long chunk,
                                 const std::function<double(long long)>& f) {
  if (n <= 0) return 0.0;
  if (chunk < 1) chunk = 1;
  const long long nchunks = (n + chunk - 1) / chunk;
  double total = 0.0;
  for (long long c = 0; c < nchunks; ++c) {
    const long long lo = c * chunk;
    const long long hi = std::min<long long>(n, lo + chunk);
    double s = 0.0;
    for (long long i = lo; i < hi; ++i) s += f(i);
    total += s;
  }
  return total;
}

}  // namespace pseudovol
