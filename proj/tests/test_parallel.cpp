#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <cstdlib>

#include "doctest.h"
#include "pseudovol/parallel.hpp"

using namespace pseudovol;

TEST_CASE("chunked reduction: parallel path is bitwise equal to the serial reference") {
  auto term = [](long long i) {
    return std::sin(0.001 * static_cast<double>(i)) +
           1.0 / static_cast<double>(i + 1);
  };
  const long long n = 100000, chunk = 4096;
  const double par = chunked_sum(n, chunk, term);
  const double ser = chunked_sum_serial(n, chunk, term);
  CHECK(par == ser);  // bitwise: identical chunk order and partial sums
}

TEST_CASE("empty and tiny ranges") {
  auto one = [](long long) { return 1.0; };
  CHECK(chunked_sum(0, 16, one) == 0.0);
  CHECK(chunked_sum(3, 16, one) == 3.0);
  CHECK(chunked_sum(3, 1, one) == 3.0);
}

TEST_CASE("PSEUDOVOL_THREADS caps the reported thread count") {
  setenv("PSEUDOVOL_THREADS", "3", 1);
  CHECK(thread_count() == 3);
  setenv("PSEUDOVOL_THREADS", "1", 1);
  CHECK(thread_count() == 1);
  unsetenv("PSEUDOVOL_THREADS");
  CHECK(thread_count() >= 1);
}
