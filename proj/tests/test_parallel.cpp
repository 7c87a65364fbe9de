#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "zetagap/parallel.hpp"

using zetagap::parallel::chunked_sum;

namespace {

double range_sum_of_squares(std::size_t begin, std::size_t end) {
  double s = 0.0;
  for (std::size_t i = begin; i < end; ++i) s += double(i) * double(i);
  return s;
}

}  // namespace

TEST_CASE("chunked_sum computes the right value") {
  const std::size_t n = 100'000;
  const double expected = double(n - 1) * n * (2.0 * n - 1.0) / 6.0;
  const double got = chunked_sum(n, 2, range_sum_of_squares);
  CHECK(std::abs(got - expected) <= 1e-9 * expected);
}

TEST_CASE("result bits do not depend on the worker count") {
  const std::size_t n = 12'345;
  std::vector<double> values;
  for (unsigned threads : {1u, 2u, 3u, 8u})
    values.push_back(chunked_sum(n, threads, [](std::size_t b, std::size_t e) {
      double s = 0.0;
      for (std::size_t i = b; i < e; ++i) s += std::sin(0.001 * double(i));
      return s;
    }));
  for (std::size_t i = 1; i < values.size(); ++i) CHECK(values[i] == values[0]);
}

TEST_CASE("small and empty ranges") {
  CHECK(chunked_sum(0, 4, range_sum_of_squares) == 0.0);
  // fewer items than the fixed chunk count
  CHECK(chunked_sum(5, 4, range_sum_of_squares) == doctest::Approx(1 + 4 + 9 + 16).epsilon(1e-15));
  CHECK(chunked_sum(1, 1, range_sum_of_squares) == 0.0);
}
