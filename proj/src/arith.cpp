#include "zetagap/arith.hpp"

#include <cmath>
#include <string>

#include "zetagap/errors.hpp"

namespace zetagap::arith {

namespace {

constexpr std::int64_t kMaxSieveLimit = 100'000'000;

void check_n(std::int64_t n, const SieveTables& tables, const char* fn) {
  if (n < 1 || n > tables.limit)
    throw param_error(std::string(fn) + ": n must be in [1, " +
                      std::to_string(tables.limit) + "], got " + std::to_string(n));
}

}  // namespace

SieveTables build_sieve(std::int64_t limit) {
  if (limit < 2 || limit > kMaxSieveLimit)
    throw param_error("build_sieve: limit must be in [2, 1e8], got " + std::to_string(limit));
  SieveTables t;
  t.limit = limit;
  t.spf.assign(static_cast<std::size_t>(limit) + 1, 0);
  for (std::int64_t i = 2; i <= limit; ++i) {
    if (t.spf[i] == 0) {
      t.primes.push_back(i);
      for (std::int64_t j = i; j <= limit; j += i)
        if (t.spf[j] == 0) t.spf[j] = static_cast<std::int32_t>(i);
    }
  }
  return t;
}

DivisorParams::DivisorParams(double r_) : r(r_) {
  if (!(r >= 1.0))
    throw param_error("DivisorParams: r must be >= 1, got " + std::to_string(r_));
}

double von_mangoldt(std::int64_t n, const SieveTables& tables) {
  check_n(n, tables, "von_mangoldt");
  if (n == 1) return 0.0;
  const std::int64_t p = tables.spf[n];
  while (n % p == 0) n /= p;
  return n == 1 ? std::log(static_cast<double>(p)) : 0.0;
}

int liouville(std::int64_t n, const SieveTables& tables) {
  check_n(n, tables, "liouville");
  int omega = 0;
  while (n > 1) {
    n /= tables.spf[n];
    ++omega;
  }
  return (omega & 1) ? -1 : 1;
}

double divisor_r(std::int64_t n, const DivisorParams& params, const SieveTables& tables) {
  check_n(n, tables, "divisor_r");
  double value = 1.0;
  while (n > 1) {
    const std::int64_t p = tables.spf[n];
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    double factor = 1.0;
    double fact = 1.0;
    for (int j = 0; j < e; ++j) {
      factor *= params.r + j;
      fact *= j + 1;
    }
    value *= factor / fact;
  }
  return value;
}

}  // namespace zetagap::arith
