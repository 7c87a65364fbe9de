#pragma once

// Sieved arithmetic functions (von Mangoldt, Liouville, generalized divisor
// d_r) and the sine integral. Everything here is pure; SieveTables are
// immutable after construction and safe to share across threads.

#include <cstdint>
#include <vector>

namespace zetagap::arith {

/// Smallest-prime-factor table for 2..limit plus the ascending prime list.
/// One table serves factorization, Omega, lambda, Lambda and d_r.
struct SieveTables {
  std::int64_t limit = 0;
  std::vector<std::int32_t> spf;     // spf[n] = least prime factor of n, valid for 2 <= n <= limit
  std::vector<std::int64_t> primes;  // all primes <= limit, ascending
};

/// Builds the tables. limit must be in [2, 10^8].
SieveTables build_sieve(std::int64_t limit);

/// Parameter of the generalized divisor function; r >= 1 is required
/// (submultiplicativity fails below 1).
struct DivisorParams {
  double r;
  explicit DivisorParams(double r_);
};

/// log p if n = p^k, else 0; von_mangoldt(1) = 0. Requires 1 <= n <= tables.limit.
double von_mangoldt(std::int64_t n, const SieveTables& tables);

/// (-1)^Omega(n), prime factors counted with multiplicity; liouville(1) = +1.
int liouville(std::int64_t n, const SieveTables& tables);

/// Multiplicative d_r with d_r(p^e) = prod_{j=0}^{e-1}(r+j) / e!; d_r(1) = 1.
/// The running-product form avoids the cancellation a Gamma-quotient would hit
/// for small r.
double divisor_r(std::int64_t n, const DivisorParams& params, const SieveTables& tables);

/// Si(x) = int_0^x sin(t)/t dt for 0 <= x <= 10^4, absolute accuracy ~1e-13.
/// Taylor series below x = 16, auxiliary functions f, g from the continued
/// fraction for E1(ix) above.
double sine_integral(double x);

namespace detail {
// Both branches of sine_integral, each valid on a window around the
// switchover; exposed so tests can check the overlap region.
double si_taylor(double x);
double si_auxiliary(double x);
}  // namespace detail

}  // namespace zetagap::arith
