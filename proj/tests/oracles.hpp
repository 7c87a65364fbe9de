#pragma once

// Test-side oracles, deliberately independent of the library code paths they
// check: plain adaptive Simpson for integrals, trial division for the
// arithmetic functions, a classic boolean sieve for prime counts.

#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

namespace testoracle {

inline double simpson(const std::function<double(double)>& f, double a, double b) {
  const double m = 0.5 * (a + b);
  return (b - a) / 6.0 * (f(a) + 4.0 * f(m) + f(b));
}

inline double adaptive_simpson_rec(const std::function<double(double)>& f, double a, double b,
                                   double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double left = simpson(f, a, m);
  const double right = simpson(f, m, b);
  if (depth > 40 || std::abs(left + right - whole) < 15.0 * tol)
    return left + right + (left + right - whole) / 15.0;
  return adaptive_simpson_rec(f, a, m, left, tol / 2.0, depth + 1) +
         adaptive_simpson_rec(f, m, b, right, tol / 2.0, depth + 1);
}

/// Adaptive Simpson quadrature of f over [a, b] to absolute tolerance tol.
inline double integrate(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-12) {
  return adaptive_simpson_rec(f, a, b, simpson(f, a, b), tol, 0);
}

/// Number of primes <= n by an unsegmented boolean sieve.
inline std::int64_t prime_count(std::int64_t n) {
  std::vector<bool> composite(n + 1, false);
  std::int64_t count = 0;
  for (std::int64_t i = 2; i <= n; ++i) {
    if (!composite[i]) {
      ++count;
      if (i <= n / i)
        for (std::int64_t j = i * i; j <= n; j += i) composite[j] = true;
    }
  }
  return count;
}

/// Prime factorization by trial division: list of (prime, exponent).
inline std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
  std::vector<std::pair<std::int64_t, int>> fac;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      int e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      fac.emplace_back(p, e);
    }
  }
  if (n > 1) fac.emplace_back(n, 1);
  return fac;
}

inline int omega_with_multiplicity(std::int64_t n) {
  int total = 0;
  for (const auto& [p, e] : factorize(n)) total += e;
  return total;
}

inline int liouville_ref(std::int64_t n) {
  return omega_with_multiplicity(n) % 2 ? -1 : 1;
}

/// tau(n), the number of divisors.
inline std::int64_t divisor_count(std::int64_t n) {
  std::int64_t tau = 1;
  for (const auto& [p, e] : factorize(n)) tau *= e + 1;
  return tau;
}

/// d_r(n) straight from the prime-power product definition.
inline double divisor_r_ref(std::int64_t n, double r) {
  double value = 1.0;
  for (const auto& [p, e] : factorize(n)) {
    double num = 1.0, den = 1.0;
    for (int j = 0; j < e; ++j) {
      num *= r + j;
      den *= j + 1;
    }
    value *= num / den;
  }
  return value;
}

/// Si(x) by direct series summation with a fixed 200-term budget.
inline double sine_integral_series(double x) {
  long double sum = 0.0L;
  long double term = x;  // x^(2k+1)/(2k+1)!
  for (int k = 0; k < 200; ++k) {
    sum += term / (2 * k + 1);
    term *= -static_cast<long double>(x) * x / ((2.0L * k + 2.0L) * (2.0L * k + 3.0L));
  }
  return static_cast<double>(sum);
}

}  // namespace testoracle
