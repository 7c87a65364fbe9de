#include "zetagap/oracle.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "zetagap/errors.hpp"
#include "zetagap/kernels.hpp"
#include "zetagap/parallel.hpp"

namespace zetagap::oracle {

namespace {

constexpr double kPi = std::numbers::pi;

void check_params(const OracleParams& params, std::int64_t sieve_limit) {
  if (params.K < 100)
    throw param_error("oracle: K = " + std::to_string(params.K) +
                      " is below 100 (T too small for the asymptotics); raise T");
  if (sieve_limit >= 0 && sieve_limit < params.K)
    throw param_error("oracle: sieve limit " + std::to_string(sieve_limit) +
                      " is smaller than K = " + std::to_string(params.K));
}

// All prime powers p^j <= limit, ascending in p then j.
std::vector<std::int64_t> prime_powers(std::int64_t limit,
                                       const std::vector<std::int64_t>& primes) {
  std::vector<std::int64_t> pp;
  for (std::int64_t p : primes) {
    if (p > limit) break;
    for (std::int64_t n = p; n <= limit; n *= p) {
      pp.push_back(n);
      if (n > limit / p) break;  // overflow guard
    }
  }
  return pp;
}

}  // namespace

OracleParams OracleParams::make(double T, double r, double c, GapMode mode) {
  if (!(T >= 1e3)) throw param_error("OracleParams: T must be >= 1e3, got " + std::to_string(T));
  if (!(r >= 1.0)) throw param_error("OracleParams: r must be >= 1, got " + std::to_string(r));
  if (!(c > 0.0)) throw param_error("OracleParams: c must be positive, got " + std::to_string(c));
  OracleParams p;
  p.T = T;
  const double lnT = std::log(T);
  p.K = static_cast<std::int64_t>(T / (lnT * lnT));
  p.r = r;
  p.c = c;
  p.mode = mode;
  return p;
}

std::vector<double> dirichlet_coefficients(const OracleParams& params, const PolynomialF& f,
                                           const arith::SieveTables& tables) {
  check_params(params, tables.limit);
  const std::int64_t K = params.K;
  const double logK = std::log(static_cast<double>(K));
  const arith::DivisorParams dp(params.r);
  const bool small = params.mode == GapMode::small_gaps;

  std::vector<double> u(K), a(K);
  for (std::int64_t k = 1; k <= K; ++k)
    u[k - 1] = std::log(static_cast<double>(K) / k) / logK;
  kernels::poly_eval_many(f.coeffs(), u, a);

  for (std::int64_t k = 1; k <= K; ++k) {
    double weight = arith::divisor_r(k, dp, tables) / std::sqrt(static_cast<double>(k));
    if (small && arith::liouville(k, tables) < 0) weight = -weight;
    a[k - 1] *= weight;
  }
  return a;
}

DiscreteParts discrete_parts(const OracleParams& params, std::span<const double> a) {
  check_params(params, -1);
  if (static_cast<std::int64_t>(a.size()) != params.K)
    throw param_error("discrete_parts: coefficient count " + std::to_string(a.size()) +
                      " does not match K = " + std::to_string(params.K));
  const std::int64_t K = params.K;
  const double lnT = std::log(params.T);

  // Primes up to K via a local sieve over the coefficient range; the terms
  // need only the prime powers, not the full tables.
  std::vector<bool> composite(K + 1, false);
  std::vector<std::int64_t> primes;
  for (std::int64_t i = 2; i <= K; ++i) {
    if (!composite[i]) {
      primes.push_back(i);
      if (i <= K / i)
        for (std::int64_t j = i * i; j <= K; j += i) composite[j] = true;
    }
  }

  DiscreteParts parts;
  parts.denominator = kernels::sum_squares(a);
  for (std::int64_t p : primes) {
    const double log_p = std::log(static_cast<double>(p));
    for (std::int64_t n = p; n <= K; n *= p) {
      const double log_n = std::log(static_cast<double>(n));
      const double g = 2.0 * std::sin(kPi * params.c * log_n / lnT) / (kPi * log_n);
      const std::int64_t m = K / n;
      double s = 0.0;
      for (std::int64_t k = 1; k <= m; ++k) s += a[k - 1] * a[n * k - 1];
      const double term = g * log_p / std::sqrt(static_cast<double>(n)) * s;
      parts.terms.push_back({n, term});
      parts.numerator += term;
      if (n > K / p) break;
    }
  }
  return parts;
}

double discrete_h_from_coefficients(const OracleParams& params, std::span<const double> a) {
  const DiscreteParts parts = discrete_parts(params, a);
  return params.c - parts.numerator / parts.denominator;
}

double discrete_h(const OracleParams& params, const PolynomialF& f,
                  const arith::SieveTables& tables, unsigned threads) {
  const std::vector<double> a = dirichlet_coefficients(params, f, tables);
  const std::int64_t K = params.K;
  const double lnT = std::log(params.T);

  const std::vector<std::int64_t> pp = prime_powers(K, tables.primes);
  const double denominator = kernels::sum_squares(a);

  const double numerator =
      parallel::chunked_sum(pp.size(), threads, [&](std::size_t begin, std::size_t end) {
        double sum = 0.0;
        for (std::size_t idx = begin; idx < end; ++idx) {
          const std::int64_t n = pp[idx];
          const double log_n = std::log(static_cast<double>(n));
          const double g = 2.0 * std::sin(kPi * params.c * log_n / lnT) / (kPi * log_n);
          const double mangoldt = arith::von_mangoldt(n, tables);
          const std::int64_t m = K / n;
          double s = 0.0;
          for (std::int64_t k = 1; k <= m; ++k) s += a[k - 1] * a[n * k - 1];
          sum += g * mangoldt / std::sqrt(static_cast<double>(n)) * s;
        }
        return sum;
      });

  return params.c - numerator / denominator;
}

std::vector<ConvergenceRow> convergence_study(std::span<const double> T_list, double r,
                                              GapMode mode, double c, const PolynomialF& f,
                                              const arith::SieveTables& tables,
                                              unsigned threads) {
  if (T_list.empty()) throw param_error("convergence_study: T list must not be empty");
  for (std::size_t i = 1; i < T_list.size(); ++i)
    if (!(T_list[i] > T_list[i - 1]))
      throw param_error("convergence_study: T list must be strictly ascending");

  const double asymptotic = eval_h_quadrature(FunctionalParams(c, r, mode), f);
  std::vector<ConvergenceRow> rows;
  rows.reserve(T_list.size());
  for (double T : T_list) {
    const OracleParams params = OracleParams::make(T, r, c, mode);
    ConvergenceRow row;
    row.T = T;
    row.K = params.K;
    row.discrete_h = discrete_h(params, f, tables, threads);
    row.asymptotic_h = asymptotic;
    row.abs_error = std::abs(row.discrete_h - row.asymptotic_h);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace zetagap::oracle
