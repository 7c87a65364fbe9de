#pragma once

// Brute-force evaluation of the discrete definition of h(c):
//   h(c) = c - Re( sum_{nk<=K} a_k conj(a_{nk}) g_c(n) Lambda(n) n^{-1/2} )
//              / sum_{k<=K} |a_k|^2,
// with K = floor(T (log T)^{-2}) and g_c(n) = 2 sin(pi c log n / log T) /
// (pi log n). Coefficients are a_k = d_r(k) k^{-1/2} f(log(K/k)/log K),
// times lambda(k) in small-gaps mode. Used to validate the asymptotic
// engines empirically at finite T.

#include <cstdint>
#include <span>
#include <vector>

#include "zetagap/arith.hpp"
#include "zetagap/functional.hpp"

namespace zetagap::oracle {

struct OracleParams {
  double T = 0.0;
  std::int64_t K = 0;  // floor(T / (log T)^2), fixed by T
  double r = 1.0;
  GapMode mode = GapMode::large_gaps;
  double c = 1.0;

  /// K is derived from T here and nowhere else.
  static OracleParams make(double T, double r, double c, GapMode mode);
};

/// The Dirichlet-polynomial coefficients a_1..a_K for these parameters.
std::vector<double> dirichlet_coefficients(const OracleParams& params, const PolynomialF& f,
                                           const arith::SieveTables& tables);

/// Contribution of one prime power n to the numerator sum.
struct PrimePowerTerm {
  std::int64_t n = 0;
  double contribution = 0.0;
};

/// Numerator/denominator split plus the per-prime-power breakdown, computed
/// from explicit coefficients. Exposed for instrumentation and cross-checks.
struct DiscreteParts {
  double numerator = 0.0;
  double denominator = 0.0;
  std::vector<PrimePowerTerm> terms;
};
DiscreteParts discrete_parts(const OracleParams& params, std::span<const double> coefficients);

/// h from explicit coefficients: c - numerator/denominator.
double discrete_h_from_coefficients(const OracleParams& params,
                                    std::span<const double> coefficients);

/// The exact finite sums at height T. Requires tables.limit >= K and K >= 100
/// (below that the asymptotics being validated are meaningless).
/// threads = 0 picks the hardware concurrency; the partition is fixed, so
/// results are bit-stable for any thread count.
double discrete_h(const OracleParams& params, const PolynomialF& f,
                  const arith::SieveTables& tables, unsigned threads = 0);

struct ConvergenceRow {
  double T = 0.0;
  std::int64_t K = 0;
  double discrete_h = 0.0;
  double asymptotic_h = 0.0;
  double abs_error = 0.0;
};

/// One row per T (ascending list required): discrete value against
/// eval_h_quadrature at the same (c, r, mode, f). No pass/fail judgment here.
std::vector<ConvergenceRow> convergence_study(std::span<const double> T_list, double r,
                                              GapMode mode, double c, const PolynomialF& f,
                                              const arith::SieveTables& tables,
                                              unsigned threads = 0);

}  // namespace zetagap::oracle
