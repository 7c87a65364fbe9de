#pragma once

// For fixed (c, r) the f-dependent part of h is a generalized Rayleigh
// quotient a^T S a / a^T G a in the coefficient vector a, so the best
// polynomial is an extreme generalized eigenpair of (S, G) rather than the
// output of a black-box optimizer. On top of that sit a golden-section
// search in r and a scan-then-bisect search for the critical crossing of
// h = 1.

#include <vector>

#include "zetagap/functional.hpp"
#include "zetagap/linalg.hpp"

namespace zetagap::optimizer {

/// Gram matrix G (Beta moments) and symmetrized kernel matrix S of the
/// numerator bilinear form, restricted to monomials 1, u, ..., u^degree.
struct GapMatrices {
  double c = 0.0;
  double r = 0.0;
  int degree = 0;
  linalg::SquareMatrix g;  // g(i,j) = int_0^1 (1-u)^(r^2-1) u^(i+j) du
  linalg::SquareMatrix s;  // symmetric; a^T S a = I(c, r, f_a)
};

/// Builds both matrices; S comes from the same Beta-series expansion the
/// series engine uses (branch_error for pi*c > 25).
GapMatrices build_gap_matrices(double c, double r, int degree);

/// Result of optimizing f at fixed (c, r).
struct OptimalF {
  double h_value = 0.0;
  double rayleigh = 0.0;          // extreme generalized eigenvalue
  std::vector<double> coeffs;     // normalized to f(0) = 1 when possible
  bool gauge_unit_norm = false;   // true when a0 ~ 0 forced unit G-norm instead
};

/// Extreme generalized eigenpair of (S, G): the maximal Rayleigh quotient,
/// which minimizes h for large gaps and maximizes it for small gaps.
OptimalF optimal_f_eigen(double c, double r, int degree, GapMode mode);

/// Derivative-free cross-check of optimal_f_eigen behind the same interface:
/// Nelder-Mead over (a_1..a_d) with a_0 = 1. Intended for degree <= 2 sanity
/// checks; much slower and less exact than the eigen route.
OptimalF optimal_f_search(double c, double r, int degree, GapMode mode);

/// Inclusive bounds for the divisor power r; must sit inside [1, 6].
struct RBounds {
  double lo = 1.0;
  double hi = 4.0;
  RBounds() = default;
  RBounds(double lo_, double hi_);
};

struct OptimizationResult {
  double c = 0.0;
  double r = 0.0;
  GapMode mode = GapMode::large_gaps;
  double h_value = 0.0;
  std::vector<double> coeffs;
  bool gauge_unit_norm = false;
  double engine_agreement = 0.0;  // |series - quadrature| at the optimum
};

/// Golden-section search (tolerance 1e-4 in r) for the r giving the extreme
/// optimized h: minimal for large gaps, maximal for small gaps.
OptimizationResult optimize_r(double c, int degree, GapMode mode, const RBounds& r_bounds);

struct ScanRow {
  double c = 0.0;
  double h_opt = 0.0;
};

struct SearchOptions {
  double c_lo = 0.0;       // 0 = mode default (1.5 large / 0.35 small)
  double c_hi = 0.0;       // 0 = mode default (4.0 large / 0.9 small)
  double step = 0.05;
  double resolution = 1e-4;
};

struct CriticalResult {
  double c_star = 0.0;            // certified side of the h = 1 crossing
  OptimizationResult witness;     // optimization at c_star; h on the correct side of 1
  std::vector<ScanRow> scan;      // coarse scan table, for diagnostics
};

/// Locates the crossing of optimized h through 1 by a coarse scan for a sign
/// change of h-1 followed by bisection to `resolution`. c_star is reported
/// from the side where the mode's defining inequality is verified: h < 1 for
/// large gaps, h > 1 for small gaps. Throws search_error (with the scan table
/// in the message) when no sign change is found.
CriticalResult find_critical_c(int degree, GapMode mode, const RBounds& r_bounds,
                               const SearchOptions& options = SearchOptions{});

}  // namespace zetagap::optimizer
