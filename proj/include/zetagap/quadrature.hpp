#pragma once

// Gauss rules on [0,1] built by Golub-Welsch from the Jacobi-polynomial
// recurrence. The fractional-power weight (1-u)^alpha is part of the rule,
// so integrands stay entire and convergence is spectral.

#include <cstddef>
#include <memory>
#include <vector>

namespace zetagap::quadrature {

/// Nodes/weights such that  int_0^1 (1-u)^alpha g(u) du ~= sum_i w[i] g(u[i]).
/// alpha = 0 gives plain Gauss-Legendre on [0,1].
struct Rule01 {
  double alpha = 0.0;
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Builds the n-point rule for weight (1-u)^alpha, alpha > -1, n >= 1.
Rule01 gauss_jacobi_01(std::size_t n, double alpha);

/// Cached, immutable, shareable rule keyed on (n, alpha). Thread-safe.
std::shared_ptr<const Rule01> cached_rule(std::size_t n, double alpha);

}  // namespace zetagap::quadrature
