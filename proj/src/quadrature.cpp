#include "zetagap/quadrature.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <map>
#include <mutex>
#include <string>

#include "zetagap/errors.hpp"
#include "zetagap/linalg.hpp"

namespace zetagap::quadrature {

Rule01 gauss_jacobi_01(std::size_t n, double alpha) {
  if (n < 1 || n > 4096)
    throw param_error("gauss_jacobi_01: node count must be in [1, 4096], got " +
                      std::to_string(n));
  if (!(alpha > -1.0))
    throw param_error("gauss_jacobi_01: alpha must exceed -1, got " + std::to_string(alpha));

  // Recurrence coefficients of the monic Jacobi polynomials for weight
  // (1-x)^alpha on [-1,1] (the beta parameter is 0 throughout).
  std::vector<double> diag(n), off(n > 1 ? n - 1 : 0);
  diag[0] = -alpha / (alpha + 2.0);
  for (std::size_t k = 1; k < n; ++k) {
    const double t = 2.0 * k + alpha;
    diag[k] = -alpha * alpha / (t * (t + 2.0));
    const double b2 =
        4.0 * k * k * (k + alpha) * (k + alpha) / (t * t * (t + 1.0) * (t - 1.0));
    off[k - 1] = std::sqrt(b2);
  }

  const auto eig = linalg::tridiag_eigen_first_row(std::move(diag), std::move(off));

  // Map x in [-1,1] to u = (1+x)/2; total mass folds to 1/(alpha+1).
  Rule01 rule;
  rule.alpha = alpha;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    rule.nodes[i] = 0.5 * (1.0 + eig.values[i]);
    rule.weights[i] = eig.first_components[i] * eig.first_components[i] / (alpha + 1.0);
  }
  return rule;
}

std::shared_ptr<const Rule01> cached_rule(std::size_t n, double alpha) {
  using Key = std::pair<std::size_t, std::uint64_t>;
  static std::mutex mu;
  static std::map<Key, std::shared_ptr<const Rule01>> cache;

  const Key key{n, std::bit_cast<std::uint64_t>(alpha)};
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto rule = std::make_shared<const Rule01>(gauss_jacobi_01(n, alpha));
  cache.emplace(key, rule);
  return rule;
}

}  // namespace zetagap::quadrature
