#pragma once

// The gap functional h(c) = c -/+ (2r/pi) * I(c,r,f) / D(r,f) with
//   I = int_0^1 (1-u)^(r^2-1) f(u) int_0^u sin(pi c v)/v f(u-v) dv du
//   D = int_0^1 (1-u)^(r^2-1) f(u)^2 du,
// minus for the large-gaps coefficient family, plus for the small-gaps one.
// h(c) < 1 certifies a normalized zero gap >= c; h(c) > 1 certifies one <= c.
// Two independent engines (weighted quadrature and an exact Beta-series
// expansion) evaluate the same quantity, plus the symmetric r = 1 form.

#include <cstddef>
#include <vector>

namespace zetagap {

enum class GapMode { large_gaps, small_gaps };

/// Sign applied to the coupling term: -1 for large gaps, +1 for small gaps.
inline int mode_sign(GapMode mode) { return mode == GapMode::large_gaps ? -1 : +1; }

const char* mode_name(GapMode mode);

/// Weight polynomial f on [0,1], degree at most 6, not identically zero.
class PolynomialF {
public:
  explicit PolynomialF(std::vector<double> coeffs);

  double operator()(double x) const;
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<double>& coeffs() const { return coeffs_; }

  static constexpr int kMaxDegree = 6;

private:
  std::vector<double> coeffs_;
};

/// Which h(c) variant to evaluate: gap length c in (0, 10], divisor power
/// r in [1, 6], and the coefficient family (mode).
struct FunctionalParams {
  double c;
  double r;
  GapMode mode;
  FunctionalParams(double c_, double r_, GapMode mode_);
};

/// Node counts for the double-integral engine and the agreement threshold
/// between the base rule and the 1.5x-refined rule.
struct QuadratureSpec {
  std::size_t outer_nodes = 64;  // Gauss-Jacobi in u, weight (1-u)^(r^2-1)
  std::size_t inner_nodes = 64;  // Gauss-Legendre in v
  double tolerance = 1e-9;

  void validate() const;
};

/// Quadrature engine. The result is certified by agreement within
/// quad.tolerance against a rule with 1.5x the nodes (accuracy_error
/// otherwise); the refined value is returned.
double eval_h_quadrature(const FunctionalParams& params, const PolynomialF& f,
                         const QuadratureSpec& quad = QuadratureSpec{});

/// Series engine: exact expansion of the kernel in powers of (pi c) with Beta
/// integrals, summed in extended precision. Requires pi*c <= 25
/// (branch_error above); absolute accuracy ~1e-12 within the branch.
double eval_h_series(const FunctionalParams& params, const PolynomialF& f);

/// Symmetric r = 1 form: h = c -/+ [int int f(u) f(v) sin(pi c (u-v)) /
/// (pi (u-v)) du dv] / int f^2, the same quantity as eval_h_quadrature at
/// r = 1 after a change of variables.
double eval_h_r1(double c, const PolynomialF& f, GapMode mode,
                 const QuadratureSpec& quad = QuadratureSpec{});

namespace series {

/// beta[m] = int_0^1 u^m (1-u)^(r^2-1) du, m = 0..mmax (a Beta-function
/// recursion; shared by the series engine and the optimizer's Gram matrix).
std::vector<double> beta_moments(double r, int mmax);

/// Matrix of the numerator bilinear form on monomials:
/// entry (i,j) = int_0^1 (1-u)^(r^2-1) u^i int_0^u sin(pi c v)/v (u-v)^j dv du,
/// so that I(c,r,f) = a^T B a for f with coefficient vector a. Not symmetric.
/// Requires pi*c <= 25.
std::vector<std::vector<double>> bilinear_matrix(double c, double r, int degree);

}  // namespace series

}  // namespace zetagap
