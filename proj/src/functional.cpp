#include "zetagap/functional.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "zetagap/errors.hpp"
#include "zetagap/kernels.hpp"
#include "zetagap/quadrature.hpp"

namespace zetagap {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kMaxPiC = 25.0;

// A term of the kernel sin(pi c v)/v, with the removable singularity filled.
inline double kernel_sinc(double pic, double v) {
  const double arg = pic * v;
  return std::abs(arg) < 1e-8 ? pic : std::sin(arg) / v;
}

}  // namespace

const char* mode_name(GapMode mode) {
  return mode == GapMode::large_gaps ? "large" : "small";
}

PolynomialF::PolynomialF(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty() || coeffs_.size() > kMaxDegree + 1)
    throw param_error("PolynomialF: coefficient count must be in [1, 7], got " +
                      std::to_string(coeffs_.size()));
  if (std::all_of(coeffs_.begin(), coeffs_.end(), [](double a) { return a == 0.0; }))
    throw param_error("PolynomialF: coefficients must not all be zero");
}

double PolynomialF::operator()(double x) const {
  double acc = coeffs_.back();
  for (std::size_t j = coeffs_.size() - 1; j-- > 0;) acc = acc * x + coeffs_[j];
  return acc;
}

FunctionalParams::FunctionalParams(double c_, double r_, GapMode mode_)
    : c(c_), r(r_), mode(mode_) {
  if (!(c > 0.0) || c > 10.0)
    throw param_error("FunctionalParams: c must be in (0, 10], got " + std::to_string(c_));
  if (!(r >= 1.0) || r > 6.0)
    throw param_error("FunctionalParams: r must be in [1, 6], got " + std::to_string(r_));
}

void QuadratureSpec::validate() const {
  if (outer_nodes < 8)
    throw param_error("QuadratureSpec: outer_nodes must be >= 8, got " +
                      std::to_string(outer_nodes));
  if (inner_nodes < 8)
    throw param_error("QuadratureSpec: inner_nodes must be >= 8, got " +
                      std::to_string(inner_nodes));
  if (!(tolerance > 0.0))
    throw param_error("QuadratureSpec: tolerance must be positive, got " +
                      std::to_string(tolerance));
}

namespace {

// One pass of the double integral at fixed node counts: returns the coupling
// term t = (2r/pi) * I/D so that h = c + sign * t.
double coupling_quadrature(const FunctionalParams& params, const PolynomialF& f,
                           std::size_t n_outer, std::size_t n_inner) {
  const double alpha = params.r * params.r - 1.0;
  const auto outer = quadrature::cached_rule(n_outer, alpha);
  const auto inner = quadrature::cached_rule(n_inner, 0.0);
  const double pic = kPi * params.c;

  std::vector<double> shifted(n_inner), fshift(n_inner), wkern(n_inner);
  std::vector<double> fu(n_outer);
  kernels::poly_eval_many(f.coeffs(), outer->nodes, fu);

  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < n_outer; ++i) {
    const double u = outer->nodes[i];
    for (std::size_t j = 0; j < n_inner; ++j) {
      const double v = u * inner->nodes[j];
      shifted[j] = u - v;
      wkern[j] = u * inner->weights[j] * kernel_sinc(pic, v);
    }
    kernels::poly_eval_many(f.coeffs(), shifted, fshift);
    num += outer->weights[i] * fu[i] * kernels::dot(wkern, fshift);
    den += outer->weights[i] * fu[i] * fu[i];
  }
  return 2.0 * params.r / kPi * num / den;
}

std::size_t refined(std::size_t n) { return n + n / 2; }

}  // namespace

double eval_h_quadrature(const FunctionalParams& params, const PolynomialF& f,
                         const QuadratureSpec& quad) {
  quad.validate();
  const double t1 = coupling_quadrature(params, f, quad.outer_nodes, quad.inner_nodes);
  const double t2 =
      coupling_quadrature(params, f, refined(quad.outer_nodes), refined(quad.inner_nodes));
  if (std::abs(t1 - t2) > quad.tolerance)
    throw accuracy_error("eval_h_quadrature: refinement residual " +
                         std::to_string(std::abs(t1 - t2)) + " exceeds tolerance " +
                         std::to_string(quad.tolerance));
  return params.c + mode_sign(params.mode) * t2;
}

namespace series {

std::vector<double> beta_moments(double r, int mmax) {
  const double r2 = r * r;
  std::vector<double> beta(mmax + 1);
  beta[0] = 1.0 / r2;
  for (int m = 1; m <= mmax; ++m) beta[m] = beta[m - 1] * m / (m + r2);
  return beta;
}

// Entry (i,j):  sum_k (-1)^k (pi c)^(2k+1)/(2k+1) * j!/(2k+j+1)! *
// beta[i+j+2k+1], from expanding the kernel and integrating term by term.
// The alternating sum cancels up to ~7 digits near pi*c = 25, so terms are
// accumulated in long double to keep the result good to ~1e-12 absolute.
std::vector<std::vector<double>> bilinear_matrix(double c, double r, int degree) {
  const double pic = kPi * c;
  if (pic > kMaxPiC)
    throw branch_error("series: pi*c = " + std::to_string(pic) +
                       " exceeds the series branch limit 25 (use the quadrature engine)");
  if (degree < 0 || degree > PolynomialF::kMaxDegree)
    throw param_error("series: degree must be in [0, 6], got " + std::to_string(degree));

  constexpr int kMaxTerms = 300;
  const int mmax = 2 * degree + 2 * kMaxTerms + 3;
  const double r2 = r * r;

  // Long-double Beta moments for the inner accumulation.
  std::vector<long double> beta(mmax + 1);
  beta[0] = 1.0L / static_cast<long double>(r2);
  for (int m = 1; m <= mmax; ++m)
    beta[m] = beta[m - 1] * m / (m + static_cast<long double>(r2));

  const long double pic2 = static_cast<long double>(pic) * pic;
  std::vector<std::vector<double>> out(degree + 1, std::vector<double>(degree + 1));
  for (int i = 0; i <= degree; ++i) {
    for (int j = 0; j <= degree; ++j) {
      // term_0 = (pi c) * 1/(j+1) * beta[i+j+1]
      long double term = static_cast<long double>(pic) / (j + 1) * beta[i + j + 1];
      long double sum = term;
      long double comp = 0.0L;  // Neumaier compensation
      long double mag = std::abs(term);
      bool converged = false;
      for (int k = 0; k + 1 < kMaxTerms; ++k) {
        const int m = i + j + 2 * k + 1;
        term *= -pic2 * (2 * k + 1);
        term /= static_cast<long double>(2 * k + 3) * (2 * k + j + 2) * (2 * k + j + 3);
        term *= (static_cast<long double>(m + 1) * (m + 2)) /
                ((m + 1 + static_cast<long double>(r2)) * (m + 2 + static_cast<long double>(r2)));
        const long double t = sum + term;
        comp += std::abs(sum) >= std::abs(term) ? (sum - t) + term : (term - t) + sum;
        sum = t;
        mag = std::max(mag, std::abs(sum));
        if (std::abs(term) < 1e-18L * std::max(mag, 1e-300L) && 2 * (k + 1) > pic) {
          converged = true;
          break;
        }
      }
      if (!converged)
        throw accuracy_error("series: kernel expansion did not converge at pi*c = " +
                             std::to_string(pic));
      out[i][j] = static_cast<double>(sum + comp);
    }
  }
  return out;
}

}  // namespace series

double eval_h_series(const FunctionalParams& params, const PolynomialF& f) {
  const int degree = f.degree();
  const auto bilinear = series::bilinear_matrix(params.c, params.r, degree);
  const auto beta = series::beta_moments(params.r, 2 * degree);
  const auto& a = f.coeffs();

  double num = 0.0, den = 0.0;
  for (int i = 0; i <= degree; ++i)
    for (int j = 0; j <= degree; ++j) {
      num += a[i] * a[j] * bilinear[i][j];
      den += a[i] * a[j] * beta[i + j];
    }
  return params.c + mode_sign(params.mode) * (2.0 * params.r / kPi) * num / den;
}

namespace {

double coupling_r1(double c, const PolynomialF& f, std::size_t n) {
  const auto rule = quadrature::cached_rule(n, 0.0);
  std::vector<double> fx(n), wf(n), krow(n);
  kernels::poly_eval_many(f.coeffs(), rule->nodes, fx);
  for (std::size_t i = 0; i < n; ++i) wf[i] = rule->weights[i] * fx[i];

  double num = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double u = rule->nodes[i];
    for (std::size_t j = 0; j < n; ++j) {
      const double d = u - rule->nodes[j];
      krow[j] = std::abs(d) < 1e-10 ? c : std::sin(kPi * c * d) / (kPi * d);
    }
    num += wf[i] * kernels::dot(wf, krow);
  }
  const double den = kernels::dot(wf, fx);  // sum w f^2
  return num / den;
}

}  // namespace

double eval_h_r1(double c, const PolynomialF& f, GapMode mode, const QuadratureSpec& quad) {
  if (!(c > 0.0) || c > 10.0)
    throw param_error("eval_h_r1: c must be in (0, 10], got " + std::to_string(c));
  quad.validate();
  const double t1 = coupling_r1(c, f, quad.outer_nodes);
  const double t2 = coupling_r1(c, f, refined(quad.outer_nodes));
  if (std::abs(t1 - t2) > quad.tolerance)
    throw accuracy_error("eval_h_r1: refinement residual " + std::to_string(std::abs(t1 - t2)) +
                         " exceeds tolerance " + std::to_string(quad.tolerance));
  return c + mode_sign(mode) * t2;
}

}  // namespace zetagap
