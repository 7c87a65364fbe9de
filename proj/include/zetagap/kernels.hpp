#pragma once

// Data-parallel inner loops used by the integrators and the discrete-sum
// evaluator. Scalar reference kernels plus AVX2/FMA variants; the variant is
// picked once at startup from CPUID and can be overridden for testing.

#include <cstddef>
#include <span>

namespace zetagap::kernels {

/// Sum of x[i]*y[i]. Spans must have equal length.
double dot(std::span<const double> x, std::span<const double> y);

/// Sum of x[i]^2.
double sum_squares(std::span<const double> x);

/// Evaluates the polynomial sum_i coeffs[i]*x^i (Horner) at every x, writing
/// into out. coeffs must be non-empty; x and out must have equal length.
void poly_eval_many(std::span<const double> coeffs, std::span<const double> x,
                    std::span<double> out);

// Scalar reference implementations, always available; the dispatched entry
// points above must agree with these up to rounding. Exposed for
// equivalence tests.
double dot_scalar(const double* x, const double* y, std::size_t n);
double sum_squares_scalar(const double* x, std::size_t n);
void poly_eval_many_scalar(const double* coeffs, std::size_t nc, const double* x,
                           double* out, std::size_t n);

#if defined(__x86_64__) || defined(_M_X64)
double dot_avx2(const double* x, const double* y, std::size_t n);
double sum_squares_avx2(const double* x, std::size_t n);
void poly_eval_many_avx2(const double* coeffs, std::size_t nc, const double* x,
                         double* out, std::size_t n);
#endif

/// Name of the active backend: "avx2" or "scalar".
const char* active_backend();

/// Forces the scalar backend (true) or re-enables runtime detection (false).
void force_scalar(bool on);

}  // namespace zetagap::kernels
