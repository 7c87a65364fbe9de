// AVX2/FMA kernel variants. This translation unit is compiled with
// -mavx2 -mfma; it is only entered after a runtime CPUID check.

#include "zetagap/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

namespace zetagap::kernels {

namespace {

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

}  // namespace

double dot_avx2(const double* x, const double* y, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i + 4), _mm256_loadu_pd(y + i + 4), acc1);
  }
  for (; i + 4 <= n; i += 4)
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc0);
  double s = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) s += x[i] * y[i];
  return s;
}

double sum_squares_avx2(const double* x, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256d a = _mm256_loadu_pd(x + i);
    __m256d b = _mm256_loadu_pd(x + i + 4);
    acc0 = _mm256_fmadd_pd(a, a, acc0);
    acc1 = _mm256_fmadd_pd(b, b, acc1);
  }
  for (; i + 4 <= n; i += 4) {
    __m256d a = _mm256_loadu_pd(x + i);
    acc0 = _mm256_fmadd_pd(a, a, acc0);
  }
  double s = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) s += x[i] * x[i];
  return s;
}

void poly_eval_many_avx2(const double* coeffs, std::size_t nc, const double* x,
                         double* out, std::size_t n) {
  const __m256d top = _mm256_set1_pd(coeffs[nc - 1]);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d xv = _mm256_loadu_pd(x + i);
    __m256d acc = top;
    for (std::size_t j = nc - 1; j-- > 0;)
      acc = _mm256_fmadd_pd(acc, xv, _mm256_set1_pd(coeffs[j]));
    _mm256_storeu_pd(out + i, acc);
  }
  if (i < n) poly_eval_many_scalar(coeffs, nc, x + i, out + i, n - i);
}

}  // namespace zetagap::kernels

#endif  // x86_64
