#include "zetagap/kernels.hpp"

#include <atomic>
#include <cassert>

namespace zetagap::kernels {

double dot_scalar(const double* x, const double* y, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += x[i] * y[i];
  return s;
}

double sum_squares_scalar(const double* x, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += x[i] * x[i];
  return s;
}

void poly_eval_many_scalar(const double* coeffs, std::size_t nc, const double* x,
                           double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    double acc = coeffs[nc - 1];
    for (std::size_t j = nc - 1; j-- > 0;) acc = acc * x[i] + coeffs[j];
    out[i] = acc;
  }
}

namespace {

struct Backend {
  double (*dot)(const double*, const double*, std::size_t);
  double (*sum_squares)(const double*, std::size_t);
  void (*poly_eval_many)(const double*, std::size_t, const double*, double*, std::size_t);
  const char* name;
};

constexpr Backend kScalar{dot_scalar, sum_squares_scalar, poly_eval_many_scalar, "scalar"};

Backend detect() {
#if defined(__x86_64__) || defined(_M_X64)
  if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma"))
    return Backend{dot_avx2, sum_squares_avx2, poly_eval_many_avx2, "avx2"};
#endif
  return kScalar;
}

std::atomic<bool> g_force_scalar{false};

const Backend& active() {
  static const Backend detected = detect();
  return g_force_scalar.load(std::memory_order_relaxed) ? kScalar : detected;
}

}  // namespace

double dot(std::span<const double> x, std::span<const double> y) {
  assert(x.size() == y.size());
  return active().dot(x.data(), y.data(), x.size());
}

double sum_squares(std::span<const double> x) {
  return active().sum_squares(x.data(), x.size());
}

void poly_eval_many(std::span<const double> coeffs, std::span<const double> x,
                    std::span<double> out) {
  assert(!coeffs.empty());
  assert(x.size() == out.size());
  active().poly_eval_many(coeffs.data(), coeffs.size(), x.data(), out.data(), x.size());
}

const char* active_backend() { return active().name; }

void force_scalar(bool on) { g_force_scalar.store(on, std::memory_order_relaxed); }

}  // namespace zetagap::kernels
