#include <cmath>
#include <complex>
#include <string>

#include "zetagap/arith.hpp"
#include "zetagap/errors.hpp"

namespace zetagap::arith {

namespace detail {

// Power series sum_k (-1)^k x^(2k+1) / ((2k+1)(2k+1)!). Accumulated in long
// double: near x = 16 the largest term is ~1e6, which would cost double
// precision ~1e-10 of the 1e-13 budget.
double si_taylor(double x) {
  const long double x2 = static_cast<long double>(x) * x;
  long double term_base = x;  // x^(2k+1)/(2k+1)!
  long double sum = x;
  for (int k = 1; k < 200; ++k) {
    term_base *= -x2 / ((2.0L * k) * (2.0L * k + 1.0L));
    const long double term = term_base / (2.0L * k + 1.0L);
    sum += term;
    if (std::abs(term) < 1e-20L * std::abs(sum) && 2 * k > x) break;
  }
  return static_cast<double>(sum);
}

// Si(x) = pi/2 - f(x) cos x - g(x) sin x with the auxiliary functions taken
// from the continued fraction for E1(ix) (modified Lentz):
//   e^z E1(z) = 1/(z+1- 1/(z+3- 4/(z+5- 9/(z+7- ...))))
// Converges quickly on the imaginary axis once |z| is ~16 or larger.
double si_auxiliary(double x) {
  using C = std::complex<long double>;
  const C z(0.0L, static_cast<long double>(x));
  const long double fpmin = 1e-300L;
  C b = z + 1.0L;
  C c = C(1.0L / fpmin, 0.0L);
  C d = 1.0L / b;
  C h = d;
  for (int i = 1; i < 400; ++i) {
    const long double a = -static_cast<long double>(i) * i;
    b += 2.0L;
    d = 1.0L / (a * d + b);
    c = b + a / c;
    const C del = c * d;
    h *= del;
    if (std::abs(del - 1.0L) < 1e-19L) break;
  }
  // h = e^{ix} E1(ix); aux functions are f = -Im h, g = Re h.
  const long double f = -h.imag();
  const long double g = h.real();
  const long double half_pi = 1.57079632679489661923L;
  return static_cast<double>(half_pi - f * std::cos(static_cast<long double>(x)) -
                             g * std::sin(static_cast<long double>(x)));
}

}  // namespace detail

double sine_integral(double x) {
  if (!(x >= 0.0) || x > 1e4)
    throw param_error("sine_integral: x must be in [0, 1e4], got " + std::to_string(x));
  if (x == 0.0) return 0.0;
  return x <= 16.0 ? detail::si_taylor(x) : detail::si_auxiliary(x);
}

}  // namespace zetagap::arith
