#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "zetagap/errors.hpp"
#include "zetagap/quadrature.hpp"

using namespace zetagap;

namespace {

// int_0^1 u^m (1-u)^alpha du by the Beta recursion, written out here so the
// check does not lean on library code.
std::vector<double> beta_ref(double alpha, int mmax) {
  std::vector<double> b(mmax + 1);
  b[0] = 1.0 / (alpha + 1.0);
  for (int m = 1; m <= mmax; ++m) b[m] = b[m - 1] * m / (m + alpha + 1.0);
  return b;
}

double apply(const quadrature::Rule01& rule, int m) {
  double s = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i)
    s += rule.weights[i] * std::pow(rule.nodes[i], m);
  return s;
}

}  // namespace

TEST_CASE("rules integrate weighted monomials to machine precision") {
  for (double alpha : {0.0, 0.5129, 3.84, 8.61, 15.0, 35.0}) {
    for (std::size_t n : {8u, 64u, 96u}) {
      const auto rule = quadrature::gauss_jacobi_01(n, alpha);
      const auto ref = beta_ref(alpha, static_cast<int>(2 * n - 1));
      // exactness holds up to degree 2n-1; sample across the range
      for (int m : {0, 1, 2, 5, int(n), int(2 * n - 3), int(2 * n - 1)}) {
        CAPTURE(alpha);
        CAPTURE(n);
        CAPTURE(m);
        CHECK(apply(rule, m) == doctest::Approx(ref[m]).epsilon(5e-13));
      }
    }
  }
}

TEST_CASE("weights are positive, nodes interior and ascending") {
  for (double alpha : {0.0, 8.61}) {
    const auto rule = quadrature::gauss_jacobi_01(64, alpha);
    double total = 0.0;
    for (std::size_t i = 0; i < 64; ++i) {
      CHECK(rule.weights[i] > 0.0);
      CHECK(rule.nodes[i] > 0.0);
      CHECK(rule.nodes[i] < 1.0);
      if (i) CHECK(rule.nodes[i] > rule.nodes[i - 1]);
      total += rule.weights[i];
    }
    CHECK(total == doctest::Approx(1.0 / (alpha + 1.0)).epsilon(1e-14));
  }
}

TEST_CASE("legendre special case matches known 2-point rule") {
  const auto rule = quadrature::gauss_jacobi_01(2, 0.0);
  const double offset = 0.5 / std::sqrt(3.0);
  CHECK(rule.nodes[0] == doctest::Approx(0.5 - offset).epsilon(1e-15));
  CHECK(rule.nodes[1] == doctest::Approx(0.5 + offset).epsilon(1e-15));
  CHECK(rule.weights[0] == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(rule.weights[1] == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("rule cache shares instances") {
  const auto a = quadrature::cached_rule(64, 3.84);
  const auto b = quadrature::cached_rule(64, 3.84);
  CHECK(a.get() == b.get());
  const auto c = quadrature::cached_rule(96, 3.84);
  CHECK(a.get() != c.get());
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(quadrature::gauss_jacobi_01(0, 0.0), param_error);
  CHECK_THROWS_AS(quadrature::gauss_jacobi_01(8, -1.0), param_error);
  CHECK_THROWS_AS(quadrature::gauss_jacobi_01(5000, 0.0), param_error);
}
