#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "oracles.hpp"
#include "zetagap/arith.hpp"
#include "zetagap/errors.hpp"
#include "zetagap/oracle.hpp"

using namespace zetagap;
using namespace zetagap::oracle;

namespace {

const arith::SieveTables& tables_1e4() {
  static const arith::SieveTables t = arith::build_sieve(10'000);
  return t;
}

const arith::SieveTables& tables_T1e6() {
  static const arith::SieveTables t = arith::build_sieve(6000);
  return t;
}

}  // namespace

TEST_CASE("K is floor(T / (log T)^2)") {
  CHECK(OracleParams::make(1e4, 1.0, 1.0, GapMode::large_gaps).K == 117);
  CHECK(OracleParams::make(1e5, 1.0, 1.0, GapMode::large_gaps).K == 754);
  CHECK(OracleParams::make(1e6, 1.0, 1.0, GapMode::large_gaps).K == 5239);
  CHECK_THROWS_AS(OracleParams::make(999.0, 1.0, 1.0, GapMode::large_gaps), param_error);
}

TEST_CASE("K below 100 is rejected by the evaluator") {
  // T = 1e3 is a constructible height but gives K = 20, too small to compare
  // against the asymptotics.
  const OracleParams p = OracleParams::make(1e3, 1.0, 1.0, GapMode::large_gaps);
  CHECK(p.K < 100);
  CHECK_THROWS_AS(discrete_h(p, PolynomialF({1.0}), tables_1e4()), param_error);
}

TEST_CASE("sieve must cover K") {
  const OracleParams p = OracleParams::make(1e4, 1.0, 1.0, GapMode::large_gaps);
  const arith::SieveTables tiny = arith::build_sieve(100);
  CHECK_THROWS_AS(discrete_h(p, PolynomialF({1.0}), tiny), param_error);
}

TEST_CASE("h vanishes with c") {
  const OracleParams p = OracleParams::make(1e4, 1.0, 1e-10, GapMode::large_gaps);
  CHECK(std::abs(discrete_h(p, PolynomialF({1.0}), tables_1e4())) < 1e-6);
}

TEST_CASE("scaling f leaves the discrete ratio unchanged") {
  const OracleParams p = OracleParams::make(1e4, 1.23, 0.7, GapMode::small_gaps);
  const double h1 = discrete_h(p, PolynomialF({1.0, 0.99, -0.42}), tables_1e4());
  const double h2 = discrete_h(p, PolynomialF({5.0, 4.95, -2.1}), tables_1e4());
  CHECK(std::abs(h1 - h2) <= 1e-12);
}

TEST_CASE("denominator is positive") {
  for (GapMode mode : {GapMode::large_gaps, GapMode::small_gaps}) {
    const OracleParams p = OracleParams::make(1e4, 1.5, 1.0, mode);
    const auto a = dirichlet_coefficients(p, PolynomialF({1.0, -2.0, 1.0}), tables_1e4());
    const DiscreteParts parts = discrete_parts(p, a);
    CHECK(parts.denominator > 0.0);
  }
}

TEST_CASE("numerator via all-n enumeration matches the prime-power walk") {
  const OracleParams p = OracleParams::make(1e4, 1.5, 1.0, GapMode::large_gaps);
  const PolynomialF f({1.0, 2.0});
  const auto& tables = tables_1e4();
  const auto a = dirichlet_coefficients(p, f, tables);
  const DiscreteParts parts = discrete_parts(p, a);

  // independent route: loop over every n and let the von Mangoldt weight
  // decide which terms exist
  const double lnT = std::log(p.T);
  double numerator = 0.0;
  for (std::int64_t n = 2; n <= p.K; ++n) {
    const double mangoldt = arith::von_mangoldt(n, tables);
    if (mangoldt == 0.0) continue;
    const double log_n = std::log(double(n));
    const double g = 2.0 * std::sin(3.14159265358979323846 * p.c * log_n / lnT) /
                     (3.14159265358979323846 * log_n);
    double s = 0.0;
    for (std::int64_t k = 1; k * n <= p.K; ++k) s += a[k - 1] * a[n * k - 1];
    numerator += g * mangoldt / std::sqrt(double(n)) * s;
  }
  CHECK(std::abs(parts.numerator - numerator) <= 1e-12 * (1.0 + std::abs(numerator)));

  // and discrete_h agrees with the parts-based evaluation
  const double h = discrete_h(p, f, tables);
  CHECK(std::abs(h - (p.c - parts.numerator / parts.denominator)) <= 1e-12);
}

TEST_CASE("small-gaps terms are the large-gaps terms flipped by lambda(n)") {
  const PolynomialF one({1.0});
  const auto& tables = tables_1e4();
  const OracleParams pl = OracleParams::make(1e4, 1.5, 1.0, GapMode::large_gaps);
  const OracleParams ps = OracleParams::make(1e4, 1.5, 1.0, GapMode::small_gaps);
  const DiscreteParts large = discrete_parts(pl, dirichlet_coefficients(pl, one, tables));
  const DiscreteParts small = discrete_parts(ps, dirichlet_coefficients(ps, one, tables));
  REQUIRE(large.terms.size() == small.terms.size());
  for (std::size_t i = 0; i < large.terms.size(); ++i) {
    CHECK(large.terms[i].n == small.terms[i].n);
    const int sign = arith::liouville(large.terms[i].n, tables);
    CHECK(std::abs(small.terms[i].contribution - sign * large.terms[i].contribution) <=
          1e-15 * (1.0 + std::abs(large.terms[i].contribution)));
  }
}

TEST_CASE("thread count does not change the bits") {
  const OracleParams p = OracleParams::make(1e5, 2.2, 2.337, GapMode::large_gaps);
  const arith::SieveTables t = arith::build_sieve(800);
  const PolynomialF f({1.0});
  const double h1 = discrete_h(p, f, t, 1);
  const double h2 = discrete_h(p, f, t, 2);
  const double h4 = discrete_h(p, f, t, 4);
  CHECK(h1 == h2);
  CHECK(h1 == h4);
}

TEST_CASE("r = 2 coefficients agree with a divisor-count construction") {
  const OracleParams p = OracleParams::make(1e5, 2.0, 1.0, GapMode::large_gaps);
  const arith::SieveTables t = arith::build_sieve(800);
  const PolynomialF f({1.0});
  const double h_library = discrete_h(p, f, t);

  // independent coefficient route: tau(k) by divisor counting
  std::vector<double> a(p.K);
  const double logK = std::log(double(p.K));
  for (std::int64_t k = 1; k <= p.K; ++k)
    a[k - 1] = double(testoracle::divisor_count(k)) / std::sqrt(double(k)) *
               f(std::log(double(p.K) / k) / logK);
  const double h_tau = discrete_h_from_coefficients(p, a);
  CHECK(std::abs(h_library - h_tau) <= 1e-12);
}

TEST_CASE("discrete value approaches the asymptotic one (f = 1 calibration)") {
  // Calibrated against the T = {1e4, 1e5, 1e6} study: the gap at T = 1e6 is
  // ~0.266 and shrinking roughly like 1/log T.
  const OracleParams p = OracleParams::make(1e6, 1.0, 1.0, GapMode::large_gaps);
  const double h = discrete_h(p, PolynomialF({1.0}), tables_T1e6());
  const double asym =
      eval_h_quadrature(FunctionalParams(1.0, 1.0, GapMode::large_gaps), PolynomialF({1.0}));
  CHECK(std::abs(h - asym) < 0.30);
}

TEST_CASE("convergence study shape and monotone improvement") {
  const std::vector<double> T_list{1e4, 1e5, 1e6};
  const auto rows = convergence_study(T_list, 1.0, GapMode::large_gaps, 1.0,
                                      PolynomialF({1.0}), tables_T1e6());
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].K == 117);
  CHECK(rows[2].K == 5239);
  CHECK(rows[2].abs_error < rows[1].abs_error);
  CHECK(rows[1].abs_error < rows[0].abs_error);

  const auto single = convergence_study(std::vector<double>{1e4}, 1.0, GapMode::large_gaps,
                                        1.0, PolynomialF({1.0}), tables_1e4());
  CHECK(single.size() == 1);

  CHECK_THROWS_AS(convergence_study(std::vector<double>{1e5, 1e4}, 1.0, GapMode::large_gaps,
                                    1.0, PolynomialF({1.0}), tables_T1e6()),
                  param_error);
  CHECK_THROWS_AS(convergence_study(std::vector<double>{}, 1.0, GapMode::large_gaps, 1.0,
                                    PolynomialF({1.0}), tables_T1e6()),
                  param_error);
}

TEST_CASE("convergence on the four published parameter sets") {
  struct Set {
    double c, r;
    std::vector<double> coeffs;
    GapMode mode;
  };
  const std::vector<Set> sets{
      {2.69, 3.1, {1.0, 10.0, 39.0}, GapMode::large_gaps},
      {0.5155, 1.23, {1.0, 0.99, -0.42}, GapMode::small_gaps},
      {1.97, 1.0, {1.0, 17.9426, -17.9426}, GapMode::large_gaps},
      {0.5179, 1.0, {1.0, 0.46526, -0.46526}, GapMode::small_gaps},
  };
  for (const auto& set : sets) {
    const auto rows = convergence_study(std::vector<double>{1e4, 1e6}, set.r, set.mode, set.c,
                                        PolynomialF(set.coeffs), tables_T1e6());
    CAPTURE(set.c);
    CHECK(rows[1].abs_error < rows[0].abs_error);
  }
}
