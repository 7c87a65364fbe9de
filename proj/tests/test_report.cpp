#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <charconv>
#include <cmath>
#include <random>
#include <string>

#include "zetagap/report.hpp"

using namespace zetagap;

TEST_CASE("format_double round-trips bit for bit") {
  std::mt19937_64 rng(123);
  std::uniform_real_distribution<double> dist(-1e3, 1e3);
  auto roundtrip = [](double x) {
    const std::string text = report::format_double(x);
    double parsed = 0.0;
    std::from_chars(text.data(), text.data() + text.size(), parsed);
    return parsed;
  };

  for (double x : {0.1, 1.0 / 3.0, 2.6938476562500001, 1e-308, 6.02214076e23, 0.0,
                   -123.45600000000002, 0.51552734375}) {
    CHECK(roundtrip(x) == x);
  }
  for (int i = 0; i < 1000; ++i) {
    const double x = dist(rng);
    CHECK(roundtrip(x) == x);
    CHECK(roundtrip(x * 1e-200) == x * 1e-200);
  }
}

TEST_CASE("result record JSON round-trips numeric fields") {
  report::ResultRecord record("eval");
  record.set_parameter("c", 2.69);
  record.set_parameter("coeffs", std::vector<double>{1.0, 10.0, 39.0});
  record.set_output("h_quadrature", 0.9997354045136931);
  record.set_output("h_series", 0.99973540451369288);
  record.set_diagnostic("engine_residual", 2.2e-16);
  record.set_wall_time(0.0123);

  const std::string text = record.dump();
  const auto parsed = nlohmann::json::parse(text);
  CHECK(parsed["command"] == "eval");
  CHECK(parsed["parameters"]["c"].get<double>() == 2.69);
  CHECK(parsed["outputs"]["h_quadrature"].get<double>() == 0.9997354045136931);
  CHECK(parsed["outputs"]["h_series"].get<double>() == 0.99973540451369288);
  CHECK(parsed["diagnostics"]["engine_residual"].get<double>() == 2.2e-16);
  CHECK(parsed["parameters"]["coeffs"][2].get<double>() == 39.0);
}

TEST_CASE("csv lines are plain comma joins") {
  CHECK(report::csv_line({"c", "r", "h"}) == "c,r,h\n");
  CHECK(report::csv_line({report::format_double(0.5), "", "1"}) == "0.5,,1\n");
}
