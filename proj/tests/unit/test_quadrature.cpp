#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "sl3/quadrature.hpp"

using namespace sl3;

namespace {

double bump1(double x) { return std::abs(x) < 1 ? std::exp(1 - 1 / (1 - x * x)) : 0.0; }

QuadratureResult q1(const std::function<double(double)>& h, double a, double b, double rel = 1e-10) {
  QuadratureSpec s;
  s.rel_tol = rel;
  s.abs_tol = 1e-15;
  return integrate_1d(h, a, b, s);
}

}  // namespace

TEST_SUITE("quadrature") {

TEST_CASE("polynomial exactness and zero integrand") {
  const auto r = q1([](double x) { return x * x; }, 0, 1);
  CHECK(std::abs(r.value - 1.0 / 3.0) < 1e-14);
  CHECK(r.converged);
  const auto z = q1([](double) { return 0.0; }, -2, 5);
  CHECK(z.value == 0.0);
  CHECK(z.error_estimate == 0.0);
}

TEST_CASE("bump against a fixed-grid oracle") {
  const double ref1 = oracle::midpoint_1d(bump1, -1, 1, 1000000);
  CHECK(std::abs(q1(bump1, -1.5, 1.5).value - ref1) < 1e-8);

  QuadratureSpec s;
  s.rel_tol = 1e-10;
  s.truncation_box = {{-1, 1}, {-1, 1}};
  auto bump2 = [](double x, double y) {
    const double r2 = x * x + y * y;
    return r2 < 1 ? std::exp(1 - 1 / (1 - r2)) : 0.0;
  };
  const auto r2 = integrate([&](std::span<const double> p) { return bump2(p[0], p[1]); }, 2, s);
  double ref2 = 0.0;
  const int n = 1000;
  const double h = 2.0 / n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) ref2 += bump2(-1 + (i + 0.5) * h, -1 + (j + 0.5) * h);
  ref2 *= h * h;
  CHECK(std::abs(r2.value - ref2) < 1e-8);
}

TEST_CASE("linearity") {
  auto f = [](double x) { return std::sin(3 * x) + x; };
  auto g = [](double x) { return std::exp(-x * x); };
  const double a = 2.5, b = -0.75;
  const auto If = q1(f, 0, 2), Ig = q1(g, 0, 2);
  const auto Ih = q1([&](double x) { return a * f(x) + b * g(x); }, 0, 2);
  CHECK(std::abs(Ih.value - a * If.value - b * Ig.value) <=
        Ih.error_estimate + std::abs(a) * If.error_estimate + std::abs(b) * Ig.error_estimate + 1e-15);
}

TEST_CASE("error estimates are honest on a benchmark battery") {
  const double pi = std::numbers::pi;
  struct Case {
    std::function<double(double)> f;
    double a, b, exact;
  };
  const std::vector<Case> battery = {
      {[](double x) { return std::exp(x); }, 0, 1, std::exp(1.0) - 1},
      {[](double x) { return x * x * x * x * x; }, -1, 2, (64.0 - 1.0) / 6.0},
      {[](double x) { return std::sin(x); }, 0, pi, 2.0},
      {[](double x) { return std::cos(10 * x); }, 0, 1, std::sin(10.0) / 10},
      {[](double x) { return 1 / (1 + x * x); }, 0, 1, pi / 4},
      {[](double x) { return 1 / (1 + 25 * x * x); }, -1, 1, 2 * std::atan(5.0) / 5},
      {[](double x) { return std::sqrt(x); }, 0, 1, 2.0 / 3},
      {[](double x) { return x > 0 ? std::log(x) : 0.0; }, 0, 1, -1.0},
      {[](double x) { return std::abs(x - 0.3); }, 0, 1, (0.09 + 0.49) / 2},
      {[](double x) { return std::exp(-x * x); }, -5, 5, std::sqrt(pi) * std::erf(5.0)},
      {[](double x) { return 1 / x; }, 1, 10, std::log(10.0)},
      {[](double x) { return x * std::exp(-x); }, 0, 20, 1 - 21 * std::exp(-20.0)},
      {[](double x) { return std::sin(x) * std::sin(x); }, 0, 2 * pi, pi},
      {[](double x) { return x > 0 ? 1 / std::sqrt(x) : 0.0; }, 0, 1, 2.0},
      {[](double x) { return std::exp(std::cos(x)); }, 0, 2 * pi, 2 * pi * std::cyl_bessel_i(0.0, 1.0)},
      {[](double x) { return 1 / (x * x + 1e-2); }, -1, 1, 2 * std::atan(10.0) / 0.1},
      {[](double x) { return std::pow(x, 1.5); }, 0, 4, 2.0 / 5 * 32},
      {[](double x) { return std::tanh(20 * (x - 0.5)); }, 0, 1, 0.0},
      {[](double x) { return x < 0.5 ? 1.0 : 0.0; }, 0, 1, 0.5},
      {[](double x) { return bump1(x); }, -1, 1, oracle::simpson_1d(bump1, -1, 1, 200000)},
  };
  CHECK(battery.size() == 20);
  for (std::size_t i = 0; i < battery.size(); ++i) {
    const auto& c = battery[i];
    const auto r = q1(c.f, c.a, c.b, 1e-9);
    const double err = std::abs(r.value - c.exact);
    INFO("case " << i << " value " << r.value << " estimate " << r.error_estimate);
    CHECK(err <= 3 * r.error_estimate + 4e-16 * std::max(1.0, std::abs(c.exact)));
  }
}

TEST_CASE("non-convergence is flagged") {
  QuadratureSpec s;
  s.rel_tol = 1e-12;
  s.abs_tol = 1e-15;
  s.max_subdivision_depth = 2;
  const auto r = integrate_1d([](double x) { return 1 / std::sqrt(std::abs(x - 1.0 / 3)); }, 0, 1, s);
  CHECK_FALSE(r.converged);
}

TEST_CASE("multi-dimensional and iterated integrals") {
  QuadratureSpec s;
  s.truncation_box = {{0, 1}, {0, 2}, {-1, 1}};
  const auto r = integrate([](std::span<const double> p) { return p[0] * p[1] * p[2] * p[2]; }, 3, s);
  CHECK(r.value == doctest::Approx(0.5 * 2 * (2.0 / 3)).epsilon(1e-12));

  QuadratureSpec d;
  d.rel_tol = 1e-10;
  const std::vector<LimitFunction> limits = {
      [](std::span<const double>) { return Interval{-1, 1}; },
      [](std::span<const double> x) {
        const double h = std::sqrt(std::max(0.0, 1 - x[0] * x[0]));
        return Interval{-h, h};
      }};
  const auto disk = integrate_iterated([](std::span<const double>) { return 1.0; }, limits, d);
  CHECK(std::abs(disk.value - std::numbers::pi) < 1e-8);
}

TEST_CASE("config round trip") {
  QuadratureSpec s;
  s.rel_tol = 3e-7;
  s.abs_tol = 1e-12;
  s.max_subdivision_depth = 17;
  s.truncation_box = {{-1.5, 2}, {0, 0.25}};
  const auto t = QuadratureSpec::from_config(s.to_config());
  CHECK(t.rel_tol == s.rel_tol);
  CHECK(t.abs_tol == s.abs_tol);
  CHECK(t.max_subdivision_depth == 17);
  REQUIRE(t.truncation_box.size() == 2);
  CHECK(t.truncation_box[0].lo == -1.5);
  CHECK(t.truncation_box[1].hi == 0.25);
  const auto u = QuadratureSpec::from_config("# comment\n\nrel_tol = 1e-5\n", s);
  CHECK(u.rel_tol == 1e-5);
  CHECK(u.max_subdivision_depth == 17);
  CHECK_THROWS_AS(QuadratureSpec::from_config("bogus=1"), std::invalid_argument);
  QuadratureSpec bad;
  bad.rel_tol = -1;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

}
