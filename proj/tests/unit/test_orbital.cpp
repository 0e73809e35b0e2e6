#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "sl3/orbital.hpp"
#include "sl3/roots.hpp"

using namespace sl3;

namespace {

QuadratureSpec spec(double rel) {
  QuadratureSpec s;
  s.rel_tol = rel;
  s.abs_tol = 1e-13;
  return s;
}

TestFunction bump_near(const EllipticElement& g, double radius, std::vector<double> profile = {1.0}) {
  const Mat3 n = unipotent(0.2, -0.1, 0.15);
  return make_bump(GroupElement(n.inverse() * g.matrix() * n), radius, std::move(profile));
}

// The literal form gamma * n(x, y, z) with its own Jacobian a1^2 a2.
double literal_product_form(const TestFunction& f, const EllipticElement& g, double rel) {
  const double R = f.radius;
  QuadratureSpec s = spec(rel);
  const double bx = (std::abs(f.center(0, 1)) + R) / g.a1;
  const double by = (std::abs(f.center(1, 2)) + R) / g.a2;
  const double bz = (std::abs(f.center(0, 2)) + R) / g.a1;
  s.truncation_box = {{-bx, bx}, {-by, by}, {-bz, bz}};
  const auto r = integrate(
      [&](std::span<const double> p) { return f(g.matrix() * unipotent(p[0], p[1], p[2])); }, 3, s);
  return r.value * g.a1 * g.a1 * g.a2;
}

}  // namespace

TEST_SUITE("orbital") {

TEST_CASE("elliptic element construction") {
  CHECK_THROWS_AS(EllipticElement::make(2, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(EllipticElement::make(1, 1, 1), std::invalid_argument);
  const auto g = EllipticElement::make(2, 1, 0.5);
  CHECK(g.discriminant() == doctest::Approx(0.75));
  CHECK(g.min_gap() == doctest::Approx(0.5));
  CHECK_NOTHROW(EllipticElement::make(1, 1, 1, true));
}

TEST_CASE("elliptic orbital integral: numeric vs closed form") {
  const auto g = EllipticElement::make(2, 1, 0.5);
  const TestFunction f = make_bump(GroupElement(g.matrix()), 0.6, {1.0, 0.5});
  const auto n = orbital_integral_elliptic_numeric(f, g, spec(1e-8));
  const auto c = orbital_integral_elliptic_closed(f, g, spec(1e-8));
  CHECK(n.converged);
  CHECK(c.converged);
  CHECK(n.value > 0);
  CHECK(std::abs(n.value - c.value) <= 1e-6 * std::abs(c.value));

  const auto c5 = orbital_integral_elliptic_closed(f.scaled(5.0), g, spec(1e-8));
  CHECK(c5.value == doctest::Approx(5 * c.value).epsilon(1e-9));
}

TEST_CASE("closed form against the literal product form") {
  const auto g = EllipticElement::make(1.6, 0.8, 1 / 1.28);
  const TestFunction f = bump_near(g, 0.4);
  const double lit = literal_product_form(f, g, 1e-7) / g.discriminant();
  const double closed = orbital_integral_elliptic_closed(f, g, spec(1e-9)).value;
  CHECK(lit == doctest::Approx(closed).epsilon(1e-5));
}

TEST_CASE("orbit missing the support gives zero") {
  const auto g = EllipticElement::make(2, 1, 0.5);
  const TestFunction far = make_bump(GroupElement(Mat3::diagonal(5, 5, 1.0 / 25)), 0.5);
  CHECK(orbital_integral_elliptic_numeric(far, g, spec(1e-8)).value == 0.0);
  CHECK(orbital_integral_elliptic_closed(far, g, spec(1e-8)).value == 0.0);
  CHECK(orbital_integral_elliptic_closed(make_bump(GroupElement(g.matrix()), 0.5, {}), g, spec(1e-8)).value == 0.0);
}

TEST_CASE("permuted eigenvalues") {
  const auto g = EllipticElement::make(0.7, 1.9, 1 / 1.33);
  const TestFunction f = bump_near(g, 0.8);
  const auto wg = EllipticElement::make(g.a2, g.a1, g.a3);
  const TestFunction fw = bump_near(wg, 0.8);
  for (const auto* pair : {&g, &wg}) {
    const TestFunction& h = pair == &g ? f : fw;
    const double n = orbital_integral_elliptic_numeric(h, *pair, spec(1e-8)).value;
    const double c = orbital_integral_elliptic_closed(h, *pair, spec(1e-8)).value;
    CHECK(std::abs(n - c) <= 1e-6 * std::abs(c));
  }
}

TEST_CASE("transfer function normalizations") {
  const auto g = EllipticElement::make(2, 1, 0.5);
  const TestFunction f = bump_near(g, 0.7);
  const double O = orbital_integral_elliptic_closed(f, g, spec(1e-9)).value;
  const double d = g.discriminant();
  const double up = transfer_function_elliptic(f, g, TransferNormalization::delta_times_orbital, spec(1e-9)).value;
  const double down =
      transfer_function_elliptic(f, g, TransferNormalization::delta_inverse_times_orbital, spec(1e-9)).value;
  CHECK(up == doctest::Approx(d * O).epsilon(1e-12));
  CHECK(down == doctest::Approx(O / d).epsilon(1e-12));
  CHECK(transfer_function_elliptic(f.scaled(0.0), g, TransferNormalization::delta_times_orbital, spec(1e-9)).value ==
        0.0);
}

TEST_CASE("delta times O stays bounded as two eigenvalues merge") {
  const TestFunction f = make_bump(GroupElement(Mat3::diagonal(1.2, 1.2, 1 / 1.44)), 0.6);
  std::vector<double> vals;
  for (double eps : {1e-1, 1e-2, 1e-3, 1e-4, 0.0}) {
    const double a1 = 1.2 + eps, a2 = 1.2;
    const auto g = EllipticElement::make(a1, a2, 1 / (a1 * a2), true);
    vals.push_back(transfer_function_elliptic(f, g, TransferNormalization::delta_times_orbital, spec(1e-9)).value);
  }
  for (double v : vals) CHECK(std::isfinite(v));
  CHECK(std::abs(vals[3] - vals[4]) < std::abs(vals[1] - vals[4]));
  CHECK(std::abs(vals[3] - vals[4]) < 1e-3 * std::abs(vals[4]));
}

TEST_CASE("rotation elements") {
  const RotationElement k(0.8);
  CHECK(std::abs(k.discriminant() - std::complex<double>(0, -2 * std::sin(0.8))) < 1e-15);
  CHECK(RotationElement(0.8 + 2 * std::numbers::pi).theta == doctest::Approx(0.8));
  CHECK(RotationElement(-std::numbers::pi).theta == doctest::Approx(std::numbers::pi));
  const Mat3 m = so2_orbit_point(2.0, 0.8);
  CHECK(m.det() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(m(0, 1) == doctest::Approx(2 * std::sin(0.8)));
  CHECK(m(1, 0) == doctest::Approx(-std::sin(0.8) / 2));
}

TEST_CASE("so2 reduced integral against the pre-reduction integral") {
  const KAveragedFunction F = k_average(make_bump(GroupElement(), 2.0, {1.0, 0.3}), 12);
  CHECK_THROWS_AS(orbital_integral_so2(F, RotationElement(0.0), spec(1e-8)), std::invalid_argument);
  for (double th : {0.4, 1.1, 2.0}) {
    const RotationElement k(th);
    const auto red = orbital_integral_so2(F, k, spec(1e-9));
    const auto pre = orbital_integral_so2_prereduction(F, k, spec(1e-6));
    CHECK(red.converged);
    CHECK(std::abs(red.value - pre.value) < 1e-4);
  }
  const KAveragedFunction G = k_average(make_bump(GroupElement(), 1.0, {1.0, -0.5}), 8);
  for (double th : {0.3, 2.5}) {
    const RotationElement k(th);
    CHECK(std::abs(orbital_integral_so2(G, k, spec(1e-9)).value -
                   orbital_integral_so2_prereduction(G, k, spec(1e-6)).value) < 1e-4);
  }
  const KAveragedFunction Far = k_average(make_bump(GroupElement(Mat3::diagonal(6, 6, 1.0 / 36)), 0.5), 8);
  CHECK(orbital_integral_so2(Far, RotationElement(1.0), spec(1e-8)).value == 0.0);
}

TEST_CASE("singular expansion") {
  const KAveragedFunction Z = k_average(make_bump(GroupElement(), 2.0, {}), 8);
  const auto z = singular_expansion(Z, geometric_grid(0.3, 1e-3, 8), spec(1e-8));
  CHECK(z.A == 0.0);
  CHECK(z.B == 0.0);
  CHECK(z.C == 0.0);

  const KAveragedFunction F = k_average(make_bump(GroupElement(), 2.0, {1.0, 0.3}), 12);
  const auto e = singular_expansion(F, geometric_grid(0.3, 1e-3, 12), spec(1e-9));
  const double A = unipotent_integral(F, spec(1e-10)).value;
  CHECK(std::abs(e.A - A) <= 0.02 * std::abs(A));
  CHECK_FALSE(e.ill_conditioned);
  CHECK(e.G_log_curvature <= std::abs(e.A));
  CHECK_THROWS_AS(singular_expansion(F, geometric_grid(0.3, 1e-3, 5), spec(1e-8)), std::invalid_argument);
  CHECK_THROWS_AS(singular_expansion(F, geometric_grid(0.5, 1e-3, 10), spec(1e-8)), std::invalid_argument);

  const auto grid = geometric_grid(0.3, 1e-3, 5);
  CHECK(grid.front() == doctest::Approx(0.3));
  CHECK(grid.back() == doctest::Approx(1e-3));
  CHECK(grid[1] / grid[0] == doctest::Approx(grid[2] / grid[1]));
}

TEST_CASE("kappa sums") {
  const CosetValues v{1.5, -2.0, 4.25};
  CHECK(kappa_orbital_sum(v, KappaCharacter::trivial()) == doctest::Approx(3.75));
  CHECK(kappa_orbital_sum(v, KappaCharacter::distinguished()) == doctest::Approx(1.5 + 2.0 - 4.25));
  CHECK(stable_orbital_sum({1, 2, 3}) == 6.0);
  CHECK(stable_orbital_sum({0, 0, 0}) == 0.0);
  std::array<double, 4> sums{};
  for (const auto& k : all_kappa_characters()) sums[k.index()] = kappa_orbital_sum(v, k);
  const auto inv = kappa_fourier_inversion(sums);
  for (int i = 0; i < 3; ++i) CHECK(std::abs(inv[i] - v[i]) < 1e-12);
  CHECK(std::abs(inv[3]) < 1e-12);
  const auto chars = all_kappa_characters();
  for (int i = 0; i < 4; ++i) CHECK(chars[i].index() == i);
  CHECK(chars[0].is_trivial());
}

TEST_CASE("stable sum over the even Weyl images of gamma") {
  const auto g = EllipticElement::make(1.5, 0.9, 1 / 1.35);
  const TestFunction f = make_bump(GroupElement(Mat3::diagonal(1.5, 0.9, 1 / 1.35)), 0.9);
  CosetValues values{};
  double direct = 0.0;
  int i = 0;
  for (const auto& w : even_weyl_elements()) {
    const auto a = w.act(std::array<double, 3>{g.a1, g.a2, g.a3});
    const auto wg = EllipticElement::make(a[0], a[1], a[2]);
    values[i++] = orbital_integral_elliptic_closed(f, wg, spec(1e-8)).value;
    direct += orbital_integral_elliptic_numeric(f, wg, spec(1e-8)).value;
  }
  CHECK(stable_orbital_sum(values) == doctest::Approx(direct).epsilon(1e-6));
}

}
