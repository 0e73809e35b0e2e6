#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "sl3/testfn.hpp"

using namespace sl3;

TEST_SUITE("testfn") {

TEST_CASE("bump values and support") {
  const GroupElement c = group_exp(0.3 * basis::H1() + 0.2 * basis::X());
  const TestFunction f = make_bump(c, 0.7, {2.0, -1.0});
  CHECK(f(c.matrix()) == doctest::Approx(2.0).epsilon(1e-15));
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> d(-1, 1);
  for (int i = 0; i < 200; ++i) {
    Mat3 g = c.matrix();
    for (auto& e : g.v) e += d(rng);
    if (std::sqrt(frobenius_distance_sq(g, c.matrix())) >= 0.7) CHECK(f(g) == 0.0);
  }
  CHECK(f.scaled(5.0)(c.matrix()) == doctest::Approx(10.0));
  CHECK(make_bump(c, 1.0, {}).is_zero());
  CHECK_THROWS_AS(make_bump(c, 0.0), std::invalid_argument);
  CHECK(f.support_norm_bound() == doctest::Approx(frobenius_norm(c.matrix()) + 0.7));
}

TEST_CASE("line integral through the center against a fixed grid") {
  const TestFunction f = make_bump(GroupElement(), 1.2, {1.0, 0.4});
  const Mat3 dir = Mat3::unit(0, 1);
  auto line = [&](double s) { return f(Mat3::identity() + dir * s); };
  const double fine = oracle::midpoint_1d(line, -1.2, 1.2, 400000);
  const double coarse = oracle::simpson_1d(line, -1.2, 1.2, 4000);
  CHECK(fine > 0.0);
  CHECK(std::abs(fine - coarse) < 1e-9);
}

TEST_CASE("so3 grid and gauss-legendre") {
  std::vector<double> x, w;
  gauss_legendre(6, x, w);
  double s0 = 0, s10 = 0, s11 = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    s0 += w[i];
    s10 += w[i] * std::pow(x[i], 10);
    s11 += w[i] * std::pow(x[i], 11);
  }
  CHECK(s0 == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(s10 == doctest::Approx(2.0 / 11).epsilon(1e-13));
  CHECK(std::abs(s11) < 1e-14);

  const SO3Grid g = so3_grid(8);
  double wsum = 0, tr = 0, tr2 = 0, e00 = 0;
  for (std::size_t i = 0; i < g.rotations.size(); ++i) {
    const Mat3& k = g.rotations[i];
    CHECK(max_abs_diff(k * k.transpose(), Mat3::identity()) < 1e-14);
    wsum += g.weights[i];
    tr += g.weights[i] * k.trace();
    tr2 += g.weights[i] * k.trace() * k.trace();
    e00 += g.weights[i] * k(0, 0) * k(0, 0);
  }
  // Haar moments of SO(3)
  CHECK(wsum == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(std::abs(tr) < 1e-13);
  CHECK(tr2 == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(e00 == doctest::Approx(1.0 / 3).epsilon(1e-12));

  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(0, 1);
  for (int i = 0; i < 20; ++i) {
    const Mat3 k = rotation_from_unit_cube(u(rng), u(rng), u(rng));
    CHECK(max_abs_diff(k * k.transpose(), Mat3::identity()) < 1e-14);
    CHECK(k.det() == doctest::Approx(1.0).epsilon(1e-14));
  }
}

TEST_CASE("k-averaging") {
  const TestFunction f = make_bump(GroupElement(), 2.0);
  const KAveragedFunction F = k_average(f, 12);
  CHECK(F.single_average());
  CHECK(bi_invariance_residual(F, 20, 99) < 1e-3);

  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> u(0, 1);
  const double at_id = F(Mat3::identity());
  for (int i = 0; i < 20; ++i) {
    const Mat3 k = rotation_from_unit_cube(u(rng), u(rng), u(rng));
    CHECK(std::abs(F(k) - at_id) < 1e-3);
  }

  const KAveragedFunction Z = k_average(make_bump(GroupElement(), 2.0, {}), 8);
  CHECK(Z(Mat3::identity()) == 0.0);
  CHECK(Z(group_exp(0.4 * basis::S()).matrix()) == 0.0);
  CHECK_THROWS_AS(k_average(f, 3), std::invalid_argument);

  const TestFunction off = make_bump(group_exp(0.2 * basis::S()), 1.5);
  const KAveragedFunction G = k_average(off, 8);
  CHECK_FALSE(G.single_average());
  CHECK(bi_invariance_residual(G, 5, 3) < 5e-2);
}

TEST_CASE("k-average residual decreases with the grid order") {
  const TestFunction f = make_bump(GroupElement(), 2.0);
  double prev = 1e300;
  for (int order : {8, 16, 32}) {
    const double r = bi_invariance_residual(k_average(f, order), 20, 5);
    CHECK(r <= 1.1 * prev);
    prev = r;
  }
}

}
