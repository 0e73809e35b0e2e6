#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "sl3/lie.hpp"

using namespace sl3;

TEST_SUITE("lie") {

TEST_CASE("brackets of the distinguished elements") {
  CHECK(bracket(basis::X(), basis::Y()) == basis::Z());
  CHECK(bracket(basis::H1(), basis::H1()) == AlgebraElement());
  CHECK(bracket(basis::H1(), basis::X()) == 2.0 * basis::X());
  // T = E12 - E21 brackets X into the Cartan, not into 2X
  CHECK(bracket(basis::T(), basis::X()) == basis::H1());
}

TEST_CASE("bracket is bilinear, antisymmetric and satisfies Jacobi") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> c(-2, 2);
  double worst = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const AlgebraElement x(oracle::random_traceless(rng, 1.0));
    const AlgebraElement y(oracle::random_traceless(rng, 1.0));
    const AlgebraElement z(oracle::random_traceless(rng, 1.0));
    const Mat3 jac = (bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y))).matrix();
    worst = std::max(worst, max_abs(jac));
    if (i < 200) {
      const double a = c(rng), b = c(rng);
      CHECK(max_abs((bracket(x, y) + bracket(y, x)).matrix()) == 0.0);
      CHECK(max_abs_diff(bracket(a * x + b * y, z).matrix(), (a * bracket(x, z) + b * bracket(y, z)).matrix()) < 1e-12);
    }
  }
  CHECK(worst < 1e-10);
}

TEST_CASE("cartan involution") {
  CHECK(cartan_involution(basis::X()).matrix() == -Mat3::unit(1, 0));
  CHECK(cartan_involution(basis::T()) == basis::T());
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    const AlgebraElement x(oracle::random_traceless(rng, 3.0));
    const AlgebraElement y(oracle::random_traceless(rng, 3.0));
    CHECK(cartan_involution(cartan_involution(x)) == x);
    CHECK(max_abs_diff(cartan_involution(bracket(x, y)).matrix(),
                       bracket(cartan_involution(x), cartan_involution(y)).matrix()) < 1e-14);
  }
}

TEST_CASE("group_exp") {
  CHECK(max_abs_diff(group_exp(AlgebraElement()).matrix(), Mat3::identity()) == 0.0);

  const double th = 0.9;
  const Mat3 k = group_exp(th * basis::T()).matrix();
  CHECK(k(0, 0) == doctest::Approx(std::cos(th)).epsilon(1e-14));
  CHECK(k(0, 1) == doctest::Approx(std::sin(th)).epsilon(1e-14));
  CHECK(k(1, 0) == doctest::Approx(-std::sin(th)).epsilon(1e-14));
  CHECK(k(2, 2) == doctest::Approx(1.0));

  // exp(sX) exp(tY) = exp(tY) exp(sX) exp(st Z)
  const double s = 0.7, t = -1.3;
  const Mat3 lhs = group_exp(s * basis::X()).matrix() * group_exp(t * basis::Y()).matrix();
  const Mat3 rhs = group_exp(t * basis::Y()).matrix() * group_exp(s * basis::X()).matrix() *
                   group_exp((s * t) * basis::Z()).matrix();
  const Mat3 direct{{1, s, s * t, 0, 1, t, 0, 0, 1}};
  CHECK(oracle::max_diff(lhs, rhs) < 1e-14);
  CHECK(oracle::max_diff(lhs, direct) < 1e-14);

  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    const AlgebraElement x(oracle::random_traceless(rng, 3.0));
    CHECK(std::abs(group_exp(x).matrix().det() - 1.0) < 1e-9);
  }
  CHECK_THROWS_AS(group_exp(AlgebraElement(Mat3::diagonal(2000, -1000, -1000))), std::domain_error);
}

TEST_CASE("group and algebra invariants are enforced") {
  CHECK_THROWS_AS(GroupElement(Mat3::diagonal(2, 1, 1)), std::invalid_argument);
  CHECK_THROWS_AS(AlgebraElement(Mat3::identity()), std::invalid_argument);
}

TEST_CASE("iwasawa against a Cholesky oracle") {
  const auto id = iwasawa_decompose(GroupElement());
  CHECK(max_abs_diff(id.k.matrix(), Mat3::identity()) < 1e-15);
  CHECK(max_abs_diff(id.a.matrix(), Mat3::identity()) < 1e-15);
  CHECK(max_abs_diff(id.n.matrix(), Mat3::identity()) < 1e-15);

  const Mat3 u{{1, 2.5, -1, 0, 1, 0.3, 0, 0, 1}};
  const auto fu = iwasawa_decompose(GroupElement(u));
  CHECK(max_abs_diff(fu.k.matrix(), Mat3::identity()) < 1e-14);
  CHECK(max_abs_diff(fu.n.matrix(), u) < 1e-14);

  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) {
    const GroupElement g = group_exp(AlgebraElement(oracle::random_traceless(rng, 1.5)));
    const auto f = iwasawa_decompose(g);
    const auto o = oracle::cholesky_iwasawa(g.matrix());
    CHECK(max_abs_diff(f.k.matrix() * f.a.matrix() * f.n.matrix(), g.matrix()) < 1e-10);
    CHECK(oracle::max_diff(f.a.matrix(), o.a) < 1e-10);
    CHECK(oracle::max_diff(f.n.matrix(), o.n) < 1e-9);
    CHECK(oracle::max_diff(f.k.matrix(), o.k) < 1e-9);
    CHECK(max_abs_diff(f.k.matrix() * f.k.matrix().transpose(), Mat3::identity()) < 1e-10);
    const auto again = iwasawa_decompose(f.k * f.a * f.n);
    CHECK(max_abs_diff(again.a.matrix(), f.a.matrix()) < 1e-10);
    CHECK(max_abs_diff(again.n.matrix(), f.n.matrix()) < 1e-10);
  }
}

TEST_CASE("weyl discriminant") {
  CHECK(weyl_discriminant(2, 1, 0.5) == doctest::Approx(0.75).epsilon(1e-15));
  CHECK(weyl_discriminant(1, 1, 1) == 0.0);
  CHECK(weyl_discriminant(3, 1, 1.0 / 3.0) == doctest::Approx(32.0 / 9.0).epsilon(1e-14));
  CHECK_THROWS_AS(weyl_discriminant(2, 2, 2), std::invalid_argument);
}

}
