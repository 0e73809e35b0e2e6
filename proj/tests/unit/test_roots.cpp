#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

#include "oracles.hpp"
#include "sl3/roots.hpp"

using namespace sl3;

namespace {

TorusPoint torus(double t1, double t2) {
  return {std::polar(1.0, t1), std::polar(1.0, t2), std::polar(1.0, -t1 - t2)};
}

TorusPoint random_regular(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> a(-3.14159, 3.14159);
  for (;;) {
    const TorusPoint z = torus(a(rng), a(rng));
    if (min_eigenvalue_gap(z) > 1e-3) return z;
  }
}

}  // namespace

TEST_SUITE("roots") {

TEST_CASE("coroot pairings") {
  CHECK(pair_weight_coroot(Weight(1, 0, 0), 1, 2) == 1);
  CHECK(pair_weight_coroot(Weight(0, 0, 0), 2, 3) == 0);
  CHECK(pair_weight_coroot(Weight(2, 1, 0), 1, 3) == 2);
}

TEST_CASE("root system") {
  CHECK(all_roots().size() == 6);
  CHECK(positive_roots().size() == 3);
  CHECK(Root(1, 2).kind() == Root::Kind::compact);
  CHECK(Root(2, 1).kind() == Root::Kind::compact);
  CHECK(Root(1, 3).kind() == Root::Kind::noncompact);
  CHECK(rho() == Weight(1, 0, -1));
}

TEST_CASE("weyl group") {
  const auto& W = weyl_group();
  std::set<std::array<int, 3>> perms;
  for (const auto& w : W) {
    perms.insert(w.perm);
    CHECK(w.sign == w.matrix_determinant());
    for (const auto& v : W) {
      const auto wv = w.compose(v);
      CHECK(wv.sign == w.sign * v.sign);
      CHECK(std::find(W.begin(), W.end(), wv) != W.end());
      const Weight l(3, 1, -2);
      CHECK(wv.act(l) == w.act(v.act(l)));
    }
  }
  CHECK(perms.size() == 6);
  for (const auto& w : even_weyl_elements()) CHECK(w.is_even());
  CHECK(compact_reflection().act(Weight(3, 1, 0)) == Weight(1, 3, 0));
}

TEST_CASE("weyl orbits") {
  for (const auto& [w, image] : weyl_orbit(Weight(0, 0, 0))) CHECK(image == Weight(0, 0, 0));
  std::set<std::array<int, 3>> images;
  for (const auto& [w, image] : weyl_orbit(Weight(1, 0, -1))) images.insert(image.coords);
  CHECK(images.size() == 6);
  CHECK(weyl_orbit(Weight(1, 0, -1), true).size() == 3);
}

TEST_CASE("weight classification") {
  CHECK(classify_weight(Weight(0, -1, 1)) == WeightClass::holomorphic);
  CHECK(classify_weight(Weight(0, 0, 0)) == WeightClass::F_singular);
  CHECK(classify_weight(Weight(2, 0, -1)) == WeightClass::antiholomorphic);
  CHECK(classify_functional({0.5, 0, 0}) == WeightClass::not_in_F);
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<int> d(-5, 5);
  for (int i = 0; i < 200; ++i) {
    const Weight l(d(rng), d(rng), d(rng));
    const int c = d(rng);
    CHECK(classify_weight(l) == classify_weight(l + Weight(c, c, c)));
    CHECK(classify_weight(l) == classify_weight(l.normalized()));
  }
}

TEST_CASE("tableau counts against the dimension formula") {
  for (int a = 0; a <= 6; ++a)
    for (int b = 0; b <= a; ++b)
      for (int c = 0; c <= b; ++c) CHECK(count_tableaux(Weight(a, b, c)) == oracle::weyl_dimension({a, b, c}));
  CHECK(count_tableaux(Weight(2, 1, 0)) == 8);
}

TEST_CASE("schur oracle against brute-force fillings") {
  const std::array<oracle::C, 3> x{{{0.3, 0.7}, {-1.1, 0.2}, {0.5, -0.4}}};
  CHECK(std::abs(schur_oracle(Weight(1, 1, 1), x) - x[0] * x[1] * x[2]) < 1e-15);
  CHECK(std::abs(schur_oracle(Weight(1, 0, 0), x) - (x[0] + x[1] + x[2])) < 1e-15);
  CHECK(std::abs(schur_oracle(Weight(2, 1, 0), {1.0, 1.0, 1.0}) - 8.0) < 1e-15);
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= a; ++b)
      for (int c = 0; c <= b; ++c) {
        const oracle::C s = schur_oracle(Weight(a, b, c), x);
        CHECK(std::abs(s - oracle::schur_brute({a, b, c}, x)) <= 1e-12 * std::max(1.0, std::abs(s)));
      }
  CHECK_THROWS_AS(schur_oracle(Weight(1, 0, -1), x), std::invalid_argument);
}

TEST_CASE("weyl character quotient") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 20; ++i) {
    const TorusPoint z = random_regular(rng);
    CHECK(std::abs(weyl_character_quotient(Weight(0, 0, 0), z) - 1.0) < 1e-12);
    CHECK(std::abs(weyl_character_quotient(Weight(1, 0, 0), z) - (z[0] + z[1] + z[2])) < 1e-12);
  }
  // limit towards the identity
  const double e = 1e-4;
  const auto q = weyl_character_quotient(Weight(2, 1, 0), torus(e, 2.5 * e));
  CHECK(std::abs(q - 8.0) < 1e-3);
  CHECK_THROWS_AS(weyl_character_quotient(Weight(1, 0, 0), torus(0.4, 0.4)), std::domain_error);
}

TEST_CASE("quotient matches the bialternant, the tableau sum and is symmetric") {
  std::mt19937_64 rng(21);
  double worst = 0.0;
  for (int k = 0; k < 50; ++k) {
    const TorusPoint z = random_regular(rng);
    const TorusPoint zp{z[2], z[0], z[1]};
    for (int a = 0; a <= 4; ++a)
      for (int b = 0; b <= a; ++b)
        for (int c = 0; c <= b; ++c) {
          const Weight l(a, b, c);
          const Complex q = weyl_character_quotient(l, z);
          const Complex ref = oracle::bialternant({a, b, c}, {z[0], z[1], z[2]});
          const Complex s = schur_oracle(l, z);
          worst = std::max(worst, std::abs(q - s) / std::abs(s));
          CHECK(std::abs(q - ref) <= 1e-9 * std::max(1.0, std::abs(ref)));
          CHECK(std::abs(q - weyl_character_quotient(l, zp)) <= 1e-10 * std::max(1.0, std::abs(q)));
        }
  }
  CHECK(worst < 1e-10);
}

TEST_CASE("alpha32 rho does not reproduce the character") {
  const TorusPoint z = torus(0.4, 1.3);
  const Complex std_q = weyl_character_quotient(Weight(1, 0, 0), z);
  const Complex alt_q = weyl_character_quotient(Weight(1, 0, 0), z, RhoConvention::alpha32);
  CHECK(std::abs(std_q - (z[0] + z[1] + z[2])) < 1e-12);
  CHECK(std::abs(alt_q - std_q) > 1e-3);
}

}
