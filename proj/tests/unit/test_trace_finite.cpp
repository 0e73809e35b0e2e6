#include <doctest.h>

#include <set>
#include <stdexcept>

#include "sl3/trace_finite.hpp"

using namespace sl3;

namespace {

// sum_{x in reps} sum_{gamma in Gamma0} f(x^-1 gamma x), reps found by brute force
std::int64_t brute_trace(const FiniteGroupModel& m, const std::vector<std::int64_t>& f) {
  std::set<std::set<int>> cosets;
  std::vector<int> reps;
  for (int x = 0; x < m.order(); ++x) {
    std::set<int> c;
    for (int g : m.subgroup()) c.insert(m.mul(g, x));
    if (cosets.insert(c).second) reps.push_back(x);
  }
  std::int64_t t = 0;
  for (int x : reps)
    for (int g : m.subgroup()) {
      int xi = 0;
      while (m.mul(xi, x) != m.identity()) ++xi;
      t += f[m.mul(xi, m.mul(g, x))];
    }
  return t;
}

int index_count(const FiniteGroupModel& m) { return m.order() / static_cast<int>(m.subgroup().size()); }

}  // namespace

TEST_SUITE("trace_finite") {

TEST_CASE("model axioms") {
  for (const auto& name : finite_model_names()) {
    const auto m = finite_model(name);
    CHECK_NOTHROW(m.check_axioms());
    CHECK(static_cast<int>(m.coset_representatives().size()) == index_count(m));
    int total = 0;
    for (const auto& c : m.conjugacy_classes()) total += static_cast<int>(c.size());
    CHECK(total == m.order());
  }
  CHECK_THROWS(finite_model("nope"));
}

TEST_CASE("identity indicator and constants") {
  for (const auto& name : finite_model_names()) {
    const auto m = finite_model(name);
    const auto id = finite_function(m, "identity");
    CHECK(regular_kernel_trace(m, id) == index_count(m));
    CHECK(geometric_side(m, id) == index_count(m));
    CHECK(spectral_side(m, id) == index_count(m));
    const auto sm = spectral_matrix(m, id);
    const int k = index_count(m);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) CHECK(sm[static_cast<std::size_t>(i) * k + j] == (i == j ? 1 : 0));

    const auto c = finite_function(m, "constant:3");
    const std::int64_t expect = 3 * static_cast<std::int64_t>(m.subgroup().size()) * k;
    CHECK(regular_kernel_trace(m, c) == expect);
    CHECK(geometric_side(m, c) == expect);
    CHECK(spectral_side(m, c) == expect);
  }
}

TEST_CASE("all three sides agree with the brute-force kernel") {
  const auto s3 = finite_model("s3-a3");
  for (int i = 0; i < s3.order(); ++i) {
    const auto f = finite_function(s3, "indicator:" + std::to_string(i));
    const auto b = brute_trace(s3, f);
    CHECK(regular_kernel_trace(s3, f) == b);
    CHECK(geometric_side(s3, f) == b);
    CHECK(spectral_side(s3, f) == b);
  }
  for (const auto& name : finite_model_names()) {
    const auto m = finite_model(name);
    for (int seed = 1; seed <= 10; ++seed) {
      const auto f = finite_function(m, "random:" + std::to_string(seed));
      const auto b = brute_trace(m, f);
      CHECK(regular_kernel_trace(m, f) == b);
      CHECK(geometric_side(m, f) == b);
      CHECK(geometric_side(m, f, 12345) == b);
      CHECK(spectral_side(m, f) == b);
    }
    for (std::size_t k = 0; k < m.conjugacy_classes().size(); ++k) {
      const auto f = finite_function(m, "class:" + std::to_string(k));
      CHECK(geometric_side(m, f) == brute_trace(m, f));
    }
  }
}

TEST_CASE("double instantiation and linearity") {
  const auto m = finite_model("sl2f3-borel");
  const auto a = finite_function(m, "random:3");
  const auto b = finite_function(m, "random:4");
  std::vector<double> fa(a.begin(), a.end()), fb(b.begin(), b.end()), mix(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) mix[i] = 2.0 * fa[i] - 0.5 * fb[i];
  CHECK(spectral_side(m, mix) == doctest::Approx(2.0 * spectral_side(m, fa) - 0.5 * spectral_side(m, fb)));
  CHECK(geometric_side(m, mix) == doctest::Approx(regular_kernel_trace(m, mix)));
}

TEST_CASE("geometric terms") {
  const auto m = finite_model("s3-a3");
  std::vector<GeometricTerm> terms;
  geometric_side(m, finite_function(m, "identity"), 0, &terms);
  int total = 0;
  for (const auto& t : terms) {
    CHECK(t.volume * t.gamma_centralizer == t.group_centralizer);
    total += t.class_size;
  }
  CHECK(total == static_cast<int>(m.subgroup().size()));
  const auto tr = finite_function(m, "class:transposition");
  CHECK(regular_kernel_trace(m, tr) == 0);
  CHECK(spectral_side(m, tr) == 0);
}

TEST_CASE("invalid function specs") {
  const auto m = finite_model("z12-z4");
  CHECK_THROWS_AS(finite_function(m, "indicator:99"), std::invalid_argument);
  CHECK_THROWS_AS(finite_function(m, "class:nope"), std::invalid_argument);
  CHECK_THROWS_AS(finite_function(m, "wavelet"), std::invalid_argument);
  CHECK_THROWS_AS(finite_function(m, "constant:"), std::invalid_argument);
}

}
