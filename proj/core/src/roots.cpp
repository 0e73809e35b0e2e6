#include "sl3/roots.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "sl3/tolerances.hpp"

namespace sl3 {

Weight Weight::normalized() const {
  const int lo = std::min({coords[0], coords[1], coords[2]});
  return Weight(coords[0] - lo, coords[1] - lo, coords[2] - lo);
}

std::string Weight::to_string() const {
  return "(" + std::to_string(coords[0]) + "," + std::to_string(coords[1]) + "," +
         std::to_string(coords[2]) + ")";
}

Weight operator+(const Weight& a, const Weight& b) {
  return Weight(a[0] + b[0], a[1] + b[1], a[2] + b[2]);
}
Weight operator-(const Weight& a, const Weight& b) {
  return Weight(a[0] - b[0], a[1] - b[1], a[2] - b[2]);
}
Weight operator-(const Weight& a) { return Weight(-a[0], -a[1], -a[2]); }
bool operator==(const Weight& a, const Weight& b) {
  return a.normalized().coords == b.normalized().coords;
}
bool operator<(const Weight& a, const Weight& b) {
  return a.normalized().coords < b.normalized().coords;
}

Root::Root(int k_, int l_) : k(k_), l(l_) {
  if (k < 1 || k > 3 || l < 1 || l > 3 || k == l)
    throw std::invalid_argument("Root: indices must be distinct and in 1..3");
}

Root::Kind Root::kind() const {
  return (k + l == 3) ? Kind::compact : Kind::noncompact;
}

Weight Root::as_weight() const {
  Weight w;
  w.coords[k - 1] += 1;
  w.coords[l - 1] -= 1;
  return w;
}

std::vector<Root> all_roots() {
  std::vector<Root> out;
  for (int k = 1; k <= 3; ++k)
    for (int l = 1; l <= 3; ++l)
      if (k != l) out.emplace_back(k, l);
  return out;
}

std::vector<Root> positive_roots() { return {Root(1, 2), Root(1, 3), Root(2, 3)}; }

int pair_weight_coroot(const Weight& lambda, int k, int l) {
  const Root r(k, l);
  return lambda[r.k - 1] - lambda[r.l - 1];
}

WeylElement WeylElement::from_permutation(const std::array<int, 3>& p) {
  std::array<int, 3> sorted = p;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != std::array<int, 3>{0, 1, 2})
    throw std::invalid_argument("WeylElement: not a permutation of {0,1,2}");
  int inversions = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (p[i] > p[j]) ++inversions;
  WeylElement w;
  w.perm = p;
  w.sign = (inversions % 2 == 0) ? 1 : -1;
  return w;
}

Weight WeylElement::act(const Weight& lambda) const {
  Weight out;
  for (int i = 0; i < 3; ++i) out.coords[perm[i]] = lambda[i];
  return out;
}

std::array<double, 3> WeylElement::act(const std::array<double, 3>& lambda) const {
  std::array<double, 3> out{};
  for (int i = 0; i < 3; ++i) out[perm[i]] = lambda[i];
  return out;
}

WeylElement WeylElement::compose(const WeylElement& other) const {
  std::array<int, 3> p{};
  for (int i = 0; i < 3; ++i) p[i] = perm[other.perm[i]];
  return from_permutation(p);
}

std::array<std::array<int, 3>, 3> WeylElement::matrix() const {
  std::array<std::array<int, 3>, 3> m{};
  for (int i = 0; i < 3; ++i) m[perm[i]][i] = 1;
  return m;
}

int WeylElement::matrix_determinant() const {
  const auto m = matrix();
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

std::string WeylElement::to_string() const {
  return "[" + std::to_string(perm[0]) + std::to_string(perm[1]) + std::to_string(perm[2]) +
         (sign > 0 ? "]+" : "]-");
}

const std::array<WeylElement, 6>& weyl_group() {
  static const std::array<WeylElement, 6> group = [] {
    std::array<WeylElement, 6> g{};
    std::array<int, 3> p{0, 1, 2};
    std::size_t i = 0;
    do {
      g[i++] = WeylElement::from_permutation(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return g;
  }();
  return group;
}

const std::array<WeylElement, 3>& even_weyl_elements() {
  static const std::array<WeylElement, 3> even = {
      WeylElement::from_permutation({0, 1, 2}),
      WeylElement::from_permutation({1, 2, 0}),
      WeylElement::from_permutation({2, 0, 1}),
  };
  return even;
}

WeylElement compact_reflection() { return WeylElement::from_permutation({1, 0, 2}); }

std::string to_string(WeightClass c) {
  switch (c) {
    case WeightClass::not_in_F: return "not-in-F";
    case WeightClass::F_singular: return "F-singular";
    case WeightClass::holomorphic: return "holomorphic";
    case WeightClass::antiholomorphic: return "antiholomorphic";
    case WeightClass::neither_nor: return "neither-nor";
    case WeightClass::outside_F0: return "outside-F0";
  }
  return "unknown";
}

namespace {

bool is_integral(double v) { return std::abs(v - std::round(v)) <= 1e-12; }

WeightClass classify_pairings(double h12, double h13, double h23) {
  const double h31 = -h13;
  if (!is_integral(h12) || !is_integral(h13) || !is_integral(h23)) return WeightClass::not_in_F;
  // Regular iff no coroot pairing vanishes; +-alpha give the same condition.
  if (std::round(h12) == 0 || std::round(h13) == 0 || std::round(h23) == 0)
    return WeightClass::F_singular;
  const bool h12_pos = h12 > 0.5;
  if (h12_pos && h31 > 0.5) return WeightClass::holomorphic;
  if (h12_pos && h23 > 0.5) return WeightClass::antiholomorphic;
  if (h12_pos && h13 > 0.5 && h12 > h13) return WeightClass::neither_nor;
  return WeightClass::outside_F0;
}

}  // namespace

WeightClass classify_weight(const Weight& lambda) {
  return classify_pairings(pair_weight_coroot(lambda, 1, 2), pair_weight_coroot(lambda, 1, 3),
                           pair_weight_coroot(lambda, 2, 3));
}

WeightClass classify_functional(const std::array<double, 3>& lambda) {
  return classify_pairings(lambda[0] - lambda[1], lambda[0] - lambda[2], lambda[1] - lambda[2]);
}

std::vector<std::pair<WeylElement, Weight>> weyl_orbit(const Weight& lambda, bool even_only) {
  std::vector<std::pair<WeylElement, Weight>> out;
  for (const auto& w : weyl_group()) {
    if (even_only && !w.is_even()) continue;
    out.emplace_back(w, w.act(lambda));
  }
  return out;
}

Weight rho(RhoConvention convention) {
  return convention == RhoConvention::standard ? Weight(1, 0, -1) : Weight(0, -1, 1);
}

namespace {

Complex ipow(Complex z, int n) {
  if (n < 0) {
    z = Complex(1.0) / z;
    n = -n;
  }
  Complex result(1.0);
  while (n > 0) {
    if (n & 1) result *= z;
    z *= z;
    n >>= 1;
  }
  return result;
}

void check_unit_torus(const TorusPoint& z) {
  for (const auto& zi : z)
    if (!(std::abs(std::abs(zi) - 1.0) <= kTolerances.unit_modulus))
      throw std::invalid_argument("torus point must have unit-modulus eigenvalues");
  if (!(std::abs(z[0] * z[1] * z[2] - Complex(1.0)) <= kTolerances.unit_modulus))
    throw std::invalid_argument("torus point eigenvalues must multiply to 1");
}

Complex alternant(const TorusPoint& z, const Weight& mu) {
  Complex s(0.0);
  for (const auto& w : weyl_group()) s += double(w.sign) * torus_power(z, w.act(mu));
  return s;
}

}  // namespace

Complex torus_power(const TorusPoint& z, const Weight& mu) {
  return ipow(z[0], mu[0]) * ipow(z[1], mu[1]) * ipow(z[2], mu[2]);
}

double min_eigenvalue_gap(const TorusPoint& z) {
  return std::min({std::abs(z[0] - z[1]), std::abs(z[0] - z[2]), std::abs(z[1] - z[2])});
}

Complex weyl_character_quotient(const Weight& lambda, const TorusPoint& z,
                                RhoConvention convention) {
  if (!lambda.is_dominant())
    throw std::invalid_argument("weyl_character_quotient: weight must be dominant");
  check_unit_torus(z);
  const double gap = min_eigenvalue_gap(z);
  if (gap <= kTolerances.singular_gap)
    throw std::domain_error("weyl_character_quotient: singular torus element");
  if (gap < kTolerances.near_singular_gap && convention == RhoConvention::standard) {
    const Weight shape(lambda[0] - lambda[2], lambda[1] - lambda[2], 0);
    return schur_oracle(shape, z);
  }
  const Weight r = rho(convention);
  return alternant(z, lambda + r) / alternant(z, r);
}

namespace {

// Fill the tableau cell by cell in row-major order.
void enumerate_tableaux(const std::array<int, 3>& shape,
                        const std::function<void(const std::array<int, 3>&)>& visit) {
  std::array<std::array<int, 8>, 3> t{};
  std::array<int, 3> content{};
  std::function<void(int, int)> fill = [&](int row, int col) {
    if (row == 3) {
      visit(content);
      return;
    }
    if (col == shape[row]) {
      fill(row + 1, 0);
      return;
    }
    int lo = 1;
    if (col > 0) lo = std::max(lo, t[row][col - 1]);
    if (row > 0) lo = std::max(lo, t[row - 1][col] + 1);
    for (int e = lo; e <= 3; ++e) {
      t[row][col] = e;
      ++content[e - 1];
      fill(row, col + 1);
      --content[e - 1];
    }
  };
  fill(0, 0);
}

void check_shape(const Weight& lambda) {
  if (!(lambda[0] >= lambda[1] && lambda[1] >= lambda[2] && lambda[2] >= 0))
    throw std::invalid_argument("schur_oracle: shape must satisfy m1 >= m2 >= m3 >= 0");
  if (lambda[0] > 8) throw std::invalid_argument("schur_oracle: row length above 8 unsupported");
}

}  // namespace

Complex schur_oracle(const Weight& lambda, const TorusPoint& x) {
  check_shape(lambda);
  Complex sum(0.0);
  enumerate_tableaux(lambda.coords, [&](const std::array<int, 3>& content) {
    sum += ipow(x[0], content[0]) * ipow(x[1], content[1]) * ipow(x[2], content[2]);
  });
  return sum;
}

std::int64_t count_tableaux(const Weight& lambda) {
  check_shape(lambda);
  std::int64_t n = 0;
  enumerate_tableaux(lambda.coords, [&](const std::array<int, 3>&) { ++n; });
  return n;
}

}  // namespace sl3
