#pragma once

// Independent reference computations used only by the tests.

#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <random>
#include <vector>

#include "sl3/lie.hpp"

namespace oracle {

using sl3::Mat3;
using C = std::complex<double>;

inline Mat3 random_traceless(std::mt19937_64& rng, double scale) {
  std::uniform_real_distribution<double> d(-scale, scale);
  Mat3 x;
  for (auto& e : x.v) e = d(rng);
  const double tr = x.trace() / 3.0;
  for (int i = 0; i < 3; ++i) x(i, i) -= tr;
  return x;
}

inline double max_diff(const Mat3& a, const Mat3& b) {
  double d = 0.0;
  for (int i = 0; i < 9; ++i) d = std::max(d, std::abs(a.v[i] - b.v[i]));
  return d;
}

// g^T g = n^T a^2 n, so the Cholesky factor L of g^T g is (a n)^T.
struct CholeskyIwasawa {
  Mat3 k, a, n;
};

inline CholeskyIwasawa cholesky_iwasawa(const Mat3& g) {
  const Mat3 s = g.transpose() * g;
  Mat3 L{};
  for (int j = 0; j < 3; ++j) {
    double d = s(j, j);
    for (int k = 0; k < j; ++k) d -= L(j, k) * L(j, k);
    L(j, j) = std::sqrt(d);
    for (int i = j + 1; i < 3; ++i) {
      double v = s(i, j);
      for (int k = 0; k < j; ++k) v -= L(i, k) * L(j, k);
      L(i, j) = v / L(j, j);
    }
  }
  CholeskyIwasawa out;
  out.a = Mat3::diagonal(L(0, 0), L(1, 1), L(2, 2));
  out.n = Mat3::identity();
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) out.n(i, j) = L(j, i) / L(i, i);
  out.k = g * (out.a * out.n).inverse();
  return out;
}

// Brute-force Schur polynomial: every filling of the shape with entries 1..3,
// keep the semistandard ones.
inline C schur_brute(const std::array<int, 3>& shape, const std::array<C, 3>& x) {
  std::vector<std::pair<int, int>> cells;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < shape[r]; ++c) cells.push_back({r, c});
  const std::size_t n = cells.size();
  std::vector<int> fill(n, 0);
  C total = 0.0;
  for (;;) {
    int grid[3][8];
    for (std::size_t i = 0; i < n; ++i) grid[cells[i].first][cells[i].second] = fill[i];
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      const auto [r, c] = cells[i];
      if (c > 0 && grid[r][c - 1] > grid[r][c]) ok = false;
      if (r > 0 && grid[r - 1][c] >= grid[r][c]) ok = false;
    }
    if (ok) {
      C m = 1.0;
      for (std::size_t i = 0; i < n; ++i) m *= x[fill[i]];
      total += m;
    }
    std::size_t i = 0;
    while (i < n && ++fill[i] == 3) fill[i++] = 0;
    if (i == n) break;
  }
  return total;
}

// Weyl dimension formula for GL(3).
inline long weyl_dimension(const std::array<int, 3>& l) {
  const long a = l[0] - l[1] + 1, b = l[1] - l[2] + 1, c = l[0] - l[2] + 2;
  return a * b * c / 2;
}

// Bialternant det(x_i^{l_j + 3 - j}) / det(x_i^{3 - j}) via explicit 3x3 determinants.
inline C bialternant(const std::array<int, 3>& l, const std::array<C, 3>& x) {
  auto det3 = [](const std::array<std::array<C, 3>, 3>& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  };
  std::array<std::array<C, 3>, 3> num, den;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      num[i][j] = std::pow(x[i], l[j] + 2 - j);
      den[i][j] = std::pow(x[i], 2 - j);
    }
  return det3(num) / det3(den);
}

// Composite midpoint rule, fixed grid.
inline double midpoint_1d(const std::function<double(double)>& f, double a, double b, int n) {
  const double h = (b - a) / n;
  double s = 0.0;
  for (int i = 0; i < n; ++i) s += f(a + (i + 0.5) * h);
  return s * h;
}

// Composite Simpson rule, n even.
inline double simpson_1d(const std::function<double(double)>& f, double a, double b, int n) {
  const double h = (b - a) / n;
  double s = f(a) + f(b);
  for (int i = 1; i < n; ++i) s += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
  return s * h / 3.0;
}

}  // namespace oracle
