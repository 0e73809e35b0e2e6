#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>

namespace sl3 {

// Fixed-size 3x3 matrix, row-major. Small enough that everything is done by hand.
template <class T>
struct Matrix3 {
  std::array<T, 9> v{};

  constexpr T& operator()(std::size_t r, std::size_t c) { return v[3 * r + c]; }
  constexpr const T& operator()(std::size_t r, std::size_t c) const { return v[3 * r + c]; }

  static constexpr Matrix3 zero() { return Matrix3{}; }

  static constexpr Matrix3 identity() {
    Matrix3 m{};
    m(0, 0) = T(1);
    m(1, 1) = T(1);
    m(2, 2) = T(1);
    return m;
  }

  // Elementary matrix E_{rc} (zero-based indices).
  static constexpr Matrix3 unit(std::size_t r, std::size_t c) {
    Matrix3 m{};
    m(r, c) = T(1);
    return m;
  }

  static constexpr Matrix3 diagonal(T a, T b, T c) {
    Matrix3 m{};
    m(0, 0) = a;
    m(1, 1) = b;
    m(2, 2) = c;
    return m;
  }

  constexpr Matrix3& operator+=(const Matrix3& o) {
    for (std::size_t i = 0; i < 9; ++i) v[i] += o.v[i];
    return *this;
  }
  constexpr Matrix3& operator-=(const Matrix3& o) {
    for (std::size_t i = 0; i < 9; ++i) v[i] -= o.v[i];
    return *this;
  }
  constexpr Matrix3& operator*=(T s) {
    for (auto& e : v) e *= s;
    return *this;
  }

  friend constexpr Matrix3 operator+(Matrix3 a, const Matrix3& b) { return a += b; }
  friend constexpr Matrix3 operator-(Matrix3 a, const Matrix3& b) { return a -= b; }
  friend constexpr Matrix3 operator-(Matrix3 a) {
    for (auto& e : a.v) e = -e;
    return a;
  }
  friend constexpr Matrix3 operator*(Matrix3 a, T s) { return a *= s; }
  friend constexpr Matrix3 operator*(T s, Matrix3 a) { return a *= s; }

  friend constexpr Matrix3 operator*(const Matrix3& a, const Matrix3& b) {
    Matrix3 r{};
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t k = 0; k < 3; ++k) {
        const T aik = a(i, k);
        for (std::size_t j = 0; j < 3; ++j) r(i, j) += aik * b(k, j);
      }
    return r;
  }

  friend constexpr bool operator==(const Matrix3&, const Matrix3&) = default;

  constexpr Matrix3 transpose() const {
    Matrix3 r{};
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) r(i, j) = (*this)(j, i);
    return r;
  }

  constexpr T trace() const { return v[0] + v[4] + v[8]; }

  constexpr T det() const {
    const auto& m = *this;
    return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
           m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
           m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
  }

  // Adjugate-based inverse. Exact zeros in triangular inputs stay exact.
  Matrix3 inverse() const {
    const auto& m = *this;
    const T d = det();
    if (d == T(0)) throw std::domain_error("Matrix3::inverse: singular matrix");
    Matrix3 r{};
    r(0, 0) = m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1);
    r(0, 1) = m(0, 2) * m(2, 1) - m(0, 1) * m(2, 2);
    r(0, 2) = m(0, 1) * m(1, 2) - m(0, 2) * m(1, 1);
    r(1, 0) = m(1, 2) * m(2, 0) - m(1, 0) * m(2, 2);
    r(1, 1) = m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0);
    r(1, 2) = m(0, 2) * m(1, 0) - m(0, 0) * m(1, 2);
    r(2, 0) = m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0);
    r(2, 1) = m(0, 1) * m(2, 0) - m(0, 0) * m(2, 1);
    r(2, 2) = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    for (auto& e : r.v) e /= d;
    return r;
  }
};

using Mat3 = Matrix3<double>;
using CMat3 = Matrix3<std::complex<double>>;

inline double frobenius_norm(const Mat3& m) {
  double s = 0.0;
  for (double e : m.v) s += e * e;
  return std::sqrt(s);
}

inline double frobenius_norm(const CMat3& m) {
  double s = 0.0;
  for (const auto& e : m.v) s += std::norm(e);
  return std::sqrt(s);
}

inline double max_abs(const Mat3& m) {
  double s = 0.0;
  for (double e : m.v) s = std::max(s, std::abs(e));
  return s;
}

inline double max_abs_diff(const Mat3& a, const Mat3& b) { return max_abs(a - b); }

// Squared Frobenius distance, hot path of every bump evaluation.
inline double frobenius_distance_sq(const Mat3& a, const Mat3& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < 9; ++i) {
    const double d = a.v[i] - b.v[i];
    s += d * d;
  }
  return s;
}

inline CMat3 complexify(const Mat3& m) {
  CMat3 r{};
  for (std::size_t i = 0; i < 9; ++i) r.v[i] = m.v[i];
  return r;
}

}  // namespace sl3
