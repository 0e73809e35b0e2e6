#include "sl3/lie.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace sl3 {

GroupElement::GroupElement(const Mat3& m) : m_(m) {
  const double d = m.det();
  if (!(std::abs(d - 1.0) <= kTolerances.group_det))
    throw std::invalid_argument("GroupElement: determinant " + std::to_string(d) + " is not 1");
}

GroupElement GroupElement::inverse() const { return GroupElement(m_.inverse()); }

GroupElement operator*(const GroupElement& a, const GroupElement& b) {
  return GroupElement(a.m_ * b.m_);
}

AlgebraElement::AlgebraElement(const Mat3& m) : m_(m) {
  const double tol = kTolerances.algebra_trace * std::max(1.0, max_abs(m));
  if (!(std::abs(m.trace()) <= tol))
    throw std::invalid_argument("AlgebraElement: matrix is not traceless");
}

AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
  return AlgebraElement(a.m_ + b.m_);
}
AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) {
  return AlgebraElement(a.m_ - b.m_);
}
AlgebraElement operator*(double s, const AlgebraElement& a) { return AlgebraElement(s * a.m_); }

namespace basis {
AlgebraElement X() { return AlgebraElement(Mat3::unit(0, 1)); }
AlgebraElement Y() { return AlgebraElement(Mat3::unit(1, 2)); }
AlgebraElement Z() { return AlgebraElement(Mat3::unit(0, 2)); }
AlgebraElement T() { return AlgebraElement(Mat3::unit(0, 1) - Mat3::unit(1, 0)); }
AlgebraElement H1() { return AlgebraElement(Mat3::diagonal(1, -1, 0)); }
AlgebraElement H2() { return AlgebraElement(Mat3::diagonal(1, 0, -1)); }
AlgebraElement S() { return AlgebraElement(Mat3::unit(0, 2) + Mat3::unit(2, 0)); }
}  // namespace basis

AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y) {
  const Mat3& a = x.matrix();
  const Mat3& b = y.matrix();
  return AlgebraElement(a * b - b * a);
}

AlgebraElement cartan_involution(const AlgebraElement& x) {
  return AlgebraElement(-x.matrix().transpose());
}

GroupElement group_exp(const AlgebraElement& x, int terms) {
  if (terms < 1) throw std::invalid_argument("group_exp: terms must be >= 1");
  const Mat3& m = x.matrix();
  const double norm = frobenius_norm(m);
  if (!(norm <= kTolerances.exp_divergence_norm))
    throw std::domain_error("group_exp: argument norm exceeds divergence guard");

  int squarings = 0;
  double scaled_norm = norm;
  while (scaled_norm > 0.5) {
    scaled_norm *= 0.5;
    ++squarings;
  }
  const Mat3 a = m * std::ldexp(1.0, -squarings);

  // Horner form: I + a(I + a/2(I + a/3(...))).
  Mat3 result = Mat3::identity();
  for (int k = terms; k >= 1; --k) result = Mat3::identity() + (a * result) * (1.0 / k);
  for (int i = 0; i < squarings; ++i) result = result * result;
  return GroupElement(result);
}

IwasawaFactors iwasawa_decompose(const GroupElement& g) {
  const Mat3& m = g.matrix();
  Mat3 q{};
  Mat3 r{};
  std::array<std::array<double, 3>, 3> cols{};
  for (std::size_t j = 0; j < 3; ++j)
    for (std::size_t i = 0; i < 3; ++i) cols[j][i] = m(i, j);

  // Modified Gram-Schmidt: orthogonalise each later column against q_j as soon as q_j is known.
  for (std::size_t j = 0; j < 3; ++j) {
    double nrm = 0.0;
    for (double e : cols[j]) nrm += e * e;
    nrm = std::sqrt(nrm);
    r(j, j) = nrm;
    for (std::size_t i = 0; i < 3; ++i) q(i, j) = cols[j][i] / nrm;
    for (std::size_t l = j + 1; l < 3; ++l) {
      double dot = 0.0;
      for (std::size_t i = 0; i < 3; ++i) dot += q(i, j) * cols[l][i];
      r(j, l) = dot;
      for (std::size_t i = 0; i < 3; ++i) cols[l][i] -= dot * q(i, j);
    }
  }

  const Mat3 a = Mat3::diagonal(r(0, 0), r(1, 1), r(2, 2));
  Mat3 n = r;
  for (std::size_t i = 0; i < 3; ++i) {
    const double d = r(i, i);
    for (std::size_t j = 0; j < 3; ++j) n(i, j) /= d;
    n(i, i) = 1.0;
  }
  return IwasawaFactors{GroupElement(q), GroupElement(a), GroupElement(n)};
}

double weyl_discriminant(double a1, double a2, double a3) {
  if (!(std::abs(a1 * a2 * a3 - 1.0) <= kTolerances.unimodular))
    throw std::invalid_argument("weyl_discriminant: a1 a2 a3 must equal 1");
  return std::abs(a1 - a2) * std::abs(a2 - a3) * std::abs(a1 - a3);
}

}  // namespace sl3
