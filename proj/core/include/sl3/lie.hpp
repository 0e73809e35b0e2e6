#pragma once

#include "sl3/matrix.hpp"
#include "sl3/tolerances.hpp"

namespace sl3 {

/// An element of SL(3,R). Construction checks |det - 1| <= kTolerances.group_det.
class GroupElement {
 public:
  GroupElement() : m_(Mat3::identity()) {}
  explicit GroupElement(const Mat3& m);

  const Mat3& matrix() const { return m_; }
  double operator()(std::size_t r, std::size_t c) const { return m_(r, c); }

  GroupElement inverse() const;

  friend GroupElement operator*(const GroupElement& a, const GroupElement& b);

 private:
  Mat3 m_;
};

/// An element of sl(3,R). Construction checks the trace vanishes.
class AlgebraElement {
 public:
  AlgebraElement() = default;
  explicit AlgebraElement(const Mat3& m);

  const Mat3& matrix() const { return m_; }
  double operator()(std::size_t r, std::size_t c) const { return m_(r, c); }

  friend AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b);
  friend AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b);
  friend AlgebraElement operator*(double s, const AlgebraElement& a);
  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

 private:
  Mat3 m_{};
};

// Distinguished elements of sl(3,R).
namespace basis {
AlgebraElement X();   // E12
AlgebraElement Y();   // E23
AlgebraElement Z();   // E13, [X,Y] = Z
AlgebraElement T();   // E12 - E21, generator of the SO(2) block
AlgebraElement H1();  // diag(1,-1,0)
AlgebraElement H2();  // diag(1,0,-1)
AlgebraElement S();   // E13 + E31
}  // namespace basis

struct IwasawaFactors {
  GroupElement k;  // special orthogonal
  GroupElement a;  // positive diagonal
  GroupElement n;  // unit upper triangular
};

AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y);

/// theta(x) = -x^T. Fixes so(3), negates the symmetric part.
AlgebraElement cartan_involution(const AlgebraElement& x);

/// Matrix exponential by scaling and squaring a truncated Taylor series of
/// `terms` terms. The argument is halved until its Frobenius norm is <= 0.5.
/// Throws std::domain_error when the norm exceeds kTolerances.exp_divergence_norm.
GroupElement group_exp(const AlgebraElement& x, int terms = 12);

/// g = k a n with k in SO(3), a positive diagonal, n unit upper triangular.
/// Computed by modified Gram-Schmidt on the columns of g.
IwasawaFactors iwasawa_decompose(const GroupElement& g);

/// prod_{i<j} |a_i - a_j|. Throws std::invalid_argument unless a1 a2 a3 == 1.
double weyl_discriminant(double a1, double a2, double a3);

}  // namespace sl3
