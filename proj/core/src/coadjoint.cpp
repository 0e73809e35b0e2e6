#include "sl3/coadjoint.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <type_traits>

namespace sl3::coadjoint {

namespace {

Mat3 t_matrix() { return Mat3::diagonal(2.0 / 3.0, -4.0 / 3.0, 2.0 / 3.0); }

// Basis of b in the order T, X, Y, Z.
std::array<Mat3, 4> borel_basis() {
  return {t_matrix(), Mat3::unit(0, 1), Mat3::unit(1, 2), Mat3::unit(0, 2)};
}

// Matrix M_F with trace(M_F^T m) = F(m) for m in b.
template <class Scalar>
Matrix3<Scalar> dual_matrix(const BorelFunctional& F) {
  const auto basis = borel_basis();
  const double t_norm_sq = frobenius_distance_sq(basis[0], Mat3::zero());
  Mat3 m = basis[0] * (F.t / t_norm_sq) + basis[1] * F.x + basis[2] * F.y + basis[3] * F.z;
  if constexpr (std::is_same_v<Scalar, double>) {
    return m;
  } else {
    return complexify(m);
  }
}

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

}  // namespace

AlgebraElement oscillator_generator() { return AlgebraElement(t_matrix()); }

std::string OrbitClass::to_string() const {
  switch (kind) {
    case Kind::half_space_plus: return "HalfSpace(+)";
    case Kind::half_space_minus: return "HalfSpace(-)";
    case Kind::cylinder: return "Cylinder(" + format_number(alpha) + ")";
    case Kind::half_plane_x_pos: return "HalfPlane(x>0)";
    case Kind::half_plane_x_neg: return "HalfPlane(x<0)";
    case Kind::half_plane_y_pos: return "HalfPlane(y>0)";
    case Kind::half_plane_y_neg: return "HalfPlane(y<0)";
    case Kind::origin: return "Origin";
  }
  return "Unknown";
}

bool in_borel(const GroupElement& b) {
  const Mat3& m = b.matrix();
  const double tol = kTolerances.borel_pattern;
  if (std::abs(m(1, 0)) > tol || std::abs(m(2, 0)) > tol || std::abs(m(2, 1)) > tol) return false;
  const double d = m(0, 0);
  if (!(d > 0.0)) return false;
  if (std::abs(m(2, 2) - d) > tol * std::max(1.0, d)) return false;
  return std::abs(m(1, 1) * d * d - 1.0) <= tol;
}

GroupElement borel_element(double c, double s, double u, double v) {
  return group_exp(c * oscillator_generator()) * group_exp(s * basis::X()) *
         group_exp(u * basis::Y()) * group_exp(v * basis::Z());
}

BorelFunctional coadjoint_act(const GroupElement& b, const BorelFunctional& F) {
  if (!in_borel(b)) throw std::invalid_argument("coadjoint_act: element is not in the Borel subgroup");
  const Mat3& g = b.matrix();
  const Mat3 g_inv = g.inverse();
  const Mat3 mf_t = dual_matrix<double>(F).transpose();
  const auto basis = borel_basis();
  std::array<double, 4> out{};
  for (std::size_t i = 0; i < 4; ++i) out[i] = (mf_t * (g_inv * basis[i] * g)).trace();
  return BorelFunctional{out[0], out[1], out[2], out[3]};
}

OrbitClass classify_orbit(const BorelFunctional& F, double zero_tol) {
  using Kind = OrbitClass::Kind;
  OrbitClass c;
  const auto is_zero = [zero_tol](double v) { return std::abs(v) <= zero_tol; };
  if (!is_zero(F.z)) {
    c.kind = F.z > 0 ? Kind::half_space_plus : Kind::half_space_minus;
    return c;
  }
  const bool x0 = is_zero(F.x);
  const bool y0 = is_zero(F.y);
  if (!x0 && !y0) {
    c.kind = Kind::cylinder;
    c.alpha = F.x * F.y;
    c.outside_lemma = c.alpha < 0;
    return c;
  }
  if (!x0) {
    c.kind = F.x > 0 ? Kind::half_plane_x_pos : Kind::half_plane_x_neg;
    return c;
  }
  if (!y0) {
    c.kind = F.y > 0 ? Kind::half_plane_y_pos : Kind::half_plane_y_neg;
    return c;
  }
  c.kind = Kind::origin;
  c.t = F.t;
  c.outside_lemma = !is_zero(F.t);
  return c;
}

bool same_orbit_family(const OrbitClass& a, const OrbitClass& b, double rel_tol) {
  if (a.kind != b.kind) return false;
  if (a.kind != OrbitClass::Kind::cylinder) return true;
  return std::abs(a.alpha - b.alpha) <= rel_tol * std::max(std::abs(a.alpha), std::abs(b.alpha));
}

std::complex<double> pair(const BorelFunctional& F, const CMat3& m) {
  const CMat3 mf_t = dual_matrix<std::complex<double>>(F).transpose();
  return (mf_t * m).trace();
}

namespace {

using C = std::complex<double>;

C inner(const CMat3& a, const CMat3& b) {
  C s(0.0);
  for (std::size_t i = 0; i < 9; ++i) s += std::conj(a.v[i]) * b.v[i];
  return s;
}

// Distance from m to the complex span of {u, v} (assumed independent).
double distance_to_span(const CMat3& m, const CMat3& u, const CMat3& v) {
  const C g00 = inner(u, u), g01 = inner(u, v), g10 = inner(v, u), g11 = inner(v, v);
  const C r0 = inner(u, m), r1 = inner(v, m);
  const C det = g00 * g11 - g01 * g10;
  const C alpha = (r0 * g11 - g01 * r1) / det;
  const C beta = (g00 * r1 - g10 * r0) / det;
  return frobenius_norm(m - u * alpha - v * beta);
}

CMat3 conj(const CMat3& m) {
  CMat3 r = m;
  for (auto& e : r.v) e = std::conj(e);
  return r;
}

CMat3 cbracket(const CMat3& a, const CMat3& b) { return a * b - b * a; }

}  // namespace

PolarizationReport verify_polarization(C a, C b, const BorelFunctional& F) {
  const CMat3 w = complexify(Mat3::unit(0, 1)) * a + complexify(Mat3::unit(1, 2)) * b;
  const CMat3 z = complexify(Mat3::unit(0, 2));
  if (frobenius_norm(w) == 0.0)
    throw std::invalid_argument("verify_polarization: W must be nonzero");
  constexpr double tol = 1e-12;
  const std::array<CMat3, 2> l{w, z};

  PolarizationReport report;
  report.subalgebra = true;
  report.isotropic = true;
  for (std::size_t i = 0; i < l.size(); ++i)
    for (std::size_t j = i + 1; j < l.size(); ++j) {
      const CMat3 br = cbracket(l[i], l[j]);
      if (distance_to_span(br, w, z) > tol) report.subalgebra = false;
      if (std::abs(pair(F, br)) > tol) report.isotropic = false;
    }

  const C value = C(0.0, 1.0) * pair(F, cbracket(w, conj(w)));
  report.positivity_value = value.real();
  report.positive = std::abs(value.imag()) <= tol && value.real() >= -tol;
  return report;
}

}  // namespace sl3::coadjoint
