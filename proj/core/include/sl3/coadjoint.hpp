#pragma once

#include <complex>
#include <string>

#include "sl3/lie.hpp"

namespace sl3::coadjoint {

// The Borel algebra b = span{T, X, Y, Z} with [X,Y] = Z, [T,X] = 2X,
// [T,Y] = -2Y, [T,Z] = 0. Inside sl(3,R) this is realised with
// T = diag(2/3, -4/3, 2/3); B = exp(b) is the group of upper triangular
// matrices with diagonal (d, d^-2, d), d > 0.

/// T = diag(2/3, -4/3, 2/3).
AlgebraElement oscillator_generator();

/// F = t T* + x X* + y Y* + z Z*.
struct BorelFunctional {
  double t = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  friend bool operator==(const BorelFunctional&, const BorelFunctional&) = default;
};

struct OrbitClass {
  enum class Kind {
    half_space_plus,
    half_space_minus,
    cylinder,
    half_plane_x_pos,
    half_plane_x_neg,
    half_plane_y_pos,
    half_plane_y_neg,
    origin,
  };

  Kind kind = Kind::origin;
  double alpha = 0.0;  // x y on cylinders; negative values are flagged
  double t = 0.0;      // recorded for the origin family
  // Points not covered by the four orbit families of the classification
  // lemma: xy < 0 on the z = 0 slice, and (t,0,0,0) with t != 0.
  bool outside_lemma = false;

  std::string to_string() const;
};

/// Upper triangular, diagonal (d, d^-2, d) with d > 0, within kTolerances.borel_pattern.
bool in_borel(const GroupElement& b);

/// exp(c T) exp(s X) exp(u Y) exp(v Z).
GroupElement borel_element(double c, double s, double u, double v);

/// F o Ad(b^-1). Throws std::invalid_argument when b is not in B.
BorelFunctional coadjoint_act(const GroupElement& b, const BorelFunctional& F);

/// Orbit family of F. Comparisons against zero use `zero_tol` (exact by default).
OrbitClass classify_orbit(const BorelFunctional& F, double zero_tol = 0.0);

/// True when the two classes have the same family, with cylinder parameters
/// equal to `rel_tol` relative.
bool same_orbit_family(const OrbitClass& a, const OrbitClass& b, double rel_tol);

/// Pairing of F with a complex element of b_C, via its T, X, Y, Z coordinates.
std::complex<double> pair(const BorelFunctional& F, const CMat3& m);

struct PolarizationReport {
  bool subalgebra = false;
  bool isotropic = false;
  bool positive = false;
  double positivity_value = 0.0;  // i <F, [W, conj W]>
};

/// Checks l = C W + C Z with W = a X + b Y against the three polarization
/// conditions at F.
PolarizationReport verify_polarization(std::complex<double> a, std::complex<double> b,
                                       const BorelFunctional& F);

}  // namespace sl3::coadjoint
