#pragma once

#include <array>
#include <complex>
#include <vector>

#include "sl3/quadrature.hpp"
#include "sl3/testfn.hpp"

namespace sl3 {

/// gamma = diag(a1, a2, a3) with a1 a2 a3 = 1.
struct EllipticElement {
  double a1 = 1.0;
  double a2 = 1.0;
  double a3 = 1.0;

  /// Checks the product and, unless `allow_near_singular`, a minimal pairwise
  /// gap of kTolerances.regular_gap. Throws std::invalid_argument.
  static EllipticElement make(double a1, double a2, double a3, bool allow_near_singular = false);

  Mat3 matrix() const { return Mat3::diagonal(a1, a2, a3); }
  double discriminant() const;  // prod |a_i - a_j|
  double min_gap() const;
};

/// The block rotation k(theta) = exp(theta T), T = E12 - E21, with theta
/// reduced to (-pi, pi].
struct RotationElement {
  double theta = 0.0;

  explicit RotationElement(double theta_in);
  Mat3 matrix() const;
  /// e^{-i theta} - e^{i theta} = -2i sin(theta).
  std::complex<double> discriminant() const;
};

/// n(x, y, z) = [[1, x, z], [0, 1, y], [0, 0, 1]].
Mat3 unipotent(double x, double y, double z);

/// O(f) = integral over U of f(u^-1 gamma u) dx dy dz. x and y run over
/// bounding intervals of the support, z over the exact slice at fixed (x, y).
QuadratureResult orbital_integral_elliptic_numeric(const TestFunction& f, const EllipticElement& g,
                                                   const QuadratureSpec& spec);

/// Delta(gamma)^-1 times the integral of f(gamma + N) over the strictly upper
/// triangular N = (p, q, r); the triangular substitution p = (a1-a2)x,
/// q = (a2-a3)y, r = (a1-a3)z - (a2-a3)xy has Jacobian Delta(gamma).
/// Throws std::domain_error when Delta(gamma) = 0.
QuadratureResult orbital_integral_elliptic_closed(const TestFunction& f, const EllipticElement& g,
                                                  const QuadratureSpec& spec);

enum class TransferNormalization { delta_times_orbital, delta_inverse_times_orbital };

const char* to_string(TransferNormalization n);

/// Delta^{+1} or Delta^{-1} times the closed-form orbital integral. Under
/// delta_times_orbital the result is the plain integral of f(gamma + N), so
/// near-singular gamma is accepted.
QuadratureResult transfer_function_elliptic(const TestFunction& f, const EllipticElement& g,
                                            TransferNormalization norm, const QuadratureSpec& spec);

/// m(t, theta) = d(t)^-1 k(theta) d(t) with d(t) = diag(t^-1/2, t^1/2, 1):
/// block [[cos, t sin], [-sin/t, cos]] and 1 in the corner.
Mat3 so2_orbit_point(double t, double theta);

/// Reduced integral  int_0^inf sign(t - 1) F(m(t, theta)) dt  (constant c = 1),
/// truncated to the t-range where |m(t, theta)|_F can reach the support of F.
/// Throws std::invalid_argument when sin(theta) = 0.
QuadratureResult orbital_integral_so2(const KAveragedFunction& F, const RotationElement& k,
                                      const QuadratureSpec& spec);

/// The same quantity before the A-direction is integrated out:
///   int int sign(t - 1) F(d(a,t)^-1 k(theta) d(a,t)) psi(a) da dt,
/// d(a,t) = diag(e^a t^-1/2, e^a t^1/2, e^-2a), psi a unit-mass Gaussian
/// on [-6, 6].
QuadratureResult orbital_integral_so2_prereduction(const KAveragedFunction& F,
                                                   const RotationElement& k,
                                                   const QuadratureSpec& spec);

/// int_0^inf F(n(u)) du with n(u) = I + u E12.
QuadratureResult unipotent_integral(const KAveragedFunction& F, const QuadratureSpec& spec);

struct SingularExpansion {
  double A = 0.0;  // coefficient of 1/|lambda|
  double B = 0.0;  // coefficient of ln(1/|lambda|)
  double C = 0.0;  // constant
  double condition_number = 0.0;
  bool ill_conditioned = false;
  bool converged = true;
  std::vector<double> lambda;
  std::vector<double> F_plus;   // F(lambda)
  std::vector<double> F_minus;  // F(-lambda)
  std::vector<double> G;        // |lambda| (F(lambda) + F(-lambda))
  std::vector<double> H;        // lambda (F(lambda) - F(-lambda))
  double max_fit_residual = 0.0;
  /// max |d^2 G / d(ln lambda)^2| by second differences, needs a geometric grid.
  double G_log_curvature = 0.0;
};

/// F(lambda) = orbital_integral_so2 at sin(theta) = lambda, fitted by least
/// squares to A/|lambda| + B ln(1/|lambda|) + C. The grid must be strictly
/// decreasing in (0, 0.3] with at least 8 points; std::invalid_argument otherwise.
SingularExpansion singular_expansion(const KAveragedFunction& F, const std::vector<double>& lambda_grid,
                                     const QuadratureSpec& spec);

/// n points from hi down to lo, equally spaced in ln(lambda).
std::vector<double> geometric_grid(double hi, double lo, int n);

/// Values of the orbital integral on the three cosets of S3/S2 (basepoint first).
using CosetValues = std::array<double, 3>;

/// Character of (Z2)^2 given by its values on the generators e1, e2. Elements
/// are indexed 0 = (0,0), 1 = e1, 2 = e2, 3 = e1 + e2.
struct KappaCharacter {
  int on_first = 1;
  int on_second = 1;

  int operator()(int element) const;
  int index() const;  // position in all_kappa_characters()
  bool is_trivial() const { return on_first == 1 && on_second == 1; }

  static KappaCharacter trivial() { return {1, 1}; }
  /// kappa(H12) = kappa(H13) = -1.
  static KappaCharacter distinguished() { return {-1, -1}; }
};

/// The four characters in the order (1,1), (-1,1), (1,-1), (-1,-1).
std::array<KappaCharacter, 4> all_kappa_characters();

/// Basepoint coset -> identity, the two other cosets -> e1, e2; the fourth
/// element carries 0. Returns sum_w kappa(w) values[w].
double kappa_orbital_sum(const CosetValues& values, const KappaCharacter& kappa);

double stable_orbital_sum(const CosetValues& values);

/// Finite Fourier inversion over (Z2)^2 of the four kappa sums, indexed as in
/// all_kappa_characters(). Returns the values on all four group elements; the
/// fourth is 0 whenever the sums came from kappa_orbital_sum.
std::array<double, 4> kappa_fourier_inversion(const std::array<double, 4>& sums_by_kappa);

}  // namespace sl3
