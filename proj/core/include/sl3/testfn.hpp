#pragma once

#include <cstdint>
#include <vector>

#include "sl3/lie.hpp"

namespace sl3 {

/// f(g) = profile(r^2) * exp(1 - 1/(1 - r^2)) with r = |g - center|_F / radius,
/// and f(g) = 0 for r >= 1. `profile` holds polynomial coefficients in r^2,
/// constant term first; an empty profile is the zero function.
struct TestFunction {
  Mat3 center = Mat3::identity();
  double radius = 1.0;
  std::vector<double> profile{1.0};

  double operator()(const Mat3& g) const;
  double profile_at(double r2) const;
  bool is_zero() const;

  /// c * f, obtained by scaling the profile.
  TestFunction scaled(double c) const;

  /// Upper bound for |g|_F on the support: |center|_F + radius.
  double support_norm_bound() const;
};

/// Throws std::invalid_argument when radius <= 0 or is not finite.
TestFunction make_bump(const GroupElement& center, double radius, std::vector<double> profile = {1.0});

/// Euler-angle quadrature on SO(3): k = Rz(alpha) Ry(beta) Rz(gamma), alpha and
/// gamma on n equispaced points, cos(beta) on n Gauss-Legendre nodes. Weights
/// sum to 1 (normalised Haar measure).
struct SO3Grid {
  std::vector<Mat3> rotations;
  std::vector<double> weights;
};

SO3Grid so3_grid(int order);

/// Gauss-Legendre nodes and weights on [-1, 1].
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

/// F(g) = mean over (k1, k2) of f(k1 g k2). When the center of f is a positive
/// multiple of a rotation the double average collapses to a single one,
/// F(g) = mean_k f(g k R); otherwise the full product grid is used.
class KAveragedFunction {
 public:
  KAveragedFunction(TestFunction f, int grid_order);

  double operator()(const Mat3& g) const;

  const TestFunction& base() const { return f_; }
  int grid_order() const { return order_; }
  bool single_average() const { return single_; }

  /// Bound for |g|_F on the support, valid for every k1 g k2.
  double support_norm_bound() const { return f_.support_norm_bound(); }

 private:
  TestFunction f_;
  int order_;
  SO3Grid grid_;
  bool single_ = false;
  Mat3 rotation_part_ = Mat3::identity();
};

/// Throws std::invalid_argument when grid_order < 4.
KAveragedFunction k_average(const TestFunction& f, int grid_order);

/// Largest |F(k1 g k2) - F(g)| over `samples` random triples (seeded). The g
/// are drawn as exp of random traceless matrices with entries in [-scale, scale].
double bi_invariance_residual(const KAveragedFunction& F, int samples, std::uint64_t seed,
                              double scale = 0.5);

/// Haar-distributed rotation from a uniform point of [0,1)^3 (unit quaternion method).
Mat3 rotation_from_unit_cube(double u1, double u2, double u3);

}  // namespace sl3
