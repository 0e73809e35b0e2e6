#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sl3 {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  double width() const { return hi - lo; }
};

/// Controls for the adaptive Gauss-Kronrod integrator.
struct QuadratureSpec {
  double rel_tol = 1e-9;
  double abs_tol = 1e-13;
  int max_subdivision_depth = 40;      // bisections allowed per axis interval
  std::vector<Interval> truncation_box;  // one entry per axis

  /// Throws std::invalid_argument on non-positive tolerances or depth < 1.
  void validate() const;

  /// Plain-text `key=value` lines. Box axes serialise as `box.N=lo,hi`.
  std::string to_config() const;

  /// Applies `key=value` lines (blank lines and `#` comments ignored) on top
  /// of `base`. Unknown keys throw std::invalid_argument.
  static QuadratureSpec from_config(std::string_view text, const QuadratureSpec& base);
  static QuadratureSpec from_config(std::string_view text);
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  bool converged = true;
  std::size_t evaluations = 0;
};

using Integrand = std::function<double(std::span<const double>)>;

/// Limits of axis d as a function of the already-fixed outer coordinates x[0..d).
using LimitFunction = std::function<Interval(std::span<const double>)>;

/// Globally adaptive GK 7-15 on [a, b]. The error estimate follows QUADPACK's
/// scaling of |K15 - G7|. `converged` is false when the requested accuracy was
/// not reached within the subdivision depth; the value is still returned.
QuadratureResult integrate_1d(const std::function<double(double)>& h, double a, double b,
                              const QuadratureSpec& spec);

/// Iterated adaptive integral over a box with 1 to 3 axes taken from
/// spec.truncation_box. The point passed to h is (x0, x1, ...).
QuadratureResult integrate(const Integrand& h, int dims, const QuadratureSpec& spec);

/// Iterated integral whose inner limits may depend on outer coordinates.
/// Inner integrals run at half the outer tolerance and their error estimates
/// are integrated into the reported total.
QuadratureResult integrate_iterated(const Integrand& h, std::span<const LimitFunction> limits,
                                    const QuadratureSpec& spec);

}  // namespace sl3
