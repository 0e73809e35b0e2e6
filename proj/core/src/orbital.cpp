#include "sl3/orbital.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "parallel.hpp"
#include "sl3/tolerances.hpp"

namespace sl3 {

EllipticElement EllipticElement::make(double a1, double a2, double a3, bool allow_near_singular) {
  if (!(std::abs(a1 * a2 * a3 - 1.0) <= kTolerances.unimodular))
    throw std::invalid_argument("EllipticElement: a1 a2 a3 must equal 1");
  EllipticElement e{a1, a2, a3};
  if (!allow_near_singular && !(e.min_gap() >= kTolerances.regular_gap))
    throw std::invalid_argument("EllipticElement: eigenvalues are not regular");
  return e;
}

double EllipticElement::discriminant() const { return weyl_discriminant(a1, a2, a3); }

double EllipticElement::min_gap() const {
  return std::min({std::abs(a1 - a2), std::abs(a1 - a3), std::abs(a2 - a3)});
}

RotationElement::RotationElement(double theta_in) {
  if (!std::isfinite(theta_in)) throw std::invalid_argument("RotationElement: theta must be finite");
  double t = std::remainder(theta_in, 2.0 * std::numbers::pi);
  if (t <= -std::numbers::pi) t += 2.0 * std::numbers::pi;
  theta = t;
}

Mat3 RotationElement::matrix() const {
  Mat3 m = Mat3::identity();
  m(0, 0) = std::cos(theta);
  m(0, 1) = std::sin(theta);
  m(1, 0) = -std::sin(theta);
  m(1, 1) = std::cos(theta);
  return m;
}

std::complex<double> RotationElement::discriminant() const {
  return {0.0, -2.0 * std::sin(theta)};
}

Mat3 unipotent(double x, double y, double z) {
  Mat3 m = Mat3::identity();
  m(0, 1) = x;
  m(1, 2) = y;
  m(0, 2) = z;
  return m;
}

namespace {

// Squared Frobenius distance from gamma to the center over the entries that
// conjugation by U leaves unchanged (diagonal and below). What remains of
// radius^2 is the budget for the three upper entries.
double upper_budget(const TestFunction& f, const EllipticElement& g) {
  const Mat3& c = f.center;
  const double d0 = (g.a1 - c(0, 0)) * (g.a1 - c(0, 0)) + (g.a2 - c(1, 1)) * (g.a2 - c(1, 1)) +
                    (g.a3 - c(2, 2)) * (g.a3 - c(2, 2)) + c(1, 0) * c(1, 0) + c(2, 0) * c(2, 0) +
                    c(2, 1) * c(2, 1);
  return f.radius * f.radius - d0;
}

// {v : |k v - center| <= half} for k != 0.
Interval solve_linear_band(double k, double shift, double center, double half) {
  const double lo = (center + shift - half) / k;
  const double hi = (center + shift + half) / k;
  return lo <= hi ? Interval{lo, hi} : Interval{hi, lo};
}

double safe_sqrt(double v) { return v > 0.0 ? std::sqrt(v) : 0.0; }

}  // namespace

QuadratureResult orbital_integral_elliptic_numeric(const TestFunction& f, const EllipticElement& g,
                                                   const QuadratureSpec& spec) {
  const double d12 = g.a1 - g.a2, d23 = g.a2 - g.a3, d13 = g.a1 - g.a3;
  if (d12 == 0.0 || d23 == 0.0 || d13 == 0.0)
    throw std::domain_error("orbital_integral_elliptic_numeric: singular element");
  const double budget = upper_budget(f, g);
  if (f.is_zero() || budget <= 0.0) return {};
  const Mat3& c = f.center;
  const Mat3 gamma = g.matrix();

  // x and y run over the bounding box of the support, z over the exact slice.
  const double half = std::sqrt(budget);
  const Interval xb = solve_linear_band(d12, 0.0, c(0, 1), half);
  const Interval yb = solve_linear_band(d23, 0.0, c(1, 2), half);
  const std::array<LimitFunction, 3> limits = {
      [=](std::span<const double>) { return xb; },
      [=](std::span<const double>) { return yb; },
      [=](std::span<const double> p) {
        const double e1 = d12 * p[0] - c(0, 1);
        const double e2 = d23 * p[1] - c(1, 2);
        const double rest = budget - e1 * e1 - e2 * e2;
        if (!(rest > 0.0)) return Interval{0.0, 0.0};
        return solve_linear_band(d13, d23 * p[0] * p[1], c(0, 2), std::sqrt(rest));
      },
  };
  const Integrand h = [&](std::span<const double> p) {
    const double x = p[0], y = p[1], z = p[2];
    const Mat3 u = unipotent(x, y, z);
    const Mat3 u_inv = unipotent(-x, -y, x * y - z);
    return f(u_inv * gamma * u);
  };
  return integrate_iterated(h, limits, spec);
}

namespace {

QuadratureResult triangular_integral(const TestFunction& f, const EllipticElement& g,
                                     const QuadratureSpec& spec) {
  const double budget = upper_budget(f, g);
  if (f.is_zero() || budget <= 0.0) return {};
  const Mat3& c = f.center;
  const Mat3 gamma = g.matrix();
  const std::array<LimitFunction, 3> limits = {
      [=](std::span<const double>) {
        const double h = std::sqrt(budget);
        return Interval{c(0, 1) - h, c(0, 1) + h};
      },
      [=](std::span<const double> p) {
        const double e = p[0] - c(0, 1);
        const double h = safe_sqrt(budget - e * e);
        return Interval{c(1, 2) - h, c(1, 2) + h};
      },
      [=](std::span<const double> p) {
        const double e1 = p[0] - c(0, 1), e2 = p[1] - c(1, 2);
        const double h = safe_sqrt(budget - e1 * e1 - e2 * e2);
        return Interval{c(0, 2) - h, c(0, 2) + h};
      },
  };
  const Integrand h = [&](std::span<const double> p) {
    Mat3 m = gamma;
    m(0, 1) = p[0];
    m(1, 2) = p[1];
    m(0, 2) = p[2];
    return f(m);
  };
  return integrate_iterated(h, limits, spec);
}

}  // namespace

QuadratureResult orbital_integral_elliptic_closed(const TestFunction& f, const EllipticElement& g,
                                                  const QuadratureSpec& spec) {
  const double delta = g.discriminant();
  if (delta == 0.0) throw std::domain_error("orbital_integral_elliptic_closed: Delta(gamma) = 0");
  QuadratureResult r = triangular_integral(f, g, spec);
  r.value /= delta;
  r.error_estimate /= delta;
  return r;
}

const char* to_string(TransferNormalization n) {
  return n == TransferNormalization::delta_times_orbital ? "delta*O" : "delta^-1*O";
}

QuadratureResult transfer_function_elliptic(const TestFunction& f, const EllipticElement& g,
                                            TransferNormalization norm, const QuadratureSpec& spec) {
  if (norm == TransferNormalization::delta_times_orbital) return triangular_integral(f, g, spec);
  const double delta = g.discriminant();
  if (delta == 0.0) throw std::domain_error("transfer_function_elliptic: Delta(gamma) = 0");
  QuadratureResult r = triangular_integral(f, g, spec);
  r.value /= delta * delta;
  r.error_estimate /= delta * delta;
  return r;
}

Mat3 so2_orbit_point(double t, double theta) {
  Mat3 m = Mat3::identity();
  const double c = std::cos(theta), s = std::sin(theta);
  m(0, 0) = c;
  m(0, 1) = t * s;
  m(1, 0) = -s / t;
  m(1, 1) = c;
  return m;
}

namespace {

// t-range on which |m(t, theta)|_F <= bound; empty when hi <= lo.
Interval so2_t_range(double theta, double bound) {
  const double c = std::cos(theta), s = std::sin(theta);
  const double q = (bound * bound - 2.0 * c * c - 1.0) / (s * s);
  if (!(q > 2.0)) return {1.0, 1.0};
  const double hi = std::sqrt(0.5 * (q + std::sqrt(q * q - 4.0)));
  return {1.0 / hi, hi};
}

QuadratureResult combine(const QuadratureResult& plus, const QuadratureResult& minus) {
  return {plus.value - minus.value, plus.error_estimate + minus.error_estimate,
          plus.converged && minus.converged, plus.evaluations + minus.evaluations};
}

void check_rotation(const RotationElement& k, const char* who) {
  if (std::sin(k.theta) == 0.0) throw std::invalid_argument(std::string(who) + ": sin(theta) = 0");
}

}  // namespace

QuadratureResult orbital_integral_so2(const KAveragedFunction& F, const RotationElement& k,
                                      const QuadratureSpec& spec) {
  check_rotation(k, "orbital_integral_so2");
  if (F.base().is_zero()) return {};
  const Interval tr = so2_t_range(k.theta, F.support_norm_bound());
  if (!(tr.hi > tr.lo)) return {};
  const double theta = k.theta;
  const auto h = [&](double t) { return F(so2_orbit_point(t, theta)); };
  const QuadratureResult above = integrate_1d(h, 1.0, tr.hi, spec);
  const QuadratureResult below = integrate_1d(h, tr.lo, 1.0, spec);
  return combine(above, below);
}

QuadratureResult orbital_integral_so2_prereduction(const KAveragedFunction& F,
                                                   const RotationElement& k,
                                                   const QuadratureSpec& spec) {
  check_rotation(k, "orbital_integral_so2_prereduction");
  if (F.base().is_zero()) return {};
  const Interval tr = so2_t_range(k.theta, F.support_norm_bound());
  if (!(tr.hi > tr.lo)) return {};
  constexpr double a_max = 6.0;
  const double psi_mass = std::sqrt(2.0 * std::numbers::pi) * std::erf(a_max / std::numbers::sqrt2);
  const Mat3 rot = k.matrix();
  const Integrand h = [&](std::span<const double> p) {
    const double a = p[0], t = p[1];
    const double ea = std::exp(a), st = std::sqrt(t);
    const Mat3 d = Mat3::diagonal(ea / st, ea * st, std::exp(-2.0 * a));
    const Mat3 d_inv = Mat3::diagonal(st / ea, 1.0 / (ea * st), std::exp(2.0 * a));
    return F(d_inv * rot * d) * std::exp(-0.5 * a * a) / psi_mass;
  };
  const auto run = [&](Interval t_iv) {
    const std::array<LimitFunction, 2> limits = {
        [](std::span<const double>) { return Interval{-a_max, a_max}; },
        [t_iv](std::span<const double>) { return t_iv; },
    };
    return integrate_iterated(h, limits, spec);
  };
  return combine(run({1.0, tr.hi}), run({tr.lo, 1.0}));
}

QuadratureResult unipotent_integral(const KAveragedFunction& F, const QuadratureSpec& spec) {
  if (F.base().is_zero()) return {};
  const double bound = F.support_norm_bound();
  const double u_max = safe_sqrt(bound * bound - 3.0);
  if (u_max == 0.0) return {};
  return integrate_1d([&](double u) { return F(unipotent(u, 0.0, 0.0)); }, 0.0, u_max, spec);
}

std::vector<double> geometric_grid(double hi, double lo, int n) {
  if (!(hi > lo && lo > 0.0) || n < 2) throw std::invalid_argument("geometric_grid: need hi > lo > 0, n >= 2");
  std::vector<double> out(n);
  const double step = std::log(lo / hi) / (n - 1);
  for (int i = 0; i < n; ++i) out[i] = hi * std::exp(step * i);
  out.back() = lo;
  return out;
}

SingularExpansion singular_expansion(const KAveragedFunction& F, const std::vector<double>& lambda_grid,
                                     const QuadratureSpec& spec) {
  const std::size_t n = lambda_grid.size();
  if (n < 8) throw std::invalid_argument("singular_expansion: need at least 8 grid points");
  for (std::size_t i = 0; i < n; ++i) {
    const double l = lambda_grid[i];
    if (!(l > 0.0 && l <= 0.3)) throw std::invalid_argument("singular_expansion: lambda must lie in (0, 0.3]");
    if (i > 0 && !(l < lambda_grid[i - 1]))
      throw std::invalid_argument("singular_expansion: grid must be strictly decreasing");
  }

  SingularExpansion out;
  out.lambda = lambda_grid;
  out.F_plus.assign(n, 0.0);
  out.F_minus.assign(n, 0.0);
  std::vector<char> ok(2 * n, 1);
  detail::parallel_for(2 * n, [&](std::size_t j) {
    const std::size_t i = j / 2;
    const double theta = std::asin(lambda_grid[i]) * (j % 2 == 0 ? 1.0 : -1.0);
    const QuadratureResult r = orbital_integral_so2(F, RotationElement(theta), spec);
    (j % 2 == 0 ? out.F_plus : out.F_minus)[i] = r.value;
    ok[j] = r.converged;
  });
  out.converged = std::all_of(ok.begin(), ok.end(), [](char c) { return c != 0; });

  out.G.resize(n);
  out.H.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double l = lambda_grid[i];
    out.G[i] = l * (out.F_plus[i] + out.F_minus[i]);
    out.H[i] = l * (out.F_plus[i] - out.F_minus[i]);
  }

  Eigen::MatrixXd design(n, 3);
  Eigen::VectorXd rhs(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double l = lambda_grid[i];
    design(i, 0) = 1.0 / l;
    design(i, 1) = std::log(1.0 / l);
    design(i, 2) = 1.0;
    rhs(i) = out.F_plus[i];
  }
  Eigen::Vector3d scale;
  for (int j = 0; j < 3; ++j) {
    scale(j) = design.col(j).norm();
    design.col(j) /= scale(j);
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(design, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  out.condition_number = sv(0) / sv(sv.size() - 1);
  out.ill_conditioned = !(out.condition_number <= kTolerances.ill_conditioned);
  const Eigen::Vector3d coef = svd.solve(rhs);
  out.A = coef(0) / scale(0);
  out.B = coef(1) / scale(1);
  out.C = coef(2) / scale(2);
  const Eigen::VectorXd resid = design * coef - rhs;
  out.max_fit_residual = resid.cwiseAbs().maxCoeff();

  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double x0 = std::log(lambda_grid[i - 1]), x1 = std::log(lambda_grid[i]),
                 x2 = std::log(lambda_grid[i + 1]);
    const double h1 = x1 - x0, h2 = x2 - x1;
    const double d2 = 2.0 * ((out.G[i + 1] - out.G[i]) / h2 - (out.G[i] - out.G[i - 1]) / h1) / (h1 + h2);
    out.G_log_curvature = std::max(out.G_log_curvature, std::abs(d2));
  }
  return out;
}

int KappaCharacter::operator()(int element) const {
  switch (element) {
    case 0: return 1;
    case 1: return on_first;
    case 2: return on_second;
    case 3: return on_first * on_second;
  }
  throw std::invalid_argument("KappaCharacter: element index must be 0..3");
}

int KappaCharacter::index() const { return (on_first == -1 ? 1 : 0) + (on_second == -1 ? 2 : 0); }

std::array<KappaCharacter, 4> all_kappa_characters() {
  return {KappaCharacter{1, 1}, KappaCharacter{-1, 1}, KappaCharacter{1, -1}, KappaCharacter{-1, -1}};
}

double kappa_orbital_sum(const CosetValues& values, const KappaCharacter& kappa) {
  return values[0] + kappa(1) * values[1] + kappa(2) * values[2];
}

double stable_orbital_sum(const CosetValues& values) {
  return kappa_orbital_sum(values, KappaCharacter::trivial());
}

std::array<double, 4> kappa_fourier_inversion(const std::array<double, 4>& sums_by_kappa) {
  const auto chars = all_kappa_characters();
  std::array<double, 4> out{};
  for (int e = 0; e < 4; ++e) {
    double s = 0.0;
    for (std::size_t k = 0; k < 4; ++k) s += chars[k](e) * sums_by_kappa[k];
    out[e] = 0.25 * s;
  }
  return out;
}

}  // namespace sl3
