#include "sl3/testfn.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace sl3 {

double TestFunction::profile_at(double r2) const {
  double p = 0.0;
  for (auto it = profile.rbegin(); it != profile.rend(); ++it) p = p * r2 + *it;
  return p;
}

bool TestFunction::is_zero() const {
  for (double c : profile)
    if (c != 0.0) return false;
  return true;
}

double TestFunction::operator()(const Mat3& g) const {
  const double r2 = frobenius_distance_sq(g, center) / (radius * radius);
  if (r2 >= 1.0) return 0.0;
  return profile_at(r2) * std::exp(1.0 - 1.0 / (1.0 - r2));
}

TestFunction TestFunction::scaled(double c) const {
  TestFunction out = *this;
  for (double& p : out.profile) p *= c;
  return out;
}

double TestFunction::support_norm_bound() const { return frobenius_norm(center) + radius; }

TestFunction make_bump(const GroupElement& center, double radius, std::vector<double> profile) {
  if (!(radius > 0.0) || !std::isfinite(radius))
    throw std::invalid_argument("make_bump: radius must be positive and finite");
  return TestFunction{center.matrix(), radius, std::move(profile)};
}

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n must be >= 1");
  nodes.assign(n, 0.0);
  weights.assign(n, 0.0);
  const unsigned un = static_cast<unsigned>(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      const double p = std::legendre(un, x);
      const double pm = n > 1 ? std::legendre(un - 1, x) : 1.0;
      dp = n * (x * p - pm) / (x * x - 1.0);
      const double dx = p / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double p = std::legendre(un, x);
    const double pm = n > 1 ? std::legendre(un - 1, x) : 1.0;
    dp = n * (x * p - pm) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    nodes[i] = -x;
    nodes[n - 1 - i] = x;
    weights[i] = w;
    weights[n - 1 - i] = w;
  }
}

namespace {

Mat3 rot_z(double a) {
  Mat3 m = Mat3::identity();
  m(0, 0) = std::cos(a);
  m(0, 1) = -std::sin(a);
  m(1, 0) = std::sin(a);
  m(1, 1) = std::cos(a);
  return m;
}

Mat3 rot_y_cos(double cb) {
  const double sb = std::sqrt(std::max(0.0, 1.0 - cb * cb));
  Mat3 m = Mat3::identity();
  m(0, 0) = cb;
  m(0, 2) = sb;
  m(2, 0) = -sb;
  m(2, 2) = cb;
  return m;
}

}  // namespace

SO3Grid so3_grid(int order) {
  if (order < 1) throw std::invalid_argument("so3_grid: order must be >= 1");
  std::vector<double> cb, wb;
  gauss_legendre(order, cb, wb);
  SO3Grid grid;
  const double step = 2.0 * std::numbers::pi / order;
  const double w_angle = 1.0 / order;
  for (int i = 0; i < order; ++i) {
    const Mat3 ra = rot_z(i * step);
    for (int j = 0; j < order; ++j) {
      const Mat3 rab = ra * rot_y_cos(cb[j]);
      for (int l = 0; l < order; ++l) {
        grid.rotations.push_back(rab * rot_z(l * step));
        grid.weights.push_back(w_angle * w_angle * 0.5 * wb[j]);
      }
    }
  }
  return grid;
}

KAveragedFunction::KAveragedFunction(TestFunction f, int grid_order)
    : f_(std::move(f)), order_(grid_order), grid_(so3_grid(grid_order)) {
  const Mat3& c = f_.center;
  const Mat3 cct = c * c.transpose();
  const double s2 = cct.trace() / 3.0;
  if (s2 > 0.0 && c.det() > 0.0 && max_abs_diff(cct, Mat3::identity() * s2) <= 1e-12 * s2) {
    single_ = true;
    rotation_part_ = c * (1.0 / std::sqrt(s2));
  }
}

double KAveragedFunction::operator()(const Mat3& g) const {
  if (f_.is_zero()) return 0.0;
  const auto& ks = grid_.rotations;
  const auto& ws = grid_.weights;
  const double bound = f_.support_norm_bound();
  if (frobenius_distance_sq(g, Mat3::zero()) >= bound * bound) return 0.0;
  double sum = 0.0;
  if (single_) {
    for (std::size_t i = 0; i < ks.size(); ++i) sum += ws[i] * f_(g * ks[i] * rotation_part_);
    return sum;
  }
  for (std::size_t i = 0; i < ks.size(); ++i) {
    const Mat3 kg = ks[i] * g;
    double inner = 0.0;
    for (std::size_t j = 0; j < ks.size(); ++j) inner += ws[j] * f_(kg * ks[j]);
    sum += ws[i] * inner;
  }
  return sum;
}

KAveragedFunction k_average(const TestFunction& f, int grid_order) {
  if (grid_order < 4) throw std::invalid_argument("k_average: grid_order must be >= 4");
  return KAveragedFunction(f, grid_order);
}

Mat3 rotation_from_unit_cube(double u1, double u2, double u3) {
  const double a = std::sqrt(1.0 - u1), b = std::sqrt(u1);
  const double t1 = 2.0 * std::numbers::pi * u2, t2 = 2.0 * std::numbers::pi * u3;
  const double w = a * std::sin(t1), x = a * std::cos(t1), y = b * std::sin(t2), z = b * std::cos(t2);
  Mat3 m;
  m(0, 0) = 1 - 2 * (y * y + z * z);
  m(0, 1) = 2 * (x * y - z * w);
  m(0, 2) = 2 * (x * z + y * w);
  m(1, 0) = 2 * (x * y + z * w);
  m(1, 1) = 1 - 2 * (x * x + z * z);
  m(1, 2) = 2 * (y * z - x * w);
  m(2, 0) = 2 * (x * z - y * w);
  m(2, 1) = 2 * (y * z + x * w);
  m(2, 2) = 1 - 2 * (x * x + y * y);
  return m;
}

double bi_invariance_residual(const KAveragedFunction& F, int samples, std::uint64_t seed,
                              double scale) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> entry(-scale, scale);
  double worst = 0.0;
  for (int s = 0; s < samples; ++s) {
    Mat3 x;
    for (auto& e : x.v) e = entry(rng);
    const double tr = x.trace() / 3.0;
    for (int i = 0; i < 3; ++i) x(i, i) -= tr;
    const Mat3 g = group_exp(AlgebraElement(x)).matrix();
    const Mat3 k1 = rotation_from_unit_cube(unit(rng), unit(rng), unit(rng));
    const Mat3 k2 = rotation_from_unit_cube(unit(rng), unit(rng), unit(rng));
    worst = std::max(worst, std::abs(F(k1 * g * k2) - F(g)));
  }
  return worst;
}

}  // namespace sl3
