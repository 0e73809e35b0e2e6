#include "sl3/endoscopy.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "parallel.hpp"
#include "sl3/tolerances.hpp"

namespace sl3 {

const char* to_string(EndoscopicVariant v) {
  switch (v) {
    case EndoscopicVariant::elliptic_torus: return "elliptic-torus";
    case EndoscopicVariant::so2_parabolic: return "so2-parabolic";
    case EndoscopicVariant::sl2_times_sign: return "sl2-times-sign";
    case EndoscopicVariant::full_group: return "full-group";
  }
  return "unknown";
}

GroupElement embed_sl2(const std::array<double, 4>& w, int u) {
  if (u != 1 && u != -1) throw std::invalid_argument("embed_sl2: u must be +1 or -1");
  const double det = w[0] * w[3] - w[1] * w[2];
  if (!(std::abs(det - 1.0) <= 1e-9)) throw std::invalid_argument("embed_sl2: det w must be 1");
  Mat3 m = Mat3::identity();
  m(0, 0) = u * w[0];
  m(0, 1) = -u * w[1];
  m(1, 0) = -u * w[2];
  m(1, 1) = u * w[3];
  return GroupElement(m);
}

const char* sl2_embedding_conjugation() { return "diag(1,-i,1)"; }

Complex weyl_denominator(const TorusPoint& z, DenominatorSystem system) {
  if (system == DenominatorSystem::H) {
    if (!(std::abs(z[0] * z[1] - Complex(1.0)) <= kTolerances.unit_modulus))
      throw std::invalid_argument("weyl_denominator: H input needs z1 z2 = 1");
    if (std::abs(z[0] - z[1]) <= kTolerances.singular_gap)
      throw std::domain_error("weyl_denominator: singular H element");
    return z[0] - z[1];
  }
  if (min_eigenvalue_gap(z) <= kTolerances.singular_gap)
    throw std::domain_error("weyl_denominator: singular G element");
  // z^-rho = z3 / z1.
  return (z[2] / z[0]) * (z[0] / z[1] - 1.0) * (z[0] / z[2] - 1.0) * (z[1] / z[2] - 1.0);
}

std::string HalfWeight::to_string() const {
  auto one = [](int t) {
    return t % 2 == 0 ? std::to_string(t / 2) : std::to_string(t) + "/2";
  };
  return "(" + one(twice[0]) + "," + one(twice[1]) + "," + one(twice[2]) + ")";
}

HalfWeight operator+(const HalfWeight& a, const HalfWeight& b) {
  return {{a.twice[0] + b.twice[0], a.twice[1] + b.twice[1], a.twice[2] + b.twice[2]}};
}

HalfWeight rho_H() { return {{1, -1, 0}}; }

Complex torus_power_half(const TorusPoint& z, const HalfWeight& mu) {
  const double p1 = std::arg(z[0]), p2 = std::arg(z[1]);
  const double p3 = -p1 - p2;
  const double phase = 0.5 * (mu.twice[0] * p1 + mu.twice[1] * p2 + mu.twice[2] * p3);
  return std::polar(1.0, phase);
}

const std::array<XiCandidate, 6>& xi_candidates() {
  static const std::array<XiCandidate, 6> c = {{
      {"0", {{0, 0, 0}}},
      {"rho-rho_H", {{1, 1, -2}}},
      {"w1", {{2, 0, 0}}},
      {"w2", {{2, 2, 0}}},
      {"-w1", {{-2, 0, 0}}},
      {"-w2", {{-2, -2, 0}}},
  }};
  return c;
}

HalfWeight TransferConvention::xi() const { return xi_candidates().at(xi_index).weight; }

std::string TransferConvention::to_string() const {
  return std::string("sign=") + (global_sign > 0 ? "+1" : "-1") + " xi=" + xi_candidates().at(xi_index).name +
         " fH=" + sl3::to_string(fH_normalization);
}

std::vector<TransferConvention> all_transfer_conventions() {
  std::vector<TransferConvention> out;
  for (int sign : {1, -1})
    for (int xi = 0; xi < static_cast<int>(xi_candidates().size()); ++xi)
      for (auto norm : {TransferNormalization::delta_times_orbital,
                        TransferNormalization::delta_inverse_times_orbital})
        out.push_back({sign, xi, norm});
  return out;
}

TorusPoint matched_torus_point(double theta, int u) {
  const Complex zeta = std::polar(1.0, theta);
  return {double(u) * zeta, double(u) / zeta, Complex(1.0)};
}

namespace {

TorusPoint inverse(const TorusPoint& z) { return {1.0 / z[0], 1.0 / z[1], 1.0 / z[2]}; }

void check_sign(int s) {
  if (s != 1 && s != -1) throw std::invalid_argument("TransferConvention: global_sign must be +-1");
}

}  // namespace

Complex transfer_factor(const TorusPoint& gamma, Complex zeta, const TransferConvention& conv) {
  check_sign(conv.global_sign);
  const double tol = 1e-9;
  const bool third_ok = std::abs(gamma[2] - Complex(1.0)) <= tol;
  const bool first_ok = std::abs(gamma[0] - zeta) <= tol || std::abs(gamma[0] + zeta) <= tol;
  if (!third_ok || !first_ok) throw std::invalid_argument("transfer_factor: gamma is not matched to gamma_H");
  const Complex zinv = 1.0 / zeta;
  const HalfWeight minus_rho_h{{-1, 1, 0}};
  const HalfWeight shift = HalfWeight::from_weight(rho()) + minus_rho_h + conv.xi();
  const Complex dg = weyl_denominator(inverse(gamma), DenominatorSystem::G);
  const Complex dh = weyl_denominator({zinv, zeta, Complex(1.0)}, DenominatorSystem::H);
  return double(conv.global_sign) * torus_power_half(gamma, shift) * dg / dh;
}

Complex compact_character(const Weight& mu, const TorusPoint& g) {
  const Weight s_mu = compact_reflection().act(mu);
  return (torus_power(g, mu) - torus_power(g, s_mu)) / weyl_denominator(g, DenominatorSystem::G);
}

Complex sl2_stable_character(const HalfWeight& nu, double theta) {
  const int n_twice = nu.twice[0] - nu.twice[1];
  const double s = std::sin(theta);
  if (std::abs(s) <= kTolerances.singular_gap) throw std::domain_error("sl2_stable_character: singular element");
  return Complex(std::sin(0.5 * n_twice * theta) / s, 0.0);
}

IdentityResidual character_identity_residual(const Weight& mu, double theta,
                                             const TransferConvention& conv,
                                             const KappaCharacter& kappa) {
  if (classify_weight(mu) == WeightClass::F_singular)
    throw std::invalid_argument("character_identity_residual: mu must be regular");
  if (std::abs(std::sin(theta)) <= kTolerances.singular_gap)
    throw std::domain_error("character_identity_residual: singular theta");
  const TorusPoint gamma = matched_torus_point(theta, 1);
  const Complex zeta = gamma[0];
  Complex factor = transfer_factor(gamma, zeta, conv);
  if (conv.fH_normalization == TransferNormalization::delta_inverse_times_orbital) factor = 1.0 / factor;
  const TorusPoint gamma_inv = inverse(gamma);

  IdentityResidual out;
  const auto& even = even_weyl_elements();
  for (std::size_t i = 0; i < even.size(); ++i) {
    IdentityTerm t;
    t.w = even[i];
    t.kappa = kappa(static_cast<int>(i));
    const Weight wmu = t.w.act(mu);
    t.lhs = double(t.kappa) * factor * compact_character(wmu, gamma_inv);
    t.rhs = sl2_stable_character(HalfWeight::from_weight(wmu) + conv.xi(), -theta);
    out.lhs += t.lhs;
    out.rhs += t.rhs;
    out.terms.push_back(t);
  }
  out.residual = std::abs(out.lhs - out.rhs);
  return out;
}

IdentityResidual sl2_internal_residual(int n, double theta, const TransferConvention& conv) {
  if (n < 0) throw std::invalid_argument("sl2_internal_residual: n must be >= 0");
  check_sign(conv.global_sign);
  if (std::abs(std::sin(theta)) <= kTolerances.singular_gap)
    throw std::domain_error("sl2_internal_residual: singular theta");
  const Complex z = std::polar(1.0, -theta);  // zeta^-1
  const Complex dh = z - 1.0 / z;
  const Complex weyl_quotient = (std::pow(z, n + 1) - std::pow(z, -(n + 1))) / dh;
  Complex weight_sum = 0.0;
  for (int k = 0; k <= n; ++k) weight_sum += std::pow(z, n - 2 * k);
  const HalfWeight xi = conv.xi();
  const int x_twice = xi.twice[0] - xi.twice[1];
  const Complex shift = std::polar(1.0, -0.5 * theta * x_twice);
  const Complex norm = conv.fH_normalization == TransferNormalization::delta_times_orbital ? dh : 1.0 / dh;

  IdentityResidual out;
  out.lhs = double(conv.global_sign) * shift * norm * weyl_quotient;
  out.rhs = dh * weight_sum;
  out.residual = std::abs(out.lhs - out.rhs);
  IdentityTerm t;
  t.lhs = out.lhs;
  t.rhs = out.rhs;
  out.terms.push_back(t);
  return out;
}

namespace {

template <class Eval>
ConventionScan run_scan(const std::vector<double>& theta_grid, double threshold, Eval eval) {
  if (theta_grid.size() < 5) throw std::invalid_argument("convention_search: need at least 5 grid points");
  for (double t : theta_grid)
    if (std::abs(std::sin(t)) <= kTolerances.singular_gap)
      throw std::invalid_argument("convention_search: grid point with sin(theta) = 0");
  ConventionScan scan;
  scan.theta_grid = theta_grid;
  scan.threshold = threshold;
  const auto conventions = all_transfer_conventions();
  scan.rows.resize(conventions.size());
  detail::parallel_for(conventions.size(), [&](std::size_t i) {
    ConventionRow& row = scan.rows[i];
    row.convention = conventions[i];
    for (double t : theta_grid) {
      const double r = eval(t, conventions[i]);
      row.residuals.push_back(r);
      row.max_residual = std::max(row.max_residual, r);
    }
  });
  for (std::size_t i = 1; i < scan.rows.size(); ++i)
    if (scan.rows[i].max_residual < scan.rows[scan.best].max_residual) scan.best = i;
  scan.zeroed = scan.rows[scan.best].max_residual < threshold;
  return scan;
}

}  // namespace

ConventionScan convention_search(const Weight& mu, const std::vector<double>& theta_grid,
                                 const KappaCharacter& kappa, double threshold) {
  return run_scan(theta_grid, threshold, [&](double t, const TransferConvention& c) {
    return character_identity_residual(mu, t, c, kappa).residual;
  });
}

ConventionScan convention_search_sl2(int n, const std::vector<double>& theta_grid, double threshold) {
  return run_scan(theta_grid, threshold, [&](double t, const TransferConvention& c) {
    return sl2_internal_residual(n, t, c).residual;
  });
}

std::array<std::array<int, 4>, 4> shelstad_pairing_matrix() {
  std::array<std::array<int, 4>, 4> m{};
  for (int s = 0; s < 4; ++s)
    for (int p = 0; p < 4; ++p) m[s][p] = (std::popcount(static_cast<unsigned>(s & p)) % 2 == 0) ? 1 : -1;
  return m;
}

std::array<double, 4> shelstad_forward(const std::array<double, 4>& traces_by_pi) {
  const auto m = shelstad_pairing_matrix();
  std::array<double, 4> out{};
  for (int s = 0; s < 4; ++s)
    for (int p = 0; p < 4; ++p) out[s] += m[s][p] * traces_by_pi[p];
  return out;
}

std::array<double, 4> poisson_inversion(const std::array<double, 4>& traces_by_s) {
  const auto m = shelstad_pairing_matrix();
  std::array<double, 4> out{};
  for (int p = 0; p < 4; ++p) {
    double sum = 0.0;
    for (int s = 0; s < 4; ++s) sum += m[s][p] * traces_by_s[s];
    out[p] = 0.25 * sum;
  }
  return out;
}

std::string DiscreteSeriesLabel::to_string() const {
  return "pi" + mu.to_string() + "[eps=" + std::to_string(epsilon) + ",k=" + std::to_string(k) + "]";
}

bool operator<(const DiscreteSeriesLabel& a, const DiscreteSeriesLabel& b) {
  const auto na = a.mu.normalized().coords, nb = b.mu.normalized().coords;
  if (na != nb) return na < nb;
  if (a.epsilon != b.epsilon) return a.epsilon < b.epsilon;
  return a.k < b.k;
}

bool operator==(const DiscreteSeriesLabel& a, const DiscreteSeriesLabel& b) {
  return a.mu == b.mu && a.epsilon == b.epsilon && a.k == b.k;
}

void GrothendieckElement::add(const DiscreteSeriesLabel& label, int coefficient) {
  const int c = (terms_[label] += coefficient);
  if (c == 0) terms_.erase(label);
}

int GrothendieckElement::coefficient(const DiscreteSeriesLabel& label) const {
  const auto it = terms_.find(label);
  return it == terms_.end() ? 0 : it->second;
}

double GrothendieckElement::pair(const std::map<DiscreteSeriesLabel, double>& traces) const {
  double s = 0.0;
  for (const auto& [label, c] : terms_) {
    const auto it = traces.find(label);
    if (it != traces.end()) s += c * it->second;
  }
  return s;
}

std::vector<DiscreteSeriesLabel> packet_for(const Weight& mu) {
  std::vector<DiscreteSeriesLabel> out;
  int k = 0;
  for (const auto& w : even_weyl_elements()) out.push_back({w.act(mu), 0, k++});
  return out;
}

std::vector<int> packet_signs(const KappaCharacter& kappa) { return {kappa(0), kappa(1), kappa(2)}; }

GrothendieckElement grothendieck_transfer(const std::vector<DiscreteSeriesLabel>& packet,
                                          const std::vector<int>& signs) {
  if (packet.size() != signs.size())
    throw std::invalid_argument("grothendieck_transfer: packet and signs differ in size");
  GrothendieckElement g;
  for (std::size_t i = 0; i < packet.size(); ++i) {
    if (signs[i] != 1 && signs[i] != -1) throw std::invalid_argument("grothendieck_transfer: signs must be +-1");
    g.add(packet[i], signs[i]);
  }
  return g;
}

}  // namespace sl3
