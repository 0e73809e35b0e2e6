#pragma once

#include <array>
#include <complex>
#include <map>
#include <string>
#include <vector>

#include "sl3/lie.hpp"
#include "sl3/orbital.hpp"
#include "sl3/roots.hpp"

namespace sl3 {

enum class EndoscopicVariant { elliptic_torus, so2_parabolic, sl2_times_sign, full_group };

const char* to_string(EndoscopicVariant v);

struct EndoscopicDatum {
  EndoscopicVariant variant = EndoscopicVariant::sl2_times_sign;
  int u = 1;  // the sign factor of SL(2) x {+-1}
};

/// Real form of the block embedding of SL(2) x {+-1}: w = [[a, b], [c, d]] goes to
/// [[u a, -u b, 0], [-u c, u d, 0], [0, 0, 1]]. This is the complex block
/// [[u a, i u b], [-i u c, u d]] conjugated by diag(1, -i, 1). The rotation
/// [[cos, -sin], [sin, cos]] lands on k(theta) = exp(theta T).
/// Throws std::invalid_argument unless det w = 1 (within 1e-9) and u = +-1.
GroupElement embed_sl2(const std::array<double, 4>& w, int u);

/// Conjugation used by embed_sl2, for output metadata.
const char* sl2_embedding_conjugation();

enum class DenominatorSystem { G, H };

/// Weyl denominator prod_{alpha > 0} (z^{alpha/2} - z^{-alpha/2}).
/// G: positive system {a12, a13, a23}; equals z^-rho prod_{i<j} (z_i/z_j - 1).
/// H: SL(2) in the upper block, z = (zeta, 1/zeta, *); equals zeta - 1/zeta.
/// Throws std::domain_error on singular z, std::invalid_argument when the H
/// input does not satisfy z1 z2 = 1.
Complex weyl_denominator(const TorusPoint& z, DenominatorSystem system);

/// A weight with half-integral coordinates, stored doubled.
struct HalfWeight {
  std::array<int, 3> twice{};

  static HalfWeight from_weight(const Weight& w) { return {{2 * w[0], 2 * w[1], 2 * w[2]}}; }
  std::string to_string() const;
  friend HalfWeight operator+(const HalfWeight& a, const HalfWeight& b);
  friend bool operator==(const HalfWeight&, const HalfWeight&) = default;
};

/// rho_H = (1/2, -1/2, 0).
HalfWeight rho_H();

/// z^mu for a half-integral mu on the compact torus, using the branch
/// phi_1 = arg z_1, phi_2 = arg z_2, phi_3 = -phi_1 - phi_2.
Complex torus_power_half(const TorusPoint& z, const HalfWeight& mu);

struct TransferConvention {
  int global_sign = 1;
  int xi_index = 0;  // into xi_candidates()
  TransferNormalization fH_normalization = TransferNormalization::delta_times_orbital;

  HalfWeight xi() const;
  std::string to_string() const;
  friend bool operator==(const TransferConvention&, const TransferConvention&) = default;
};

struct XiCandidate {
  const char* name;
  HalfWeight weight;
};

/// 0, rho - rho_H, w1, w2, -w1, -w2 (w1, w2 the fundamental weights).
const std::array<XiCandidate, 6>& xi_candidates();

/// All 2 x 6 x 2 conventions in lexicographic order (sign +1 first, then xi
/// in candidate order, then Delta*O before Delta^-1*O).
std::vector<TransferConvention> all_transfer_conventions();

/// gamma = (u zeta, u / zeta, 1), the eigenvalues of embed_sl2(rotation, u).
TorusPoint matched_torus_point(double theta, int u = 1);

/// global_sign * gamma^{rho - rho_H + xi} * Delta_G(gamma^-1) / Delta_H(gamma_H^-1),
/// gamma_H = (zeta, 1/zeta, 1). gamma must match gamma_H: gamma_3 = 1 and
/// gamma_1 = +-zeta (std::invalid_argument otherwise).
Complex transfer_factor(const TorusPoint& gamma, Complex zeta, const TransferConvention& conv);

/// Theta_mu(g) = (g^mu - g^{s12 mu}) / Delta_G(g), the alternating sum over the
/// compact Weyl group {1, s12}.
Complex compact_character(const Weight& mu, const TorusPoint& g);

/// Stable SL(2) character (zeta^n - zeta^-n) / (zeta - 1/zeta) for n = nu_1 - nu_2,
/// with zeta = e^{i theta} and half-integral n allowed.
Complex sl2_stable_character(const HalfWeight& nu, double theta);

struct IdentityTerm {
  WeylElement w;
  int kappa = 1;
  Complex lhs;  // kappa(w) Delta^{+-1} Theta_{w mu}(gamma^-1)
  Complex rhs;  // SO^H_{w mu + xi}(gamma_H^-1)
};

struct IdentityResidual {
  Complex lhs;
  Complex rhs;
  double residual = 0.0;
  std::vector<IdentityTerm> terms;
};

/// Both sides of the kappa-weighted character identity at gamma = k(theta)
/// (matched as in matched_torus_point with u = 1), summed over the even Weyl
/// elements. Requires mu regular and sin(theta) != 0.
IdentityResidual character_identity_residual(const Weight& mu, double theta,
                                             const TransferConvention& conv,
                                             const KappaCharacter& kappa = KappaCharacter::distinguished());

/// SL(2)-internal identity: sign * zeta^{-x} * Delta_H^{e} * Theta^H_n via the
/// Weyl quotient against Delta_H * (explicit weight sum of V_n), at zeta^-1,
/// where x = xi_1 - xi_2 and e = +1 for Delta*O, -1 for Delta^-1*O.
IdentityResidual sl2_internal_residual(int n, double theta, const TransferConvention& conv);

struct ConventionRow {
  TransferConvention convention;
  std::vector<double> residuals;  // one per grid point
  double max_residual = 0.0;
};

struct ConventionScan {
  std::vector<double> theta_grid;
  std::vector<ConventionRow> rows;  // in all_transfer_conventions() order
  std::size_t best = 0;             // argmin of max_residual, first on ties
  bool zeroed = false;              // best max_residual below the threshold
  double threshold = 0.0;
};

/// Exhaustive scan of the SL(3) identity. Needs at least 5 grid points with
/// sin(theta) != 0.
ConventionScan convention_search(const Weight& mu, const std::vector<double>& theta_grid,
                                 const KappaCharacter& kappa = KappaCharacter::distinguished(),
                                 double threshold = 1e-8);

/// The same scan for the SL(2)-internal identity of weight n.
ConventionScan convention_search_sl2(int n, const std::vector<double>& theta_grid,
                                     double threshold = 1e-10);

/// M[s][pi] = (-1)^{s . pi} with both indices in the order (0,0), (1,0), (0,1), (1,1).
std::array<std::array<int, 4>, 4> shelstad_pairing_matrix();

/// Sigma_s = sum_pi <s, pi> tr pi(f).
std::array<double, 4> shelstad_forward(const std::array<double, 4>& traces_by_pi);

/// tr pi(f) = (1/4) sum_s <s, pi> Sigma_s.
std::array<double, 4> poisson_inversion(const std::array<double, 4>& traces_by_s);

struct DiscreteSeriesLabel {
  Weight mu;
  int epsilon = 0;
  int k = 0;

  std::string to_string() const;
  friend bool operator<(const DiscreteSeriesLabel& a, const DiscreteSeriesLabel& b);
  friend bool operator==(const DiscreteSeriesLabel& a, const DiscreteSeriesLabel& b);
};

class GrothendieckElement {
 public:
  void add(const DiscreteSeriesLabel& label, int coefficient);
  int coefficient(const DiscreteSeriesLabel& label) const;
  const std::map<DiscreteSeriesLabel, int>& terms() const { return terms_; }

  /// sum of coefficient * traces[label]; labels missing from `traces` count as 0.
  double pair(const std::map<DiscreteSeriesLabel, double>& traces) const;

 private:
  std::map<DiscreteSeriesLabel, int> terms_;
};

/// The packet {w mu : w even}, labelled k = 0, 1, 2 in even_weyl_elements() order.
std::vector<DiscreteSeriesLabel> packet_for(const Weight& mu);

/// Signs (kappa(0), kappa(e1), kappa(e2)) for the three occupied classes.
std::vector<int> packet_signs(const KappaCharacter& kappa);

/// sum epsilon(pi) pi. Throws std::invalid_argument on size mismatch or signs not +-1.
GrothendieckElement grothendieck_transfer(const std::vector<DiscreteSeriesLabel>& packet,
                                          const std::vector<int>& signs);

}  // namespace sl3
