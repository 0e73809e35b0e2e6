#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace sl3 {

using Complex = std::complex<double>;
using TorusPoint = std::array<Complex, 3>;

/// Integral weight (m1, m2, m3) in the epsilon basis of h*. Triples that
/// differ by (c, c, c) are the same weight; `coords` keeps the raw input so
/// tableau shapes such as (1,1,1) survive, `normalized` is the canonical form
/// (minimum entry shifted to 0).
struct Weight {
  std::array<int, 3> coords{};

  Weight() = default;
  Weight(int m1, int m2, int m3) : coords{m1, m2, m3} {}

  int operator[](std::size_t i) const { return coords[i]; }
  Weight normalized() const;
  bool is_dominant() const { return coords[0] >= coords[1] && coords[1] >= coords[2]; }
  std::string to_string() const;

  friend Weight operator+(const Weight& a, const Weight& b);
  friend Weight operator-(const Weight& a, const Weight& b);
  friend Weight operator-(const Weight& a);
  friend bool operator==(const Weight& a, const Weight& b);
  friend bool operator<(const Weight& a, const Weight& b);
};

/// Root alpha_kl = eps_k - eps_l with 1-based indices. Compact iff {k,l} = {1,2}.
struct Root {
  enum class Kind { compact, noncompact };
  int k = 1;
  int l = 2;

  Root(int k_, int l_);
  Kind kind() const;
  Weight as_weight() const;
};

std::vector<Root> all_roots();
std::vector<Root> positive_roots();  // alpha12, alpha13, alpha23

/// lambda(H_kl) = m_k - m_l for the coroot H_kl = E_kk - E_ll (1-based).
int pair_weight_coroot(const Weight& lambda, int k, int l);

/// A permutation of {0,1,2} acting on weights by (w lambda)_{perm[i]} = lambda_i.
struct WeylElement {
  std::array<int, 3> perm{0, 1, 2};
  int sign = 1;

  static WeylElement from_permutation(const std::array<int, 3>& p);
  Weight act(const Weight& lambda) const;
  std::array<double, 3> act(const std::array<double, 3>& lambda) const;
  WeylElement compose(const WeylElement& other) const;  // (this o other)
  std::array<std::array<int, 3>, 3> matrix() const;      // P e_i = e_{perm[i]}
  int matrix_determinant() const;
  bool is_even() const { return sign == 1; }
  std::string to_string() const;
  friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.perm == b.perm; }
};

/// All six elements in lexicographic order of their permutation arrays.
const std::array<WeylElement, 6>& weyl_group();

/// The three even elements: identity, (0 1 2), (0 2 1). Each left coset of
/// the compact Weyl group {1, s12} contains exactly one of them, so they
/// index S3/S2 with the identity as base point.
const std::array<WeylElement, 3>& even_weyl_elements();

/// Compact reflection s_{alpha12}.
WeylElement compact_reflection();

enum class WeightClass {
  not_in_F,
  F_singular,
  holomorphic,
  antiholomorphic,
  neither_nor,
  outside_F0
};

std::string to_string(WeightClass c);

WeightClass classify_weight(const Weight& lambda);

/// Same tests on an arbitrary real functional; non-integral pairings give not_in_F.
WeightClass classify_functional(const std::array<double, 3>& lambda);

std::vector<std::pair<WeylElement, Weight>> weyl_orbit(const Weight& lambda,
                                                        bool even_only = false);

/// The positive system here is {alpha12, alpha13, alpha23} with rho = (1,0,-1).
/// `alpha32` selects rho = alpha32 = (0,-1,1). It does not give the Weyl
/// character.
enum class RhoConvention { standard, alpha32 };

Weight rho(RhoConvention convention = RhoConvention::standard);

/// z^mu = prod z_i^{mu_i}.
Complex torus_power(const TorusPoint& z, const Weight& mu);

/// Smallest pairwise |z_i - z_j|.
double min_eigenvalue_gap(const TorusPoint& z);

/// Sum_w sign(w) z^{w(lambda + rho)} / Sum_w sign(w) z^{w rho}.
/// Requires lambda dominant and z on the unit torus (|z_i| = 1, z1 z2 z3 = 1).
/// Throws std::domain_error on coincident eigenvalues; below the near-singular
/// gap the value comes from the tableau sum instead of the quotient.
Complex weyl_character_quotient(const Weight& lambda, const TorusPoint& z,
                                RhoConvention convention = RhoConvention::standard);

/// Schur polynomial s_lambda(x) as a sum over semistandard Young tableaux of
/// shape (m1, m2, m3) with entries in {1,2,3}. Requires m1 >= m2 >= m3 >= 0 in
/// the raw coordinates.
Complex schur_oracle(const Weight& lambda, const TorusPoint& x);

/// Number of semistandard tableaux of the shape (dimension of the representation).
std::int64_t count_tableaux(const Weight& lambda);

}  // namespace sl3
