#pragma once

namespace sl3 {

// Every numerical threshold used by validation and classification code.
// Tests and the CLI read from here rather than hard-coding literals.
struct Tolerances {
  double group_det = 1e-9;          // |det g - 1| for GroupElement
  double algebra_trace = 1e-12;     // |tr x| for AlgebraElement (scaled by max(1, |x|))
  double orthogonality = 1e-10;     // k k^T = I in Iwasawa factors
  double recomposition = 1e-10;     // k a n == g
  double unimodular = 1e-9;         // |a1 a2 a3 - 1|
  double borel_pattern = 1e-9;      // lower entries / diagonal pattern of the Borel subgroup
  double regular_gap = 1e-6;        // minimal eigenvalue gap for "regular" constructors
  double near_singular_gap = 1e-6;  // below this, character quotients fall back to the Schur sum
  double singular_gap = 1e-14;      // at or below this, torus elements are rejected as singular
  double unit_modulus = 1e-9;       // |z_i| == 1 and prod z_i == 1 checks
  double exp_divergence_norm = 1e3; // group_exp refuses inputs above this Frobenius norm
  double ill_conditioned = 1e10;    // condition number that flags a least-squares fit
};

inline constexpr Tolerances kTolerances{};

}  // namespace sl3
