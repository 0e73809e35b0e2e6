#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace sl3::acceptance {

// Pinned gates. Each criterion reads its thresholds from here.
struct Gates {
  double elliptic_rel = 1e-6;
  double elliptic_abs = 1e-9;
  double elliptic_quadrature_rel = 1e-8;
  double elliptic_seconds = 120.0;
  double cylinder_rel = 1e-9;
  double z_sign_abs = 1e-12;
  double xy_slice_rel = 1e-10;
  double character_rel = 1e-10;
  double character_min_gap = 1e-3;
  double trace_seconds = 10.0;
  double inversion_abs = 1e-14;
  double unipotent_match_rel = 0.02;
  double refinement_rel = 0.02;
  double g_curvature_over_A = 1.0;  // max |d^2 G / d(ln lambda)^2| <= this * |A|
  double sl2_identity_residual = 1e-10;
  double suite_seconds = 300.0;
};

inline constexpr Gates kGates{};

struct Options {
  std::uint64_t seed = 20261015;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
  std::vector<std::pair<std::string, double>> metrics;
  std::vector<std::string> table;  // extra rows, e.g. the SL(3) residual table
};

/// Criteria 1..8. Throws std::invalid_argument for other ids.
CriterionResult run_criterion(int id, const Options& options = {});

std::vector<CriterionResult> run_all(const Options& options = {});

/// "PASS [n] name: detail" / "FAIL [n] ...".
std::string summary_line(const CriterionResult& r);

}  // namespace sl3::acceptance
