#include "sl3/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <stdexcept>

#include "parallel.hpp"
#include "sl3/coadjoint.hpp"
#include "sl3/endoscopy.hpp"
#include "sl3/orbital.hpp"
#include "sl3/roots.hpp"
#include "sl3/testfn.hpp"
#include "sl3/trace_finite.hpp"

namespace sl3::acceptance {

namespace {

using Clock = std::chrono::steady_clock;

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

CriterionResult start(int id, const char* name) {
  CriterionResult r;
  r.id = id;
  r.name = name;
  return r;
}

Mat3 random_traceless(std::mt19937_64& rng, double scale) {
  std::uniform_real_distribution<double> d(-scale, scale);
  Mat3 x;
  for (auto& e : x.v) e = d(rng);
  const double tr = x.trace() / 3.0;
  for (int i = 0; i < 3; ++i) x(i, i) -= tr;
  return x;
}

// -- 1 ---------------------------------------------------------------------

struct EllipticCase {
  EllipticElement gamma;
  TestFunction f;
};

std::vector<EllipticCase> elliptic_cases(std::uint64_t seed, int n_gamma, int n_bumps) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<EllipticCase> out;
  for (int i = 0; i < n_gamma; ++i) {
    double a1, a2, a3;
    do {
      a1 = 0.3 + 2.7 * unit(rng);
      a2 = 0.3 + 2.7 * unit(rng);
      a3 = 1.0 / (a1 * a2);
    } while (a3 < 0.3 || a3 > 3.0 ||
             std::min({std::abs(a1 - a2), std::abs(a1 - a3), std::abs(a2 - a3)}) < 0.1);
    const EllipticElement g = EllipticElement::make(a1, a2, a3);
    for (int j = 0; j < n_bumps; ++j) {
      const Mat3 u0 = unipotent(unit(rng) - 0.5, unit(rng) - 0.5, unit(rng) - 0.5);
      const Mat3 tilt = group_exp(AlgebraElement(random_traceless(rng, 0.05))).matrix();
      const Mat3 center = u0.inverse() * g.matrix() * u0 * tilt;
      const double radius = 0.3 + 0.7 * unit(rng);
      out.push_back({g, make_bump(GroupElement(center), radius, {1.0, unit(rng) - 0.5})});
    }
  }
  return out;
}

CriterionResult elliptic(const Options& o) {
  CriterionResult r = start(1, "elliptic orbital integral reduction");
  const auto cases = elliptic_cases(o.seed, 20, 5);
  QuadratureSpec spec;
  spec.rel_tol = kGates.elliptic_quadrature_rel;
  spec.abs_tol = 1e-13;
  std::vector<double> err(cases.size()), value(cases.size());
  std::vector<char> ok(cases.size());
  const auto t0 = Clock::now();
  detail::parallel_for(cases.size(), [&](std::size_t i) {
    const auto n = orbital_integral_elliptic_numeric(cases[i].f, cases[i].gamma, spec);
    const auto c = orbital_integral_elliptic_closed(cases[i].f, cases[i].gamma, spec);
    err[i] = std::abs(n.value - c.value);
    value[i] = c.value;
    ok[i] = n.converged && c.converged &&
            err[i] <= std::max(kGates.elliptic_rel * std::abs(c.value), kGates.elliptic_abs);
  });
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  double worst_rel = 0.0, smallest = 1e300;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    worst_rel = std::max(worst_rel, err[i] / std::max(std::abs(value[i]), 1e-300));
    smallest = std::min(smallest, std::abs(value[i]));
  }
  const bool all_ok = std::all_of(ok.begin(), ok.end(), [](char c) { return c != 0; });
  r.passed = all_ok && secs < kGates.elliptic_seconds;
  r.detail = std::to_string(cases.size()) + " pairs, worst rel diff " + fmt("%.2e", worst_rel) + ", integration " +
             fmt("%.1f", secs) + " s";
  r.metrics = {{"pairs", double(cases.size())}, {"worst_relative_difference", worst_rel},
               {"smallest_value", smallest}, {"integration_seconds", secs}};
  return r;
}

// -- 2 ---------------------------------------------------------------------

CriterionResult coadjoint_invariance(const Options& o) {
  using namespace coadjoint;
  CriterionResult r = start(2, "coadjoint orbit invariance");
  std::mt19937_64 rng(o.seed + 2);
  std::uniform_real_distribution<double> d(-2.0, 2.0), small(-1.0, 1.0);
  int failures = 0, flagged = 0;
  double worst_xy = 0.0, worst_alpha = 0.0;
  for (int i = 0; i < 1000; ++i) {
    BorelFunctional F{d(rng), d(rng), d(rng), d(rng)};
    switch (i % 5) {
      case 1: F.z = 0.0; F.y = std::copysign(F.y, F.x); break;   // cylinder
      case 2: F.z = 0.0; F.y = -std::copysign(F.y, F.x); break;  // xy < 0
      case 3: F.z = 0.0; (i % 2 ? F.x : F.y) = 0.0; break;       // half-plane
      case 4: F.z = F.x = F.y = 0.0; break;                      // t-axis
      default: break;
    }
    const GroupElement b = borel_element(small(rng), small(rng), small(rng), small(rng));
    const BorelFunctional G = coadjoint_act(b, F);
    const double scale = std::max({1.0, std::abs(G.x), std::abs(G.y), std::abs(G.t)});
    const OrbitClass before = classify_orbit(F), after = classify_orbit(G, kGates.z_sign_abs * scale);
    if (before.outside_lemma) ++flagged;
    bool ok = same_orbit_family(before, after, kGates.cylinder_rel) && before.outside_lemma == after.outside_lemma;
    if (before.kind == OrbitClass::Kind::cylinder)
      worst_alpha = std::max(worst_alpha, std::abs(after.alpha - before.alpha) / std::abs(before.alpha));
    if (F.z == 0.0)
      ok = ok && std::abs(G.z) <= kGates.z_sign_abs * scale;
    else
      ok = ok && (G.z > 0) == (F.z > 0);
    if (F.z == 0.0) {
      const double rel = std::abs(G.x * G.y - F.x * F.y) / std::max(1.0, std::abs(F.x * F.y));
      worst_xy = std::max(worst_xy, rel);
      ok = ok && rel <= kGates.xy_slice_rel;
    }
    if (!ok) ++failures;
  }
  r.passed = failures == 0;
  r.detail = "1000 pairs, " + std::to_string(failures) + " mismatches, " + std::to_string(flagged) +
             " outside-lemma points, worst cylinder drift " + fmt("%.1e", worst_alpha);
  r.metrics = {{"mismatches", double(failures)}, {"outside_lemma", double(flagged)},
               {"worst_cylinder_relative_drift", worst_alpha}, {"worst_xy_relative_drift", worst_xy}};
  return r;
}

// -- 3 ---------------------------------------------------------------------

CriterionResult polarization(const Options&) {
  using namespace coadjoint;
  using C = std::complex<double>;
  CriterionResult r = start(3, "polarization table");
  const BorelFunctional plus{0, 0, 0, 1}, minus{0, 0, 0, -1};
  const C i(0.0, 1.0);
  const auto a = verify_polarization(1.0, i, plus);
  const auto b = verify_polarization(1.0, -i, minus);
  const auto c = verify_polarization(1.0, -i, plus);
  const auto d = verify_polarization(1.0, i, minus);
  const bool good = a.subalgebra && a.isotropic && a.positive && b.subalgebra && b.isotropic && b.positive;
  const bool bad = !c.positive && !d.positive && c.positivity_value == -2.0 && d.positivity_value == -2.0;
  r.passed = good && bad;
  r.detail = "(X+iY,+Z*) " + fmt("%g", a.positivity_value) + ", (X-iY,-Z*) " + fmt("%g", b.positivity_value) +
             ", mismatched " + fmt("%g", c.positivity_value) + " / " + fmt("%g", d.positivity_value);
  r.metrics = {{"plus_value", a.positivity_value}, {"minus_value", b.positivity_value},
               {"mismatch_plus_value", c.positivity_value}, {"mismatch_minus_value", d.positivity_value}};
  return r;
}

// -- 4 ---------------------------------------------------------------------

CriterionResult character_oracle(const Options& o) {
  CriterionResult r = start(4, "Weyl quotient vs tableau oracle");
  std::mt19937_64 rng(o.seed + 4);
  std::uniform_real_distribution<double> ang(-std::numbers::pi, std::numbers::pi);
  std::vector<TorusPoint> points;
  while (points.size() < 50) {
    const double t1 = ang(rng), t2 = ang(rng);
    const TorusPoint z{std::polar(1.0, t1), std::polar(1.0, t2), std::polar(1.0, -t1 - t2)};
    if (min_eigenvalue_gap(z) >= kGates.character_min_gap) points.push_back(z);
  }
  int weights = 0;
  double worst = 0.0;
  for (int m1 = 0; m1 <= 4; ++m1)
    for (int m2 = 0; m2 <= m1; ++m2)
      for (int m3 = 0; m3 <= m2; ++m3) {
        ++weights;
        const Weight l(m1, m2, m3);
        for (const auto& z : points) {
          const Complex q = weyl_character_quotient(l, z);
          const Complex s = schur_oracle(l, z);
          worst = std::max(worst, std::abs(q - s) / std::max(std::abs(s), 1e-300));
        }
      }
  r.passed = worst <= kGates.character_rel;
  r.detail = std::to_string(weights) + " weights x 50 points, worst rel " + fmt("%.2e", worst);
  r.metrics = {{"weights", double(weights)}, {"points", 50.0}, {"worst_relative_error", worst}};
  return r;
}

// -- 5 ---------------------------------------------------------------------

CriterionResult finite_trace(const Options& o) {
  CriterionResult r = start(5, "finite-model trace formula");
  const auto t0 = Clock::now();
  int checks = 0, failures = 0;
  for (const auto& name : finite_model_names()) {
    const FiniteGroupModel m = finite_model(name);
    m.check_axioms();
    std::vector<std::string> specs;
    if (m.order() <= 24)
      for (int i = 0; i < m.order(); ++i) specs.push_back("indicator:" + std::to_string(i));
    for (int s = 1; s <= 20; ++s) specs.push_back("random:" + std::to_string(o.seed + s));
    for (std::size_t k = 0; k < m.conjugacy_classes().size(); ++k) specs.push_back("class:" + std::to_string(k));
    for (const auto& [label, g] : m.named_elements()) specs.push_back("class:" + label);
    specs.push_back("identity");
    for (const auto& spec : specs) {
      const auto f = finite_function(m, spec);
      const std::int64_t k = regular_kernel_trace(m, f);
      const std::int64_t g = geometric_side(m, f);
      const std::int64_t g2 = geometric_side(m, f, o.seed + 99);
      const std::int64_t s = spectral_side(m, f);
      ++checks;
      if (k != g || g != s || g != g2) ++failures;
    }
  }
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  r.passed = failures == 0 && secs < kGates.trace_seconds;
  r.detail = std::to_string(checks) + " functions on 4 models, " + std::to_string(failures) + " nonzero differences, " +
             fmt("%.2f", secs) + " s";
  r.metrics = {{"functions", double(checks)}, {"failures", double(failures)}, {"seconds", secs}};
  return r;
}

// -- 6 ---------------------------------------------------------------------

CriterionResult inversions(const Options&) {
  CriterionResult r = start(6, "kappa-Fourier and Poisson inversion");
  double worst = 0.0;
  const auto chars = all_kappa_characters();
  for (int b = 0; b < 4; ++b) {
    std::array<double, 4> e{};
    e[b] = 1.0;
    const auto back = poisson_inversion(shelstad_forward(e));
    std::array<double, 4> sums{};
    for (std::size_t k = 0; k < 4; ++k)
      for (int g = 0; g < 4; ++g) sums[k] += chars[k](g) * e[g];
    const auto phi = kappa_fourier_inversion(sums);
    for (int i = 0; i < 4; ++i) worst = std::max({worst, std::abs(back[i] - e[i]), std::abs(phi[i] - e[i])});
  }
  for (int b = 0; b < 3; ++b) {
    CosetValues v{};
    v[b] = 1.0;
    std::array<double, 4> sums{};
    for (std::size_t k = 0; k < 4; ++k) sums[k] = kappa_orbital_sum(v, chars[k]);
    const auto phi = kappa_fourier_inversion(sums);
    for (int i = 0; i < 3; ++i) worst = std::max(worst, std::abs(phi[i] - v[i]));
    worst = std::max(worst, std::abs(phi[3]));
  }
  r.passed = worst <= kGates.inversion_abs;
  r.detail = "basis round trips, worst deviation " + fmt("%.1e", worst);
  r.metrics = {{"worst_deviation", worst}};
  return r;
}

// -- 7 ---------------------------------------------------------------------

CriterionResult singular(const Options&) {
  CriterionResult r = start(7, "SO(2) singular expansion");
  const KAveragedFunction F = k_average(make_bump(GroupElement(), 2.0, {1.0, 0.3}), 12);
  QuadratureSpec spec;
  spec.rel_tol = 1e-9;
  spec.abs_tol = 1e-13;
  const double A_direct = unipotent_integral(F, spec).value;
  const SingularExpansion coarse = singular_expansion(F, geometric_grid(0.3, 1e-3, 12), spec);
  const SingularExpansion fine = singular_expansion(F, geometric_grid(0.3, 1e-3, 23), spec);
  const double match = std::abs(coarse.A - A_direct) / std::abs(A_direct);
  const double refine = std::abs(fine.A - coarse.A) / std::abs(coarse.A);
  const double curvature_ratio = fine.G_log_curvature / std::abs(fine.A);
  r.passed = coarse.converged && fine.converged && !coarse.ill_conditioned && match <= kGates.unipotent_match_rel &&
             refine <= kGates.refinement_rel && curvature_ratio <= kGates.g_curvature_over_A;
  r.detail = "A fit " + fmt("%.6g", coarse.A) + " vs unipotent " + fmt("%.6g", A_direct) + " (" +
             fmt("%.2e", match) + " rel), refined " + fmt("%.2e", refine) + ", G curvature/A " +
             fmt("%.3g", curvature_ratio);
  r.metrics = {{"A_fit", coarse.A},
               {"A_unipotent", A_direct},
               {"A_relative_difference", match},
               {"A_refined", fine.A},
               {"refinement_relative_change", refine},
               {"B_fit", coarse.B},
               {"C_fit", coarse.C},
               {"condition_number", coarse.condition_number},
               {"G_log_curvature", fine.G_log_curvature}};
  return r;
}

// -- 8 ---------------------------------------------------------------------

bool same_scan(const ConventionScan& a, const ConventionScan& b) {
  if (a.best != b.best || a.rows.size() != b.rows.size()) return false;
  for (std::size_t i = 0; i < a.rows.size(); ++i)
    if (!(a.rows[i].convention == b.rows[i].convention) || a.rows[i].residuals != b.rows[i].residuals) return false;
  return true;
}

CriterionResult transfer_scan(const Options&) {
  CriterionResult r = start(8, "transfer identity convention scan");
  std::vector<double> grid;
  for (int i = 0; i < 10; ++i) grid.push_back(0.1 + (std::numbers::pi - 0.2) * (i + 0.5) / 10.0);
  const std::size_t expected = 2 * xi_candidates().size() * 2;

  bool ok = true;
  double worst_best = 0.0;
  for (int n : {1, 2, 3, 5}) {
    const ConventionScan a = convention_search_sl2(n, grid);
    const ConventionScan b = convention_search_sl2(n, grid);
    ok = ok && a.rows.size() == expected && same_scan(a, b) && a.zeroed;
    for (const auto& row : a.rows) ok = ok && row.residuals.size() == grid.size();
    worst_best = std::max(worst_best, a.rows[a.best].max_residual);
  }
  const Weight mu(2, 1, 0);
  const ConventionScan s = convention_search(mu, grid);
  const ConventionScan s2 = convention_search(mu, grid);
  ok = ok && s.rows.size() == expected && same_scan(s, s2);
  for (const auto& row : s.rows)
    r.table.push_back(row.convention.to_string() + " max_residual=" + fmt("%.6e", row.max_residual));
  r.passed = ok && worst_best < kGates.sl2_identity_residual;
  r.detail = std::to_string(expected) + " conventions, SL(2) best residual " + fmt("%.1e", worst_best) +
             ", SL(3) best " + s.rows[s.best].convention.to_string() + " residual " +
             fmt("%.3e", s.rows[s.best].max_residual) + (s.zeroed ? "" : " (no convention zeroes it)");
  r.metrics = {{"conventions", double(expected)},
               {"sl2_best_residual", worst_best},
               {"sl3_best_residual", s.rows[s.best].max_residual},
               {"sl3_zeroed", s.zeroed ? 1.0 : 0.0}};
  return r;
}

}  // namespace

CriterionResult run_criterion(int id, const Options& options) {
  const auto t0 = Clock::now();
  CriterionResult r;
  switch (id) {
    case 1: r = elliptic(options); break;
    case 2: r = coadjoint_invariance(options); break;
    case 3: r = polarization(options); break;
    case 4: r = character_oracle(options); break;
    case 5: r = finite_trace(options); break;
    case 6: r = inversions(options); break;
    case 7: r = singular(options); break;
    case 8: r = transfer_scan(options); break;
    default: throw std::invalid_argument("acceptance: criterion id must be 1..8");
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return r;
}

std::vector<CriterionResult> run_all(const Options& options) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= 8; ++id) out.push_back(run_criterion(id, options));
  return out;
}

std::string summary_line(const CriterionResult& r) {
  return std::string(r.passed ? "PASS" : "FAIL") + " [" + std::to_string(r.id) + "] " + r.name + ": " + r.detail +
         " (" + fmt("%.2f", r.seconds) + " s)";
}

}  // namespace sl3::acceptance
