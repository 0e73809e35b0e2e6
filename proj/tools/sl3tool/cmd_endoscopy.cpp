#include <algorithm>
#include <chrono>
#include <cmath>
#include <iostream>
#include <memory>
#include <numbers>

#include "commands.hpp"
#include "sl3/acceptance.hpp"
#include "sl3/endoscopy.hpp"
#include "sl3/trace_finite.hpp"

namespace sl3tool {

namespace {

int parse_xi(const std::string& text) {
  const auto& c = sl3::xi_candidates();
  for (std::size_t i = 0; i < c.size(); ++i)
    if (text == c[i].name) return static_cast<int>(i);
  std::string known;
  for (const auto& x : c) known += std::string(known.empty() ? "" : ", ") + x.name;
  throw std::invalid_argument("unknown xi '" + text + "' (expected one of " + known + ")");
}

sl3::TransferNormalization parse_norm(const std::string& text) {
  if (text == "delta") return sl3::TransferNormalization::delta_times_orbital;
  if (text == "delta-inverse") return sl3::TransferNormalization::delta_inverse_times_orbital;
  throw std::invalid_argument("--norm must be delta or delta-inverse");
}

struct ConventionOpts {
  int sign = 1;
  std::string xi = "0";
  std::string norm = "delta";

  void add_to(CLI::App* sub) {
    sub->add_option("--sign", sign)->check(CLI::IsMember({-1, 1}));
    sub->add_option("--xi", xi, "0, rho-rho_H, w1, w2, -w1, -w2");
    sub->add_option("--norm", norm)->check(CLI::IsMember({"delta", "delta-inverse"}));
  }
  sl3::TransferConvention get() const { return {sign, parse_xi(xi), parse_norm(norm)}; }
};

std::vector<double> theta_grid(int n, double lo, double hi) {
  std::vector<double> g;
  for (int i = 0; i < n; ++i) g.push_back(lo + (hi - lo) * (i + 0.5) / n);
  return g;
}

json scan_json(const sl3::ConventionScan& s) {
  json rows = json::array();
  for (const auto& row : s.rows)
    rows.push_back({{"convention", row.convention.to_string()},
                    {"max_residual", row.max_residual},
                    {"residuals", row.residuals}});
  return rows;
}

json array4(const std::array<double, 4>& a) { return json::array({a[0], a[1], a[2], a[3]}); }

}  // namespace

void add_endoscopy_commands(CLI::App& app, Context& ctx) {
  auto* transfer = app.add_subcommand("transfer", "transfer factors and the character identity");
  transfer->require_subcommand(1);

  {
    struct Opts {
      double theta = 1.0;
      int u = 1;
      ConventionOpts conv;
    };
    auto o = std::make_shared<Opts>();
    auto* sub = transfer->add_subcommand("factor", "transfer factor at gamma = embed(rotation(theta), u)");
    sub->add_option("--theta", o->theta)->required();
    sub->add_option("--u", o->u)->check(CLI::IsMember({-1, 1}));
    o->conv.add_to(sub);
    sub->callback([o, &ctx] {
      const auto conv = o->conv.get();
      const sl3::TorusPoint g = sl3::matched_torus_point(o->theta, o->u);
      const sl3::Complex zeta = std::polar(1.0, o->theta);
      const sl3::Complex t = sl3::transfer_factor(g, zeta, conv);
      Record r;
      r.command = "transfer factor";
      r.inputs = {{"theta", o->theta}, {"u", o->u}};
      r.outputs["gamma"] = exact(json::array({complex_value(g[0]), complex_value(g[1]), complex_value(g[2])}));
      r.outputs["gamma_H"] = exact(json::array({complex_value(zeta), complex_value(1.0 / zeta)}));
      r.outputs["embedded_matrix"] =
          exact(matrix_value(sl3::embed_sl2({std::cos(o->theta), -std::sin(o->theta), std::sin(o->theta),
                                             std::cos(o->theta)},
                                            o->u)
                                 .matrix()));
      r.outputs["transfer_factor"] = exact(complex_value(t));
      r.outputs["modulus"] = exact(std::abs(t));
      r.conventions = convention_snapshot(conv);
      ctx.emit(std::move(r));
    });
  }

  {
    struct Opts {
      bool scan = false;
      std::string weight = "2,1,0";
      int sl2 = 0;
      int points = 10;
      double theta = 1.0;
      double lo = 0.1;
      double hi = std::numbers::pi - 0.1;
      ConventionOpts conv;
    };
    auto o = std::make_shared<Opts>();
    auto* sub = transfer->add_subcommand("identity", "kappa-weighted character identity");
    sub->add_flag("--scan", o->scan, "evaluate every convention on a theta grid");
    sub->add_option("--weight", o->weight, "regular mu = m1,m2,m3");
    sub->add_option("--sl2", o->sl2, "SL(2)-internal identity of weight n instead")->check(CLI::PositiveNumber);
    sub->add_option("--points", o->points, "theta grid size")->check(CLI::Range(5, 1000));
    sub->add_option("--theta-min", o->lo);
    sub->add_option("--theta-max", o->hi);
    sub->add_option("--theta", o->theta, "single angle when not scanning");
    o->conv.add_to(sub);
    sub->callback([o, &ctx] {
      Record r;
      r.inputs = {{"weight", o->weight}, {"sl2", o->sl2}};
      const auto w = parse_int_list(o->weight, 3);
      const sl3::Weight mu(w[0], w[1], w[2]);
      if (!o->scan) {
        const auto conv = o->conv.get();
        r.command = "transfer identity";
        r.inputs["theta"] = o->theta;
        const auto res = o->sl2 > 0 ? sl3::sl2_internal_residual(o->sl2, o->theta, conv)
                                    : sl3::character_identity_residual(mu, o->theta, conv);
        r.outputs["lhs"] = exact(complex_value(res.lhs));
        r.outputs["rhs"] = exact(complex_value(res.rhs));
        r.outputs["residual"] = exact(res.residual);
        json terms = json::array();
        for (const auto& t : res.terms)
          terms.push_back({{"w", t.w.to_string()}, {"kappa", t.kappa}, {"lhs", complex_value(t.lhs)},
                           {"rhs", complex_value(t.rhs)}});
        if (!terms.empty()) r.outputs["terms"] = exact(terms);
        r.conventions = convention_snapshot(conv);
        ctx.emit(std::move(r));
        return;
      }
      const auto grid = theta_grid(o->points, o->lo, o->hi);
      const auto s = o->sl2 > 0 ? sl3::convention_search_sl2(o->sl2, grid) : sl3::convention_search(mu, grid);
      r.command = "transfer identity --scan";
      r.inputs["theta_grid"] = grid;
      r.outputs["residual_table"] = exact(scan_json(s));
      r.outputs["best"] = exact(s.rows[s.best].convention.to_string());
      r.outputs["best_max_residual"] = exact(s.rows[s.best].max_residual);
      r.outputs["zeroed"] = exact(s.zeroed);
      r.outputs["threshold"] = exact(s.threshold);
      r.columns = {"convention", "max_residual"};
      for (const auto& row : s.rows) r.rows.push_back({row.convention.to_string(), row.max_residual});
      r.plot_x = "theta";
      r.plot_y = "best_residual";
      r.plot_xs = grid;
      r.plot_ys = s.rows[s.best].residuals;
      r.conventions = convention_snapshot(s.rows[s.best].convention);
      r.tolerances = {{"zero_threshold", s.threshold}};
      ctx.emit(std::move(r));
    });
  }

  {
    struct Opts {
      std::string traces, sums;
    };
    auto o = std::make_shared<Opts>();
    auto* poisson = app.add_subcommand("poisson", "Shelstad pairing on (Z2)^2");
    poisson->require_subcommand(1);
    auto* sub = poisson->add_subcommand("invert", "forward map then inversion");
    auto* t = sub->add_option("--traces", o->traces, "tr pi(f) for the four packet members");
    auto* s = sub->add_option("--sums", o->sums, "Sigma_s for the four s; inverted directly");
    t->excludes(s);
    sub->callback([o, &ctx] {
      Record r;
      r.command = "poisson invert";
      const auto M = sl3::shelstad_pairing_matrix();
      json pairing = json::array();
      for (const auto& row : M) pairing.push_back(json::array({row[0], row[1], row[2], row[3]}));
      r.outputs["pairing_matrix"] = exact(pairing);
      if (!o->sums.empty()) {
        const auto v = parse_list(o->sums, 4);
        r.inputs["sums"] = v;
        r.outputs["traces"] = exact(array4(sl3::poisson_inversion({v[0], v[1], v[2], v[3]})));
      } else {
        if (o->traces.empty()) throw std::invalid_argument("poisson invert: give --traces or --sums");
        const auto v = parse_list(o->traces, 4);
        r.inputs["traces"] = v;
        const auto fwd = sl3::shelstad_forward({v[0], v[1], v[2], v[3]});
        const auto back = sl3::poisson_inversion(fwd);
        double dev = 0.0;
        for (int i = 0; i < 4; ++i) dev = std::max(dev, std::abs(back[i] - v[i]));
        r.outputs["sums"] = exact(array4(fwd));
        r.outputs["recovered_traces"] = exact(array4(back));
        r.outputs["round_trip_deviation"] = exact(dev);
      }
      ctx.emit(std::move(r));
    });
  }

  {
    struct Opts {
      std::string model, function;
      std::uint64_t representative_seed = 0;
    };
    auto o = std::make_shared<Opts>();
    auto* trace = app.add_subcommand("trace", "trace formula on finite models");
    trace->require_subcommand(1);
    auto* sub = trace->add_subcommand("finite", "kernel, geometric and spectral sides");
    sub->add_option("--model", o->model)->required()->check(CLI::IsMember(sl3::finite_model_names()));
    sub->add_option("--function", o->function, "identity, indicator:i, constant:c, class:k|name, random:seed")
        ->required();
    sub->add_option("--representative-seed", o->representative_seed, "shuffle class and coset representatives");
    sub->callback([o, &ctx] {
      const auto m = sl3::finite_model(o->model);
      m.check_axioms();
      const auto f = sl3::finite_function(m, o->function);
      std::vector<sl3::GeometricTerm> terms;
      const std::int64_t kernel = sl3::regular_kernel_trace(m, f);
      const std::int64_t geo = sl3::geometric_side(m, f, o->representative_seed, &terms);
      const std::int64_t spec = sl3::spectral_side(m, f);
      Record r;
      r.command = "trace finite";
      r.inputs = {{"model", o->model}, {"function", o->function}, {"representative_seed", o->representative_seed}};
      r.outputs["group_order"] = exact(m.order());
      r.outputs["subgroup_order"] = exact(m.subgroup().size());
      r.outputs["kernel_trace"] = exact(kernel);
      r.outputs["geometric_side"] = exact(geo);
      r.outputs["spectral_side"] = exact(spec);
      r.outputs["difference"] = exact(std::max({kernel, geo, spec}) - std::min({kernel, geo, spec}));
      r.columns = {"representative", "label", "class_size", "gamma_centralizer", "group_centralizer", "volume"};
      for (const auto& t : terms)
        r.rows.push_back({t.representative, m.label(t.representative), t.class_size, t.gamma_centralizer,
                          t.group_centralizer, t.volume});
      r.tolerances = {{"arithmetic", "exact int64"}};
      ctx.emit(std::move(r));
    });
  }
}

void add_suite_command(CLI::App& app, Context& ctx) {
  struct Opts {
    std::vector<int> criteria;
    std::uint64_t seed = sl3::acceptance::Options{}.seed;
  };
  auto o = std::make_shared<Opts>();
  auto* sub = app.add_subcommand("suite", "run the acceptance battery");
  sub->add_option("--criteria", o->criteria, "subset of 1..8")->delimiter(',')->check(CLI::Range(1, 8));
  sub->add_option("--seed", o->seed);
  sub->callback([o, &ctx] {
    std::vector<int> ids = o->criteria;
    if (ids.empty()) ids = {1, 2, 3, 4, 5, 6, 7, 8};
    sl3::acceptance::Options opt;
    opt.seed = o->seed;
    const auto& gates = sl3::acceptance::kGates;
    const json tolerances = {{"elliptic_rel", gates.elliptic_rel},
                             {"elliptic_abs", gates.elliptic_abs},
                             {"elliptic_quadrature_rel", gates.elliptic_quadrature_rel},
                             {"elliptic_seconds", gates.elliptic_seconds},
                             {"cylinder_rel", gates.cylinder_rel},
                             {"z_sign_abs", gates.z_sign_abs},
                             {"xy_slice_rel", gates.xy_slice_rel},
                             {"character_rel", gates.character_rel},
                             {"character_min_gap", gates.character_min_gap},
                             {"trace_seconds", gates.trace_seconds},
                             {"inversion_abs", gates.inversion_abs},
                             {"unipotent_match_rel", gates.unipotent_match_rel},
                             {"refinement_rel", gates.refinement_rel},
                             {"g_curvature_over_A", gates.g_curvature_over_A},
                             {"sl2_identity_residual", gates.sl2_identity_residual}};
    bool all = true;
    for (int id : ids) {
      const auto res = sl3::acceptance::run_criterion(id, opt);
      all = all && res.passed;
      std::cerr << sl3::acceptance::summary_line(res) << "\n";
      Record r;
      r.command = "suite";
      r.inputs = {{"criterion", id}, {"seed", opt.seed}};
      r.outputs["name"] = exact(res.name);
      r.outputs["passed"] = exact(res.passed);
      const bool timed = !ctx.global.no_timestamp;
      if (timed) r.outputs["detail"] = exact(res.detail);
      for (const auto& [k, v] : res.metrics)
        if (timed || k.find("seconds") == std::string::npos) r.outputs[k] = exact(v);
      if (!res.table.empty()) r.outputs["table"] = exact(res.table);
      if (timed) r.outputs["seconds"] = exact(res.seconds);
      r.tolerances = tolerances;
      const bool csv = ctx.global.csv;
      ctx.global.csv = false;
      ctx.emit(std::move(r));
      ctx.global.csv = csv;
    }
    if (!all && ctx.status == 0) ctx.status = 1;
  });
}

}  // namespace sl3tool
