#include <algorithm>
#include <cmath>
#include <memory>
#include <optional>

#include "commands.hpp"
#include "sl3/orbital.hpp"
#include "sl3/testfn.hpp"

namespace sl3tool {

namespace {

json result_json(const sl3::QuadratureResult& q) {
  return {{"value", q.value}, {"error_estimate", q.error_estimate}, {"converged", q.converged},
          {"evaluations", q.evaluations}};
}

json bump_json(const sl3::TestFunction& f) {
  return {{"center", matrix_value(f.center)}, {"radius", f.radius}, {"profile", f.profile}};
}

}  // namespace

void add_orbital_commands(CLI::App& app, Context& ctx) {
  auto* orbital = app.add_subcommand("orbital", "orbital integrals");
  orbital->require_subcommand(1);

  {
    struct Opts {
      std::string eigenvalues;
      std::string offset = "0.3,-0.2,0.1";
      std::string profile = "1";
      double radius = 0.8;
      std::string method = "both";
    };
    auto o = std::make_shared<Opts>();
    auto* sub = orbital->add_subcommand("elliptic", "O(f) at gamma = diag(a1, a2, a3): numeric and closed form");
    sub->add_option("--eigenvalues", o->eigenvalues, "a1,a2 or a1,a2,a3 with a1 a2 a3 = 1")->required();
    sub->add_option("--offset", o->offset, "bump centred at n^-1 gamma n, n = n(x,y,z)");
    sub->add_option("--radius", o->radius)->check(CLI::PositiveNumber);
    sub->add_option("--profile", o->profile, "polynomial coefficients in r^2");
    sub->add_option("--method", o->method)->check(CLI::IsMember({"both", "numeric", "closed"}));
    sub->callback([o, &ctx] {
      auto a = parse_list(o->eigenvalues);
      if (a.size() == 2) a.push_back(1.0 / (a[0] * a[1]));
      if (a.size() != 3) throw std::invalid_argument("--eigenvalues needs 2 or 3 values");
      const auto g = sl3::EllipticElement::make(a[0], a[1], a[2]);
      const auto off = parse_list(o->offset, 3);
      const sl3::Mat3 n = sl3::unipotent(off[0], off[1], off[2]);
      const auto f = sl3::make_bump(sl3::GroupElement(n.inverse() * g.matrix() * n), o->radius, parse_list(o->profile));
      sl3::QuadratureSpec base;
      base.rel_tol = 1e-8;
      const auto spec = resolve_spec(ctx.global, base);

      Record r;
      r.command = "orbital elliptic";
      r.inputs = {{"eigenvalues", a}, {"offset", off}, {"bump", bump_json(f)}, {"method", o->method}};
      r.outputs["discriminant"] = exact(g.discriminant());
      std::optional<sl3::QuadratureResult> num, closed;
      if (o->method != "closed") {
        num = sl3::orbital_integral_elliptic_numeric(f, g, spec);
        r.outputs["numeric"] = result_json(*num);
        r.converged = r.converged && num->converged;
      }
      if (o->method != "numeric") {
        closed = sl3::orbital_integral_elliptic_closed(f, g, spec);
        r.outputs["closed_form"] = result_json(*closed);
        r.converged = r.converged && closed->converged;
        for (auto norm : {sl3::TransferNormalization::delta_times_orbital,
                          sl3::TransferNormalization::delta_inverse_times_orbital}) {
          const double scale = norm == sl3::TransferNormalization::delta_times_orbital
                                   ? g.discriminant()
                                   : 1.0 / g.discriminant();
          r.outputs[std::string("transfer_") + sl3::to_string(norm)] =
              estimated(scale * closed->value, std::abs(scale) * closed->error_estimate);
        }
      }
      if (num && closed)
        r.outputs["difference"] = estimated(num->value - closed->value, num->error_estimate + closed->error_estimate);
      r.tolerances = tolerance_snapshot(spec);
      ctx.emit(std::move(r));
    });
  }

  {
    struct Opts {
      std::vector<double> theta;
      double radius = 2.0;
      std::string profile = "1,0.3";
      int grid_order = 12;
      bool prereduction = false;
      bool expansion = false;
      double lambda_max = 0.3;
      double lambda_min = 1e-3;
      int points = 12;
    };
    auto o = std::make_shared<Opts>();
    auto* sub = orbital->add_subcommand("so2", "SO(2) orbital integrals of a K-averaged bump centred at the identity");
    sub->add_option("--theta", o->theta, "rotation angles (theta-sweep)")->delimiter(',');
    sub->add_option("--radius", o->radius)->check(CLI::PositiveNumber);
    sub->add_option("--profile", o->profile);
    sub->add_option("--grid-order", o->grid_order, "SO(3) quadrature order for the K-average")->check(CLI::Range(4, 64));
    sub->add_flag("--prereduction", o->prereduction, "also evaluate the 2-D integral before reduction");
    sub->add_flag("--expansion", o->expansion, "lambda-sweep and fit A/|lambda| + B ln(1/|lambda|) + C");
    sub->add_option("--lambda-max", o->lambda_max);
    sub->add_option("--lambda-min", o->lambda_min);
    sub->add_option("--points", o->points)->check(CLI::Range(8, 200));
    sub->callback([o, &ctx] {
      if (o->theta.empty() && !o->expansion) throw std::invalid_argument("orbital so2: give --theta or --expansion");
      const auto F = sl3::k_average(sl3::make_bump(sl3::GroupElement(), o->radius, parse_list(o->profile)), o->grid_order);
      const auto spec = resolve_spec(ctx.global, sl3::QuadratureSpec{});
      const json inputs = {{"theta", o->theta},
                           {"bump", bump_json(F.base())},
                           {"grid_order", o->grid_order},
                           {"prereduction", o->prereduction}};

      if (!o->theta.empty()) {
        Record r;
        r.command = "orbital so2";
        r.inputs = inputs;
        r.columns = {"theta", "value", "error_estimate", "converged"};
        if (o->prereduction) r.columns.insert(r.columns.end(), {"prereduction", "prereduction_error"});
        r.plot_x = "theta";
        r.plot_y = "orbital_integral";
        for (double th : o->theta) {
          const sl3::RotationElement k(th);
          const auto q = sl3::orbital_integral_so2(F, k, spec);
          r.converged = r.converged && q.converged;
          std::vector<json> row{th, q.value, q.error_estimate, q.converged};
          if (o->prereduction) {
            const auto p = sl3::orbital_integral_so2_prereduction(F, k, spec);
            r.converged = r.converged && p.converged;
            row.push_back(p.value);
            row.push_back(p.error_estimate);
          }
          r.rows.push_back(std::move(row));
          r.plot_xs.push_back(th);
          r.plot_ys.push_back(q.value);
        }
        r.tolerances = tolerance_snapshot(spec);
        ctx.emit(std::move(r));
      }

      if (o->expansion) {
        const auto grid = sl3::geometric_grid(o->lambda_max, o->lambda_min, o->points);
        const auto e = sl3::singular_expansion(F, grid, spec);
        const auto u = sl3::unipotent_integral(F, spec);
        Record r;
        r.command = "orbital so2 --expansion";
        r.inputs = inputs;
        r.inputs["lambda_max"] = o->lambda_max;
        r.inputs["lambda_min"] = o->lambda_min;
        r.inputs["points"] = o->points;
        r.outputs["A"] = estimated(e.A, e.max_fit_residual);
        r.outputs["B"] = estimated(e.B, e.max_fit_residual);
        r.outputs["C"] = estimated(e.C, e.max_fit_residual);
        r.outputs["unipotent_integral"] = result_json(u);
        r.outputs["A_relative_difference"] = exact(std::abs(e.A - u.value) / std::abs(u.value));
        r.outputs["condition_number"] = exact(e.condition_number);
        r.outputs["ill_conditioned"] = exact(e.ill_conditioned);
        r.outputs["G_log_curvature"] = exact(e.G_log_curvature);
        r.converged = e.converged && u.converged;
        r.columns = {"lambda", "F_plus", "F_minus", "G", "H"};
        r.plot_x = "lambda";
        r.plot_y = "G";
        for (std::size_t i = 0; i < e.lambda.size(); ++i) {
          r.rows.push_back({e.lambda[i], e.F_plus[i], e.F_minus[i], e.G[i], e.H[i]});
          r.plot_xs.push_back(e.lambda[i]);
          r.plot_ys.push_back(e.G[i]);
        }
        r.tolerances = tolerance_snapshot(spec);
        ctx.emit(std::move(r));
      }
    });
  }

  {
    auto values = std::make_shared<std::string>();
    auto* sub = orbital->add_subcommand("kappa", "kappa-orbital and stable sums over the three cosets");
    sub->add_option("--values", *values, "orbital integrals on the cosets, basepoint first")->required();
    sub->callback([values, &ctx] {
      const auto v = parse_list(*values, 3);
      const sl3::CosetValues c{v[0], v[1], v[2]};
      Record r;
      r.command = "orbital kappa";
      r.inputs["values"] = v;
      std::array<double, 4> sums{};
      json by_kappa = json::array();
      for (const auto& k : sl3::all_kappa_characters()) {
        sums[k.index()] = sl3::kappa_orbital_sum(c, k);
        by_kappa.push_back({{"kappa", json::array({k.on_first, k.on_second})}, {"sum", sums[k.index()]}});
      }
      r.outputs["kappa_sums"] = exact(by_kappa);
      r.outputs["stable_sum"] = exact(sl3::stable_orbital_sum(c));
      const auto inv = sl3::kappa_fourier_inversion(sums);
      r.outputs["inversion"] = exact(json::array({inv[0], inv[1], inv[2], inv[3]}));
      double err = std::abs(inv[3]);
      for (int i = 0; i < 3; ++i) err = std::max(err, std::abs(inv[i] - v[i]));
      r.outputs["inversion_deviation"] = exact(err);
      ctx.emit(std::move(r));
    });
  }
}

}  // namespace sl3tool
