#include <algorithm>
#include <cmath>
#include <memory>
#include <random>

#include "commands.hpp"
#include "sl3/coadjoint.hpp"
#include "sl3/lie.hpp"
#include "sl3/roots.hpp"

namespace sl3tool {

namespace {

sl3::Mat3 parse_matrix(const std::string& text) {
  const auto v = parse_list(text, 9);
  sl3::Mat3 m;
  std::copy(v.begin(), v.end(), m.v.begin());
  return m;
}

double entry_gap(const sl3::Mat3& a, const sl3::Mat3& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < 9; ++i) d = std::max(d, std::abs(a.v[i] - b.v[i]));
  return d;
}

json functional_json(const sl3::coadjoint::BorelFunctional& F) { return json::array({F.t, F.x, F.y, F.z}); }

json class_json(const sl3::coadjoint::OrbitClass& c) {
  json j;
  j["class"] = exact(c.to_string());
  if (c.kind == sl3::coadjoint::OrbitClass::Kind::cylinder) j["alpha"] = exact(c.alpha);
  if (c.kind == sl3::coadjoint::OrbitClass::Kind::origin) j["t"] = exact(c.t);
  j["outside_lemma"] = exact(c.outside_lemma);
  return j;
}

sl3::Weight parse_weight(const std::string& text) {
  const auto w = parse_int_list(text, 3);
  return {w[0], w[1], w[2]};
}

}  // namespace

void add_structure_commands(CLI::App& app, Context& ctx) {
  {
    auto matrix = std::make_shared<std::string>();
    auto* sub = app.add_subcommand("decompose", "Iwasawa decomposition g = k a n");
    sub->add_option("--matrix", *matrix, "nine entries, row-major, det 1")->required();
    sub->callback([matrix, &ctx] {
      const sl3::GroupElement g(parse_matrix(*matrix));
      const auto f = sl3::iwasawa_decompose(g);
      const sl3::Mat3 kan = f.k.matrix() * f.a.matrix() * f.n.matrix();
      const double residual = entry_gap(kan, g.matrix());
      const sl3::Mat3 kkt = f.k.matrix() * f.k.matrix().transpose();
      Record r;
      r.command = "decompose";
      r.inputs["matrix"] = matrix_value(g.matrix());
      r.outputs["k"] = {{"value", matrix_value(f.k.matrix())}, {"error_estimate", entry_gap(kkt, sl3::Mat3::identity())}};
      r.outputs["a"] = {{"value", json::array({f.a(0, 0), f.a(1, 1), f.a(2, 2)})}, {"error_estimate", residual}};
      r.outputs["n"] = {{"value", matrix_value(f.n.matrix())}, {"error_estimate", residual}};
      r.outputs["recomposition_residual"] = exact(residual);
      r.tolerances = {{"orthogonality", sl3::kTolerances.orthogonality},
                      {"recomposition", sl3::kTolerances.recomposition},
                      {"group_det", sl3::kTolerances.group_det}};
      ctx.emit(std::move(r));
    });
  }

  auto* orbit = app.add_subcommand("orbit", "coadjoint orbits of the Borel subgroup");
  orbit->require_subcommand(1);
  {
    struct Opts {
      std::string point;
      double zero_tol = 0.0;
    };
    auto o = std::make_shared<Opts>();
    auto* sub = orbit->add_subcommand("classify", "orbit family of F = t T* + x X* + y Y* + z Z*");
    sub->add_option("--point", o->point, "t,x,y,z")->required();
    sub->add_option("--zero-tol", o->zero_tol, "threshold for treating a coordinate as zero");
    sub->callback([o, &ctx] {
      const auto p = parse_list(o->point, 4);
      const sl3::coadjoint::BorelFunctional F{p[0], p[1], p[2], p[3]};
      Record r;
      r.command = "orbit classify";
      r.inputs["point"] = functional_json(F);
      r.inputs["zero_tol"] = o->zero_tol;
      r.outputs = class_json(sl3::coadjoint::classify_orbit(F, o->zero_tol));
      r.tolerances = {{"zero_tol", o->zero_tol}};
      ctx.emit(std::move(r));
    });
  }
  {
    struct Opts {
      int count = 20;
      std::uint64_t seed = 1;
      double range = 2.0;
    };
    auto o = std::make_shared<Opts>();
    auto* sub = orbit->add_subcommand("sample", "random (F, b) pairs: classify F and Ad*(b)F");
    sub->add_option("--count", o->count)->check(CLI::Range(1, 1000000));
    sub->add_option("--seed", o->seed);
    sub->add_option("--range", o->range, "coordinates of F drawn from [-range, range]")->check(CLI::PositiveNumber);
    sub->callback([o, &ctx] {
      using namespace sl3::coadjoint;
      std::mt19937_64 rng(o->seed);
      std::uniform_real_distribution<double> d(-o->range, o->range), small(-1.0, 1.0);
      Record r;
      r.command = "orbit sample";
      r.inputs = {{"count", o->count}, {"seed", o->seed}, {"range", o->range}};
      r.columns = {"t", "x", "y", "z", "class", "image_t", "image_x", "image_y", "image_z", "image_class", "same_family"};
      int mismatches = 0;
      for (int i = 0; i < o->count; ++i) {
        BorelFunctional F{d(rng), d(rng), d(rng), d(rng)};
        if (i % 2 == 1) F.z = 0.0;
        const auto b = borel_element(small(rng), small(rng), small(rng), small(rng));
        const BorelFunctional G = coadjoint_act(b, F);
        const double scale = std::max({1.0, std::abs(G.t), std::abs(G.x), std::abs(G.y)});
        const OrbitClass a = classify_orbit(F), c = classify_orbit(G, 1e-12 * scale);
        const bool same = same_orbit_family(a, c, 1e-9);
        mismatches += same ? 0 : 1;
        r.rows.push_back({F.t, F.x, F.y, F.z, a.to_string(), G.t, G.x, G.y, G.z, c.to_string(), same});
      }
      r.outputs["mismatches"] = exact(mismatches);
      r.tolerances = {{"cylinder_rel", 1e-9}, {"image_zero_tol", 1e-12}};
      ctx.emit(std::move(r));
    });
  }

  {
    struct Opts {
      std::string a = "1,0", b = "0,1", functional = "0,0,0,1";
    };
    auto o = std::make_shared<Opts>();
    auto* sub = app.add_subcommand("polarization", "polarization conditions");
    sub->require_subcommand(1);
    auto* check = sub->add_subcommand("check", "l = C W + C Z with W = a X + b Y at F");
    check->add_option("--a", o->a, "re,im of the X coefficient");
    check->add_option("--b", o->b, "re,im of the Y coefficient");
    check->add_option("--functional", o->functional, "t,x,y,z");
    check->callback([o, &ctx] {
      const auto a = parse_list(o->a, 2), b = parse_list(o->b, 2), p = parse_list(o->functional, 4);
      const sl3::coadjoint::BorelFunctional F{p[0], p[1], p[2], p[3]};
      const auto rep = sl3::coadjoint::verify_polarization({a[0], a[1]}, {b[0], b[1]}, F);
      Record r;
      r.command = "polarization check";
      r.inputs = {{"a", json::array({a[0], a[1]})}, {"b", json::array({b[0], b[1]})}, {"functional", functional_json(F)}};
      r.outputs["subalgebra"] = exact(rep.subalgebra);
      r.outputs["isotropic"] = exact(rep.isotropic);
      r.outputs["positive"] = exact(rep.positive);
      r.outputs["positivity_value"] = exact(rep.positivity_value);
      ctx.emit(std::move(r));
    });
  }

  {
    auto text = std::make_shared<std::string>();
    auto* sub = app.add_subcommand("weight", "weights of the compact Cartan");
    sub->require_subcommand(1);
    auto* classify = sub->add_subcommand("classify", "holomorphic / antiholomorphic / neither-nor / singular");
    classify->add_option("--weight", *text, "m1,m2,m3 (reals allowed)")->required();
    classify->callback([text, &ctx] {
      const auto v = parse_list(*text, 3);
      const sl3::WeightClass c = sl3::classify_functional({v[0], v[1], v[2]});
      Record r;
      r.command = "weight classify";
      r.inputs["weight"] = v;
      r.outputs["class"] = exact(sl3::to_string(c));
      const bool integral = std::all_of(v.begin(), v.end(), [](double x) { return x == std::round(x); });
      if (integral) {
        const sl3::Weight w(static_cast<int>(v[0]), static_cast<int>(v[1]), static_cast<int>(v[2]));
        r.outputs["normalized"] = exact(w.normalized().to_string());
        r.outputs["dominant"] = exact(w.is_dominant());
        json orbit = json::array();
        for (const auto& [el, image] : sl3::weyl_orbit(w))
          orbit.push_back({{"w", el.to_string()}, {"weight", image.to_string()},
                           {"class", sl3::to_string(sl3::classify_weight(image))}});
        r.outputs["weyl_orbit"] = exact(orbit);
      }
      ctx.emit(std::move(r));
    });
  }

  {
    struct Opts {
      std::string weight, angles;
      bool alpha32_rho = false;
    };
    auto o = std::make_shared<Opts>();
    auto* sub = app.add_subcommand("character", "finite-dimensional characters");
    sub->require_subcommand(1);
    auto* eval = sub->add_subcommand("eval", "Weyl quotient and tableau sum at z = (e^{i t1}, e^{i t2}, e^{-i(t1+t2)})");
    eval->add_option("--weight", o->weight, "dominant m1,m2,m3 with m3 >= 0")->required();
    eval->add_option("--angles", o->angles, "t1,t2")->required();
    eval->add_flag("--rho-alpha32", o->alpha32_rho, "use rho = (0,-1,1) in the quotient");
    eval->callback([o, &ctx] {
      const sl3::Weight w = parse_weight(o->weight);
      const auto t = parse_list(o->angles, 2);
      const sl3::TorusPoint z{std::polar(1.0, t[0]), std::polar(1.0, t[1]), std::polar(1.0, -t[0] - t[1])};
      const auto conv = o->alpha32_rho ? sl3::RhoConvention::alpha32 : sl3::RhoConvention::standard;
      const sl3::Complex q = sl3::weyl_character_quotient(w, z, conv);
      const sl3::Complex s = sl3::schur_oracle(w, z);
      const double gap = sl3::min_eigenvalue_gap(z);
      Record r;
      r.command = "character eval";
      r.inputs = {{"weight", w.to_string()}, {"angles", t}};
      r.outputs["weyl_quotient"] = {{"value", complex_value(q)}, {"error_estimate", std::abs(q - s)}};
      r.outputs["tableau_sum"] = exact(complex_value(s));
      r.outputs["relative_difference"] = exact(std::abs(q - s) / std::max(std::abs(s), 1e-300));
      r.outputs["dimension"] = exact(sl3::count_tableaux(w));
      r.outputs["min_eigenvalue_gap"] = exact(gap);
      r.outputs["quotient_path"] = exact(gap < sl3::kTolerances.near_singular_gap ? "tableau_fallback" : "quotient");
      r.conventions = convention_snapshot();
      r.conventions["rho"] = sl3::rho(conv).to_string();
      r.tolerances = {{"near_singular_gap", sl3::kTolerances.near_singular_gap},
                      {"singular_gap", sl3::kTolerances.singular_gap}};
      ctx.emit(std::move(r));
    });
  }
}

}  // namespace sl3tool
