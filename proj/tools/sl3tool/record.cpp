#include "record.hpp"

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "sl3/coadjoint.hpp"
#include "sl3/roots.hpp"
#include "sl3/tolerances.hpp"

namespace sl3tool {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read config file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string utc_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string csv_cell(const json& v) {
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
  }
  return v.dump();
}

}  // namespace

sl3::QuadratureSpec resolve_spec(const GlobalOptions& g, sl3::QuadratureSpec base) {
  std::string path = g.config_path;
  if (const char* env = std::getenv("SL3TOOL_CONFIG"); env != nullptr && *env != '\0') path = env;
  if (!path.empty()) base = sl3::QuadratureSpec::from_config(read_file(path), base);
  if (g.rel_tol > 0) base.rel_tol = g.rel_tol;
  if (g.abs_tol > 0) base.abs_tol = g.abs_tol;
  if (g.max_depth > 0) base.max_subdivision_depth = g.max_depth;
  base.validate();
  return base;
}

json estimated(double value, double error) { return {{"value", value}, {"error_estimate", error}}; }

json exact(const json& value) { return {{"value", value}, {"error_estimate", "exact"}}; }

json complex_value(std::complex<double> z) { return json::array({z.real(), z.imag()}); }

json matrix_value(const sl3::Mat3& m) {
  json rows = json::array();
  for (int r = 0; r < 3; ++r) rows.push_back(json::array({m(r, 0), m(r, 1), m(r, 2)}));
  return rows;
}

json convention_snapshot(const sl3::TransferConvention& conv) {
  json c;
  c["rho"] = sl3::rho().to_string();
  c["positive_roots"] = "a12,a13,a23";
  c["sl2_embedding_conjugation"] = sl3::sl2_embedding_conjugation();
  c["oscillator_generator"] = "diag(2/3,-4/3,2/3)";
  c["transfer_sign"] = conv.global_sign;
  c["xi"] = sl3::xi_candidates()[conv.xi_index].name;
  c["fH_normalization"] = sl3::to_string(conv.fH_normalization);
  c["kappa"] = "(-1,-1)";
  return c;
}

json tolerance_snapshot(const sl3::QuadratureSpec& spec) {
  json t;
  t["rel_tol"] = spec.rel_tol;
  t["abs_tol"] = spec.abs_tol;
  t["max_subdivision_depth"] = spec.max_subdivision_depth;
  if (!spec.truncation_box.empty()) {
    json box = json::array();
    for (const auto& iv : spec.truncation_box) box.push_back(json::array({iv.lo, iv.hi}));
    t["truncation_box"] = box;
  }
  t["regular_gap"] = sl3::kTolerances.regular_gap;
  t["near_singular_gap"] = sl3::kTolerances.near_singular_gap;
  t["ill_conditioned"] = sl3::kTolerances.ill_conditioned;
  return t;
}

int emit(std::ostream& out, Record r, const GlobalOptions& g) {
  if (g.emit_plot_data && !r.plot_xs.empty())
    r.outputs["plot"] = {{"x_label", r.plot_x}, {"y_label", r.plot_y}, {"x", r.plot_xs}, {"y", r.plot_ys}};
  r.outputs["converged"] = r.converged;

  if (g.csv && (!r.columns.empty() || (g.emit_plot_data && !r.plot_xs.empty()))) {
    if (g.emit_plot_data && !r.plot_xs.empty()) {
      out << r.plot_x << "," << r.plot_y << "\n";
      for (std::size_t i = 0; i < r.plot_xs.size(); ++i)
        out << json(r.plot_xs[i]).dump() << "," << json(r.plot_ys[i]).dump() << "\n";
    } else {
      for (std::size_t i = 0; i < r.columns.size(); ++i) out << (i ? "," : "") << r.columns[i];
      out << "\n";
      for (const auto& row : r.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_cell(row[i]);
        out << "\n";
      }
    }
    out.flush();
    return r.converged ? 0 : 3;
  }

  if (!r.columns.empty()) {
    json table = json::array();
    for (const auto& row : r.rows) {
      json obj;
      for (std::size_t i = 0; i < r.columns.size() && i < row.size(); ++i) obj[r.columns[i]] = row[i];
      table.push_back(obj);
    }
    r.outputs["table"] = table;
  }

  json rec;
  rec["command"] = r.command;
  rec["inputs"] = r.inputs;
  rec["outputs"] = r.outputs;
  rec["conventions"] = r.conventions.empty() ? convention_snapshot() : r.conventions;
  rec["tolerances"] = r.tolerances;
  if (!g.no_timestamp) rec["timestamp"] = utc_now();
  out << rec.dump() << "\n";
  out.flush();
  return r.converged ? 0 : 3;
}

std::vector<double> parse_list(const std::string& text, std::size_t expected) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("not a number: '" + item + "'");
    }
    if (item.find_first_not_of(" \t", used) != std::string::npos)
      throw std::invalid_argument("not a number: '" + item + "'");
    out.push_back(v);
  }
  if (expected != 0 && out.size() != expected)
    throw std::invalid_argument("expected " + std::to_string(expected) + " comma-separated values, got '" + text + "'");
  return out;
}

std::vector<int> parse_int_list(const std::string& text, std::size_t expected) {
  std::vector<int> out;
  for (double v : parse_list(text, expected)) {
    if (v != static_cast<int>(v)) throw std::invalid_argument("expected integers, got '" + text + "'");
    out.push_back(static_cast<int>(v));
  }
  return out;
}

}  // namespace sl3tool
