#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "sl3/endoscopy.hpp"
#include "sl3/quadrature.hpp"

namespace sl3tool {

using json = nlohmann::ordered_json;

struct GlobalOptions {
  bool no_timestamp = false;
  bool csv = false;
  bool emit_plot_data = false;
  std::string config_path;
  double rel_tol = 0.0;  // 0 = not given on the command line
  double abs_tol = 0.0;
  int max_depth = 0;
};

/// Quadrature settings for a command: `base`, then the config file (the
/// SL3TOOL_CONFIG path wins over --config), then command-line overrides.
sl3::QuadratureSpec resolve_spec(const GlobalOptions& g, sl3::QuadratureSpec base);

struct Record {
  std::string command;
  json inputs = json::object();
  json outputs = json::object();
  json conventions = json::object();
  json tolerances = json::object();
  bool converged = true;

  // Optional tabular sweep, printed instead of the JSON record under --csv.
  std::vector<std::string> columns;
  std::vector<std::vector<json>> rows;

  // (x, y) columns for --emit-plot-data.
  std::string plot_x, plot_y;
  std::vector<double> plot_xs, plot_ys;
};

json estimated(double value, double error);
json exact(const json& value);
json complex_value(std::complex<double> z);
json matrix_value(const sl3::Mat3& m);

/// Default conventions with `conv` as the transfer convention.
json convention_snapshot(const sl3::TransferConvention& conv = {});
json tolerance_snapshot(const sl3::QuadratureSpec& spec);

/// Writes one record (JSON line, or CSV when requested and the record has a
/// table). Returns the exit status contribution: 0, or 3 on non-convergence.
int emit(std::ostream& out, Record r, const GlobalOptions& g);

std::vector<double> parse_list(const std::string& text, std::size_t expected = 0);
std::vector<int> parse_int_list(const std::string& text, std::size_t expected = 0);

}  // namespace sl3tool
