#include <iostream>
#include <stdexcept>

#include "commands.hpp"

int main(int argc, char** argv) {
  sl3tool::Context ctx;
  ctx.out = &std::cout;

  CLI::App app{"sl3tool: orbital integrals and endoscopy for SL(3,R)"};
  app.require_subcommand(1);
  app.fallthrough();
  app.failure_message(CLI::FailureMessage::help);
  auto& g = ctx.global;
  app.add_flag("--no-timestamp", g.no_timestamp, "omit timestamps and wall-clock figures");
  app.add_flag("--csv", g.csv, "print tabular sweeps as CSV");
  app.add_flag("--emit-plot-data", g.emit_plot_data, "include (x, y) columns for lambda and theta sweeps");
  app.add_option("--config", g.config_path, "key=value quadrature config (SL3TOOL_CONFIG overrides the path)");
  app.add_option("--rel-tol", g.rel_tol)->check(CLI::PositiveNumber);
  app.add_option("--abs-tol", g.abs_tol)->check(CLI::PositiveNumber);
  app.add_option("--max-depth", g.max_depth)->check(CLI::PositiveNumber);

  sl3tool::add_structure_commands(app, ctx);
  sl3tool::add_orbital_commands(app, ctx);
  sl3tool::add_endoscopy_commands(app, ctx);
  sl3tool::add_suite_command(app, ctx);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
  return ctx.status;
}
