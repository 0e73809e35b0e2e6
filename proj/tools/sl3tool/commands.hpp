#pragma once

#include <iosfwd>

#include <CLI11.hpp>

#include "record.hpp"

namespace sl3tool {

struct Context {
  GlobalOptions global;
  std::ostream* out = nullptr;
  int status = 0;

  void emit(Record r) {
    const int s = sl3tool::emit(*out, std::move(r), global);
    if (s > status) status = s;
  }
};

void add_structure_commands(CLI::App& app, Context& ctx);
void add_orbital_commands(CLI::App& app, Context& ctx);
void add_endoscopy_commands(CLI::App& app, Context& ctx);
void add_suite_command(CLI::App& app, Context& ctx);

}  // namespace sl3tool
