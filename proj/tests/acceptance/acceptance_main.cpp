#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>

#include "sl3/acceptance.hpp"

#ifndef SL3TOOL_PATH
#error "SL3TOOL_PATH must be defined"
#endif

using namespace sl3::acceptance;

namespace {

CriterionResult run_suite_cli() {
  CriterionResult r;
  r.id = 9;
  r.name = "cli suite";
  const std::string cmd = std::string("\"") + SL3TOOL_PATH + "\" suite --no-timestamp --criteria 1,2,3,4,5,6,7,8 > /dev/null 2>&1";
  const auto t0 = std::chrono::steady_clock::now();
  const int status = std::system(cmd.c_str());
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool exited_zero = status == 0;
  r.passed = exited_zero && r.seconds < kGates.suite_seconds;
  r.detail = "exit " + std::to_string(status) + ", " + std::to_string(r.seconds) + " s (gate " +
             std::to_string(kGates.suite_seconds) + " s)";
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  bool skip_cli = false;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--skip-cli") skip_cli = true;
    if (a == "--seed" && i + 1 < argc) o.seed = std::stoull(argv[++i]);
  }
  int failed = 0;
  for (int id = 1; id <= 8; ++id) {
    CriterionResult r;
    try {
      r = run_criterion(id, o);
    } catch (const std::exception& e) {
      r.id = id;
      r.name = "criterion " + std::to_string(id);
      r.detail = std::string("exception: ") + e.what();
    }
    std::cout << summary_line(r) << std::endl;
    for (const auto& row : r.table) std::cout << "    " << row << '\n';
    failed += r.passed ? 0 : 1;
  }
  if (!skip_cli) {
    const auto r = run_suite_cli();
    std::cout << summary_line(r) << std::endl;
    failed += r.passed ? 0 : 1;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}
