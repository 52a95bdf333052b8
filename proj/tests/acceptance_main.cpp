// Runs every acceptance criterion and prints one line per criterion.

#include <cstdio>

#include "fatpoints/cli/acceptance.hpp"

int main() {
  using namespace fatpoints::cli;
  RunConfig cfg;
  auto results = run_acceptance({"all"}, cfg);
  int failed = 0;
  for (const auto& r : results) {
    std::printf("%-4s %s  %7.2fs / %5.0fs  %s: %s\n", r.id.c_str(), r.pass ? "PASS" : "FAIL", r.seconds,
                r.budget_seconds, r.title.c_str(), r.detail.c_str());
    failed += !r.pass;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(results.size()) - failed, results.size());
  return failed ? 1 : 0;
}
