// Acceptance run: one PASS/FAIL line per criterion, exact comparisons only.
#include <chrono>
#include <cstdio>
#include <functional>
#include <thread>

#include "sa2/verify.hpp"

using namespace sa2;

int main() {
  VerifyOptions o;  // bounds 12 / 10 / 9 / 8
  o.jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  const std::vector<std::function<CheckResult(const VerifyOptions&)>> checks{
      check_hexagon_intervals, check_spiral_intervals, check_q_structured, check_translation_move,
      check_heredity_lookup,   check_kumar,            check_moves,        check_enumerations,
      check_loci,              check_inversions};
  int failed = 0;
  for (const auto& run : checks) {
    auto t0 = std::chrono::steady_clock::now();
    CheckResult r = run(o);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s criterion %d: %s (%ld cases, %.1fs)\n", r.pass ? "PASS" : "FAIL", r.criterion, r.name.c_str(),
                r.cases, secs);
    if (!r.note.empty()) std::printf("    note: %s\n", r.note.c_str());
    for (const auto& f : r.failures) std::printf("    %s\n", f.c_str());
    std::fflush(stdout);
    failed += r.pass ? 0 : 1;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(checks.size()) - failed, checks.size());
  return failed == 0 ? 0 : 1;
}
