// Acceptance run: one PASS/FAIL line per numbered criterion, then a summary.
// Budgets live in the corpus cases themselves; timings here are informational.
#include <chrono>
#include <cstdio>
#include <exception>
#include <string>

#include "stabletype/cli.hpp"

int main() {
  using Clock = std::chrono::steady_clock;
  std::setvbuf(stdout, nullptr, _IOLBF, 0);
  const auto& cases = stabletype::cli::builtin_corpus();
  std::size_t failed = 0;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    std::string detail;
    bool ok = false;
    const auto start = Clock::now();
    try {
      ok = cases[i].check(detail);
    } catch (const std::exception& e) {
      detail = std::string("error: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    failed += !ok;
    std::printf("criterion %2zu: %s  %-30s %7.2f s  %s\n", i + 1, ok ? "PASS" : "FAIL", cases[i].name.c_str(), secs,
                detail.c_str());
  }
  std::printf("%zu/%zu criteria passed\n", cases.size() - failed, cases.size());
  return failed == 0 ? 0 : 1;
}
