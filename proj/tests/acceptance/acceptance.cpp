// Runs the reproduction checks and prints one PASS/FAIL line per criterion.
// With arguments, runs only the named or numbered checks.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <set>
#include <string>

#include "turaev/reproduce.hpp"

int main(int argc, char** argv) {
  std::set<std::string> only(argv + 1, argv + argc);
  turaev::ReproduceOptions opts;
  int failed = 0;
  for (const auto& check : turaev::reproduction_checks()) {
    if (!only.empty() && !only.count(check.name) && !only.count(std::to_string(check.id))) continue;
    const auto t0 = std::chrono::steady_clock::now();
    turaev::CheckResult r;
    try {
      r = check.run(opts);
    } catch (const std::exception& e) {
      r.id = check.id;
      r.name = check.name;
      r.summary = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    char head[64];
    std::snprintf(head, sizeof head, "%s %2d %-22s", r.pass ? "PASS" : "FAIL", check.id, check.name.c_str());
    char tail[32];
    std::snprintf(tail, sizeof tail, " (%.2fs)", secs);
    std::cout << head << ' ' << r.summary << tail << std::endl;
    failed += !r.pass;
  }
  return failed == 0 ? 0 : 1;
}
