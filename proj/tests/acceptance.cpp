// Acceptance suite: runs every verification criterion at its stated
// tolerance and prints one pass/fail line per criterion.

#include <cstdio>
#include <cstdlib>
#include <cstring>

#include "smoothsum/verify.hpp"

int main(int argc, char** argv) {
  smoothsum::u64 seed = 42;
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc) {
      seed = std::strtoull(argv[++i], nullptr, 10);
    } else if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    }
  }

  bool all_pass = true;
  for (int id = 1; id <= smoothsum::verify::kCriterionCount; ++id) {
    if (only && id != only) continue;
    auto r = smoothsum::verify::run_criterion(id, seed);
    std::printf("[%s] criterion %2d: %s — %s [%.1fs]\n", r.pass ? "PASS" : "FAIL",
                r.id, r.name.c_str(), r.detail.c_str(), r.seconds);
    std::fflush(stdout);
    all_pass = all_pass && r.pass;
  }
  return all_pass ? 0 : 1;
}
