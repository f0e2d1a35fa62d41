// One PASS/FAIL line per acceptance criterion; exit status 0 iff all pass.

#include <cstdio>

#include "amnm/suite.hpp"

int main() {
  bool all = true;
  for (const auto& r : amnm::run_acceptance()) {
    all = all && r.passed;
    std::printf("%s criterion %d (%s) %.2fs: %s\n", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(), r.seconds,
                r.detail.c_str());
  }
  return all ? 0 : 1;
}
