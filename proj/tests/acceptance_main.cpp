// Acceptance suite: one line per criterion, nonzero exit on any failure.
#include <cstdio>

#include "dfo/verify.hpp"

int main() {
  const auto results = dfo::verify::run_all();
  int failures = 0;
  int idx = 0;
  for (const auto& r : results) {
    ++idx;
    std::printf("criterion %2d [%s]: %s — %s\n", idx, r.name.c_str(),
                r.pass ? "PASS" : "FAIL", r.detail.c_str());
    if (!r.pass) ++failures;
  }
  std::printf("%d/%d criteria passed\n", idx - failures, idx);
  return failures == 0 ? 0 : 1;
}
