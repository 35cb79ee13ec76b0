// One line per acceptance criterion; exit status 1 if any fails.
// Usage: acceptance [seed] [id ...]

#include <cstdio>
#include <cstdlib>
#include <vector>

#include "sah/acceptance.hpp"

int main(int argc, char** argv) {
  std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 0;
  std::vector<int> ids;
  for (int i = 2; i < argc; ++i) ids.push_back(std::atoi(argv[i]));
  if (ids.empty())
    for (int i = 1; i <= sah::kCriteria; ++i) ids.push_back(i);

  int failed = 0;
  for (int id : ids) {
    auto r = sah::run_criterion(id, seed);
    std::printf("[%s] criterion %2d %-26s %s (%.2f s", r.pass() ? "PASS" : "FAIL", r.id, r.title.c_str(),
                r.detail.c_str(), r.seconds);
    if (r.limit_seconds > 0) std::printf(", limit %.0f s", r.limit_seconds);
    std::printf(")\n");
    std::fflush(stdout);
    failed += !r.pass();
  }
  std::printf("%zu criteria, %d failed\n", ids.size(), failed);
  return failed ? 1 : 0;
}
