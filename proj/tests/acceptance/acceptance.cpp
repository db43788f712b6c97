#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include "snarklab/verify.hpp"

#ifndef SNARKLAB_FIXTURE_DIR
#define SNARKLAB_FIXTURE_DIR "tests/fixtures"
#endif

namespace {

void usage(const char* argv0) {
  std::fprintf(stderr, "usage: %s [--only N]... [--skip-slow] [--fixtures DIR] [--verbose]\n", argv0);
}

}  // namespace

int main(int argc, char** argv) {
  snarklab::VerifyOptions opts;
  opts.fixture_dir = SNARKLAB_FIXTURE_DIR;
  std::vector<int> only;
  bool skip_slow = false, verbose = false;
  for (int i = 1; i < argc; ++i) {
    if (!std::strcmp(argv[i], "--only") && i + 1 < argc) {
      only.push_back(std::atoi(argv[++i]));
    } else if (!std::strcmp(argv[i], "--skip-slow")) {
      skip_slow = true;
    } else if (!std::strcmp(argv[i], "--fixtures") && i + 1 < argc) {
      opts.fixture_dir = argv[++i];
    } else if (!std::strcmp(argv[i], "--verbose")) {
      verbose = true;
    } else {
      usage(argv[0]);
      return 2;
    }
  }

  int failed = 0, ran = 0;
  for (const auto& c : snarklab::criteria()) {
    bool selected = only.empty() ? !(skip_slow && c.slow) : false;
    for (int n : only) selected |= n == c.number;
    if (!selected) continue;
    ++ran;
    auto r = snarklab::run_criterion(c, opts);
    std::printf("%s criterion %d %s (%.2f s", r.pass ? "PASS" : "FAIL", r.number, r.id.c_str(), r.seconds);
    if (r.limit_seconds > 0) std::printf(" of %.0f s", r.limit_seconds);
    std::printf(")\n");
    if (verbose || !r.pass)
      for (const auto& m : r.measured) std::printf("    %s\n", m.c_str());
    for (std::size_t i = 0; i < r.failures.size() && i < 20; ++i) std::printf("    failed: %s\n", r.failures[i].c_str());
    if (r.failures.size() > 20) std::printf("    ... %zu more\n", r.failures.size() - 20);
    std::fflush(stdout);
    failed += !r.pass;
  }
  if (ran == 0) {
    std::fprintf(stderr, "no criterion selected\n");
    return 2;
  }
  std::printf("%d of %d criteria passed\n", ran - failed, ran);
  return failed ? 1 : 0;
}
