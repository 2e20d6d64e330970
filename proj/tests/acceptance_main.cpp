// Acceptance suite runner: one pass/fail line per criterion.
//   acceptance [--suite fast|full] [--criterion k]...

#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "dynwave/acceptance.hpp"

int main(int argc, char** argv) {
  dynwave::Suite suite = dynwave::Suite::full;
  std::vector<int> only;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--suite") == 0 && i + 1 < argc) {
      const std::string s = argv[++i];
      if (s == "fast")
        suite = dynwave::Suite::fast;
      else if (s == "full")
        suite = dynwave::Suite::full;
      else {
        std::fprintf(stderr, "unknown suite: %s\n", s.c_str());
        return 2;
      }
    } else if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
      only.push_back(std::atoi(argv[++i]));
    } else {
      std::fprintf(stderr, "usage: %s [--suite fast|full] [--criterion k]...\n", argv[0]);
      return 2;
    }
  }
  const auto results = dynwave::run_acceptance(suite, only);
  return dynwave::report_acceptance(results);
}
