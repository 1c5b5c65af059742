#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace freeclt::cli {

struct SelftestResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// The exact-identity suites at reduced size, plus a few numeric spot checks.
/// Randomized pieces draw from a generator seeded with `seed`.
std::vector<SelftestResult> run_selftest(std::uint64_t seed);

}  // namespace freeclt::cli
