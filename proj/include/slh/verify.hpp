#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "slh/hquot.hpp"

namespace slh {

struct CriterionResult {
  int id;
  std::string name;
  bool pass;
  std::string detail;  // human-readable evidence, one line
};

struct VerifyReport {
  std::vector<CriterionResult> results;
  bool all_pass;
};

/// Runs the full verification battery at p = 7 and returns one result per
/// criterion.  `fast` caps the cover level at 1 (the full suite also runs the
/// degree-343 level-2 cover); seed feeds the randomized suites.
VerifyReport run_verification(bool fast, std::uint64_t seed,
                              std::size_t bfs_cap = kDefaultBfsCap);

}  // namespace slh
