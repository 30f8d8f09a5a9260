#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "credal/rational.hpp"

namespace credal {

struct SuiteResult {
  std::string name;
  long cases = 0;
  long failures = 0;
  std::string witness;  // first failing case, JSON-ish, empty when green

  bool passed() const { return failures == 0; }
};

// Randomized invariant suites over the whole library.  Deterministic for a
// fixed seed; each returns the number of failing cases plus one witness.
SuiteResult suite_algebra_laws(std::uint64_t seed, long cases, long max_den);
SuiteResult suite_credence_additivity(std::uint64_t seed, long cases);
SuiteResult suite_integrator_tolerance(std::uint64_t seed, long cases);
SuiteResult suite_partition_bayes(std::uint64_t seed, long cases);
SuiteResult suite_change_of_variables(std::uint64_t seed, long cases);
SuiteResult suite_liminal_identities(std::uint64_t seed, long cases);
SuiteResult suite_stone_identity(std::uint64_t seed, long cases);

// The full battery at moderate case counts.
std::vector<SuiteResult> run_selftest(std::uint64_t seed, long scale);

}  // namespace credal
