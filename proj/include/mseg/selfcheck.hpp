#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "mseg/invariants.hpp"
#include "mseg/order.hpp"

namespace mseg {

struct SelfCheckOptions {
  Value support_lo{2};  // exhaustive corpus over [1, 4] by default
  Value support_hi{8};
  int max_content = 7;
  int random_cases = 300;
  std::uint64_t seed = 0x6d736567u;
  int partition_cap = kDefaultPartitionCap;
  EnumerationLimits limits;
  // Test hook: flips one rank inside the engine comparison so the failure
  // path itself is exercised.
  bool inject_fault = false;
};

struct SuiteResult {
  std::string name;
  std::size_t cases = 0;
  bool passed = true;
  std::string reproducer;  // first failing input, when any
};

struct SelfCheckReport {
  std::vector<SuiteResult> suites;
  bool all_passed = true;
  std::uint64_t seed = 0;
};

// Runs every property suite over the exhaustive corpus for the given bounds
// plus a seeded random corpus, streaming one pass/fail line per suite.
// Throws CapExceededError when the bounds exceed the enumeration cap.
SelfCheckReport run_selfcheck(const SelfCheckOptions& options, std::ostream& log);

}  // namespace mseg
