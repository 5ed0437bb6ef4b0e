#pragma once

#include <map>
#include <string>
#include <vector>

#include "abcross/limits.hpp"

namespace abcross {

// One named property check: a verdict, the values the check regenerated
// (keyed by stable names so reports diff byte-for-byte across runs), and the
// first counterexample when the verdict is negative.
struct PropertyResult {
  std::string name;
  bool pass = false;
  std::map<std::string, std::string> values;
  std::string detail;
};

// Names of the property suites, in report order.
std::vector<std::string> verify_suite_names();

// Runs one suite from scratch: every expected value is re-derived by an
// independent route (exhaustive oracle, direct enumeration, or fixed-seed
// sampling), never read from a cache. Unknown names throw validation_error.
PropertyResult run_verify_suite(const std::string& name,
                                const Limits& limits = Limits{});

// All suites, in verify_suite_names() order.
std::vector<PropertyResult> run_verify_suites(const Limits& limits = Limits{});

}  // namespace abcross
