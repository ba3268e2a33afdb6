#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace bvc {

struct SuiteResult {
  std::string name;
  std::string summary;  // one line: what was checked
  int cases = 0;
  int failures = 0;
  double seconds = 0.0;
  std::vector<std::string> messages;  // first few failures

  bool passed() const { return failures == 0 && cases > 0; }
};

struct SuiteInfo {
  std::string name;
  std::string description;
  int criterion = 0;  // acceptance criterion number, 0 for module invariants
};

const std::vector<SuiteInfo>& suite_catalog();

// Runs one suite; throws InputError for an unknown name.
SuiteResult run_suite(const std::string& name, std::uint64_t seed);

// "all", "acceptance", or a single suite name.
std::vector<SuiteResult> run_suites(const std::string& selector, std::uint64_t seed);

}  // namespace bvc
