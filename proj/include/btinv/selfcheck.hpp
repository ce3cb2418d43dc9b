// Randomized self-check suites: algebra relations, the change of
// generators, trace rules, Markov invariance, skein rules and the v = 1
// graph formula.  Each suite reports PASS/FAIL with a counterexample.

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace btinv {

struct SelfcheckOptions {
  std::uint64_t seed = 42;
  int strands = 4;  // largest strand count used
  int trials = 200;
};

struct SuiteResult {
  std::string name;
  bool passed = true;
  long checks = 0;
  std::string detail;  // report lines or the first counterexample
};

SuiteResult suite_relations(const SelfcheckOptions& options);
SuiteResult suite_isomorphism(const SelfcheckOptions& options);
SuiteResult suite_trace_rules(const SelfcheckOptions& options);
SuiteResult suite_markov(const SelfcheckOptions& options);
SuiteResult suite_skein(const SelfcheckOptions& options);
SuiteResult suite_omega_agreement(const SelfcheckOptions& options);
SuiteResult suite_omega_structure(const SelfcheckOptions& options);

struct NamedSuite {
  const char* name;
  SuiteResult (*run)(const SelfcheckOptions&);
};

/// All suites in reporting order.
const std::vector<NamedSuite>& selfcheck_suites();

}  // namespace btinv
