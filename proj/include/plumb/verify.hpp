#pragma once

// Runners for the character-identity suites, shared by the C API and the tests.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace plumb {

struct CaseResult {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteOptions {
  std::optional<int> m;      // star/defrag: only this m; tree: cap on every m_v
  std::optional<int> depth;  // depth bound N
};

/// suite is one of star, tree, felder, defrag, all. Throws Error(invalid_argument) otherwise.
std::vector<CaseResult> run_suite(std::string_view suite, const SuiteOptions& options = {});

}  // namespace plumb
