#pragma once

// The invariant suite run by `papertorus verify`: structural, numerical and
// serialization properties that must hold on any correct build.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace papertorus {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

struct SuiteOptions {
  std::uint64_t seed = 20240601;
  /// Smaller grids and sample counts.
  bool quick = false;
  /// Run only checks whose name contains this text (empty = all).
  std::string filter;
};

std::vector<std::string> invariant_names();

/// Runs the checks in order, reporting each as it finishes. Exceptions
/// thrown by a check are caught and turn it red.
std::vector<CheckResult> run_invariant_suite(const SuiteOptions& opts,
                                             const std::function<void(const CheckResult&)>& on_result = {});

}  // namespace papertorus
