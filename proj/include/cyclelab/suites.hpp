#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cyclelab {

struct SuiteOptions {
  std::uint64_t seed = 1;
  std::size_t trials = 0;  // 0: suite default
  std::size_t n = 0;       // 0: suite default
  std::size_t kmax = 0;    // 0: suite default
};

struct SuiteReport {
  std::string id;
  std::string parameters;  // seed and sizes as run
  std::size_t trials = 0;
  std::size_t passed = 0;
  std::vector<std::string> failures;
  double seconds = 0;

  bool ok() const { return trials > 0 && passed == trials; }
};

/// "cloning", "gallai-roy", "blowup", "shift-chi".
std::vector<std::string_view> suite_ids();

/// Throws ParameterRejected for an unknown id.
SuiteReport run_suite(std::string_view id, const SuiteOptions& options);

}  // namespace cyclelab
