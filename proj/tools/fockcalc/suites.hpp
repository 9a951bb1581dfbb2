#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace fockcalc::cli {

enum class SuiteSize { Small, Default };

struct SuiteOptions {
  SuiteSize size = SuiteSize::Default;
  /// Negates one side of the first comparison of every suite, to exercise the failure path.
  bool inject_sign_fault = false;
};

struct SuiteReport {
  std::string name;
  std::size_t passed = 0;
  std::size_t total = 0;
  std::optional<nlohmann::json> counterexample;

  bool ok() const noexcept { return passed == total; }
};

const std::vector<std::string>& suite_names();

/// Runs one named suite. Throws std::invalid_argument for an unknown name.
SuiteReport run_suite(const std::string& name, const SuiteOptions& options);

}  // namespace fockcalc::cli
