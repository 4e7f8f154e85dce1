#pragma once

#include <functional>
#include <string>
#include <vector>

namespace entinv {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// "n3", "n4", "classical" and "all".
const std::vector<std::string>& verification_suites();

/// Runs the table checks of one suite against the built-in data. `on_result`
/// is called as each check finishes. Throws InvalidArgument for an unknown suite.
std::vector<CheckResult> run_verification(const std::string& suite, unsigned workers = 1,
                                          const std::function<void(const CheckResult&)>& on_result = {});

}  // namespace entinv
