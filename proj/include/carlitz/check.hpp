#pragma once

#include <string>
#include <utility>

namespace carlitz {

// Outcome of one verification; `detail` names the first failure or gives a
// short summary of what was checked.
struct CheckResult {
  std::string name;
  bool pass = true;
  std::string detail;

  CheckResult() = default;
  CheckResult(std::string n, bool ok, std::string d = {})
      : name(std::move(n)), pass(ok), detail(std::move(d)) {}

  void fail(const std::string& why)
  {
    if (pass) detail = why;
    pass = false;
  }
};

}  // namespace carlitz
