#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace feyncount {

/// One row of a verification report. Values are exact decimal strings.
struct Check {
  std::string name;
  std::string parameters;
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct VerificationReport {
  std::vector<Check> checks;

  bool overall() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
  }

  std::size_t failures() const {
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.pass; }));
  }

  void add(std::string name, std::string parameters, std::string expected, std::string actual) {
    const bool pass = expected == actual;
    checks.push_back({std::move(name), std::move(parameters), std::move(expected),
                      std::move(actual), pass});
  }

  void append(const VerificationReport& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  }
};

}  // namespace feyncount
