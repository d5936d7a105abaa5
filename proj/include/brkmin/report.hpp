// Copyright 2026 The brkmin Authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace brkmin {

struct Violation {
  std::string rule;
  std::string location;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const noexcept { return violations.empty(); }

  void add(std::string rule, std::string location) {
    violations.push_back({std::move(rule), std::move(location)});
  }

  bool has(const std::string& rule) const {
    for (const auto& v : violations)
      if (v.rule == rule) return true;
    return false;
  }
};

/// Raised when a request is well-formed but cannot be carried out, such as
/// exhaustive search beyond the variable cap. The CLI maps it to exit code 2.
class InfeasibleOperation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace brkmin
