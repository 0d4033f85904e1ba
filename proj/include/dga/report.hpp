// Copyright 2026 The dga Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DGA_REPORT_HPP
#define DGA_REPORT_HPP

#include <algorithm>
#include <string>
#include <vector>

namespace dga {

struct IdentityResult {
  std::string name;
  std::string lhs;
  std::string rhs;
  bool pass = false;
};

/// Ordered verdicts of an identity suite.
struct Report {
  std::vector<IdentityResult> entries;

  template <class T>
  void check(std::string name, const T& lhs, const T& rhs) {
    using std::to_string;
    entries.push_back({std::move(name), to_string(lhs), to_string(rhs), lhs == rhs});
  }

  void append(const Report& other) {
    entries.insert(entries.end(), other.entries.begin(), other.entries.end());
  }

  bool all_pass() const {
    return std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.pass; });
  }

  /// nullptr when everything passes.
  const IdentityResult* first_failure() const {
    auto it = std::find_if(entries.begin(), entries.end(), [](const auto& e) { return !e.pass; });
    return it == entries.end() ? nullptr : &*it;
  }
};

}  // namespace dga

#endif  // DGA_REPORT_HPP
