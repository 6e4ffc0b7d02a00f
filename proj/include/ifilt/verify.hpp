// Copyright 2026 The ifilt Authors
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

// The property corpus run by `ifilt verify`.

#ifndef IFILT_VERIFY_HPP
#define IFILT_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ifilt/report.hpp"

namespace ifilt {

struct VerifyOptions {
  std::uint64_t seed = 1;
};

struct SuiteResult {
  std::string name;
  std::string law;  // the statement exercised
  std::size_t instances = 0;
  std::size_t failures = 0;
  std::string first_failure;
  double seconds = 0;
  bool passed() const noexcept { return failures == 0 && instances > 0; }
};

struct VerifySummary {
  std::uint64_t seed = 0;
  std::vector<SuiteResult> suites;
  bool passed() const noexcept;
};

VerifySummary run_verify(const VerifyOptions& opts);

/// Timing fields are left out so the JSON is reproducible.
Json to_json(const VerifySummary& s);

}  // namespace ifilt

#endif  // IFILT_VERIFY_HPP
