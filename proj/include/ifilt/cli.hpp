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

#ifndef IFILT_CLI_HPP
#define IFILT_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace ifilt::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kChecksFailed = 1;
inline constexpr int kInputError = 2;

/// args[0] is the program name. Never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ifilt::cli

#endif  // IFILT_CLI_HPP
