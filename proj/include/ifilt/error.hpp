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

#ifndef IFILT_ERROR_HPP
#define IFILT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace ifilt {

enum class ErrorCode {
  kInvalidArgument,
  kFieldMismatch,
  kContextMismatch,
  kExceedsTruncation,
  kCharacteristicZero,
  kNotProperIdeal,
  kHypothesisViolated,
  kRangeViolation,
  kCoordinatesDoNotNormalize,
  kInternal,
  // Spec-file diagnostics.
  kSyntax,
  kUnknownVariable,
  kNotPrimePower,
  kTruncationEnvelope,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ifilt

#endif  // IFILT_ERROR_HPP
