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

#include "ifilt/error.hpp"
#include "ifilt/rational.hpp"

#include <cctype>
#include <string>

namespace ifilt {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid-argument";
    case ErrorCode::kFieldMismatch: return "field-mismatch";
    case ErrorCode::kContextMismatch: return "context-mismatch";
    case ErrorCode::kExceedsTruncation: return "exceeds-truncation";
    case ErrorCode::kCharacteristicZero: return "characteristic-zero";
    case ErrorCode::kNotProperIdeal: return "not-proper-ideal";
    case ErrorCode::kHypothesisViolated: return "hypothesis-violated";
    case ErrorCode::kRangeViolation: return "range-violation";
    case ErrorCode::kCoordinatesDoNotNormalize: return "coords-do-not-normalize";
    case ErrorCode::kInternal: return "internal";
    case ErrorCode::kSyntax: return "syntax";
    case ErrorCode::kUnknownVariable: return "unknown-variable";
    case ErrorCode::kNotPrimePower: return "not-prime-power";
    case ErrorCode::kTruncationEnvelope: return "truncation-envelope";
  }
  return "unknown";
}

Integer floor(const Rational& q) {
  const Integer n = numerator(q);
  const Integer d = denominator(q);
  Integer f = n / d;  // truncates toward zero
  if (n < 0 && f * d != n) f -= 1;
  return f;
}

Integer ceil(const Rational& q) {
  const Integer f = floor(q);
  return f * denominator(q) == numerator(q) ? f : f + 1;
}

std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s = trim(s.substr(1));
  }
  const auto slash = s.find('/');
  const std::string_view num = trim(s.substr(0, slash));
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : trim(s.substr(slash + 1));
  if (!all_digits(num) || !all_digits(den))
    throw Error(ErrorCode::kSyntax, "not a rational number: '" + std::string(text) + "'");
  const Integer d{std::string(den)};
  if (d == 0) throw Error(ErrorCode::kSyntax, "zero denominator in '" + std::string(text) + "'");
  Rational q(Integer{std::string(num)}, d);
  return negative ? Rational(-q) : q;
}

Integer lcm(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return 0;
  return boost::multiprecision::abs(a / boost::multiprecision::gcd(a, b) * b);
}

std::int64_t to_int64(const Integer& z) {
  if (z > Integer(INT64_MAX) || z < Integer(INT64_MIN))
    throw Error(ErrorCode::kRangeViolation, "integer out of 64-bit range: " + z.str());
  return z.convert_to<std::int64_t>();
}

}  // namespace ifilt
