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

#ifndef IFILT_RATIONAL_HPP
#define IFILT_RATIONAL_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace ifilt {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

/// Smallest integer >= q.
Integer ceil(const Rational& q);
/// Largest integer <= q.
Integer floor(const Rational& q);

/// "n" for integers, "n/d" otherwise.
std::string to_string(const Rational& q);

/// Accepts "n", "-n", "n/d". Throws Error(kSyntax) on anything else.
Rational parse_rational(std::string_view text);

Integer lcm(const Integer& a, const Integer& b);

std::int64_t to_int64(const Integer& z);

}  // namespace ifilt

#endif  // IFILT_RATIONAL_HPP
