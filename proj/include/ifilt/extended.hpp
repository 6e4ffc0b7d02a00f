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

// Orders and multiplicities that may be infinite, or known only up to the
// truncation degree. None of these use sentinel numbers.

#ifndef IFILT_EXTENDED_HPP
#define IFILT_EXTENDED_HPP

#include <compare>
#include <optional>
#include <string>

#include "ifilt/rational.hpp"

namespace ifilt {

/// Natural number, a lower bound "at least n" forced by truncation, or
/// infinity.
class SatOrd {
 public:
  enum class Kind { kFinite, kAtLeast, kInfinite };

  static SatOrd finite(unsigned n) { return SatOrd(Kind::kFinite, n); }
  static SatOrd at_least(unsigned n) { return SatOrd(Kind::kAtLeast, n); }
  static SatOrd infinity() { return SatOrd(Kind::kInfinite, 0); }

  Kind kind() const noexcept { return kind_; }
  bool is_finite() const noexcept { return kind_ == Kind::kFinite; }
  bool is_infinite() const noexcept { return kind_ == Kind::kInfinite; }
  /// The exact value or the lower bound. Meaningless for infinity.
  unsigned value() const noexcept { return value_; }

  /// Sum with flag propagation: anything + infinity = infinity, and a lower
  /// bound on either side gives a lower bound.
  friend SatOrd operator+(const SatOrd& a, const SatOrd& b) {
    if (a.is_infinite() || b.is_infinite()) return infinity();
    const Kind k = a.is_finite() && b.is_finite() ? Kind::kFinite : Kind::kAtLeast;
    return SatOrd(k, a.value_ + b.value_);
  }

  /// ">= n" is certain: finite values compare exactly, lower bounds and
  /// infinity satisfy every bound at or below their value.
  bool certainly_at_least(unsigned n) const noexcept { return is_infinite() || value_ >= n; }

  friend bool operator==(const SatOrd&, const SatOrd&) = default;

  std::string to_string() const;

 private:
  SatOrd(Kind k, unsigned v) : kind_(k), value_(v) {}
  Kind kind_;
  unsigned value_;
};

/// Rational multiplicity (mu_P, mu_tilde). "Infinity at D" records that the
/// value is infinite as far as the truncation can see; plain infinity is the
/// empty-infimum convention.
class MuValue {
 public:
  enum class Kind { kFinite, kAtLeast, kInfiniteAtPrecision, kInfinite };

  static MuValue finite(Rational q) { return MuValue(Kind::kFinite, std::move(q)); }
  static MuValue at_least(Rational q) { return MuValue(Kind::kAtLeast, std::move(q)); }
  static MuValue infinity_at_precision() { return MuValue(Kind::kInfiniteAtPrecision, 0); }
  static MuValue infinity() { return MuValue(Kind::kInfinite, 0); }

  Kind kind() const noexcept { return kind_; }
  bool is_finite() const noexcept { return kind_ == Kind::kFinite; }
  bool is_infinite() const noexcept { return kind_ == Kind::kInfinite || kind_ == Kind::kInfiniteAtPrecision; }
  const Rational& value() const noexcept { return value_; }

  /// Infimum of two values; exact beats a lower bound only when smaller.
  friend MuValue min(const MuValue& a, const MuValue& b);

  friend bool operator==(const MuValue&, const MuValue&) = default;

  std::string to_string() const;

 private:
  MuValue(Kind k, Rational v) : kind_(k), value_(std::move(v)) {}
  Kind kind_;
  Rational value_;
};

}  // namespace ifilt

#endif  // IFILT_EXTENDED_HPP
