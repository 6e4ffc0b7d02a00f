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

#ifndef IFILT_MULTI_INDEX_HPP
#define IFILT_MULTI_INDEX_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

#include "ifilt/error.hpp"

namespace ifilt {

/// Largest ambient dimension d the library accepts.
inline constexpr std::size_t kMaxVars = 8;

/// Exponent vector I = (i_1, ..., i_d) with |I| = sum of the entries.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::size_t nvars) : n_(check_size(nvars)) {}
  MultiIndex(std::initializer_list<unsigned> exps) : n_(check_size(exps.size())) {
    std::size_t i = 0;
    for (unsigned e : exps) set(i++, e);
  }
  explicit MultiIndex(std::span<const std::uint32_t> exps) : n_(check_size(exps.size())) {
    for (std::size_t i = 0; i < exps.size(); ++i) set(i, exps[i]);
  }

  static MultiIndex unit(std::size_t nvars, std::size_t i, unsigned power = 1) {
    MultiIndex m(nvars);
    m.set(i, power);
    return m;
  }

  std::size_t size() const noexcept { return n_; }
  unsigned operator[](std::size_t i) const noexcept { return e_[i]; }
  void set(std::size_t i, unsigned v) {
    if (v > 0xFFFFu) throw Error(ErrorCode::kRangeViolation, "exponent exceeds 65535");
    e_[i] = static_cast<std::uint16_t>(v);
  }

  unsigned degree() const noexcept {
    unsigned d = 0;
    for (std::size_t i = 0; i < n_; ++i) d += e_[i];
    return d;
  }

  bool is_zero() const noexcept { return degree() == 0; }

  std::vector<std::uint32_t> to_vector() const { return std::vector<std::uint32_t>(e_.begin(), e_.begin() + n_); }

  /// Componentwise <=, i.e. X^this divides X^other.
  bool divides(const MultiIndex& other) const noexcept {
    for (std::size_t i = 0; i < n_; ++i)
      if (e_[i] > other.e_[i]) return false;
    return true;
  }

  friend MultiIndex operator+(const MultiIndex& a, const MultiIndex& b) {
    MultiIndex r(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i) r.set(i, unsigned{a.e_[i]} + b.e_[i]);
    return r;
  }
  /// Requires b.divides(a).
  friend MultiIndex operator-(const MultiIndex& a, const MultiIndex& b) {
    MultiIndex r(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i) r.e_[i] = static_cast<std::uint16_t>(a.e_[i] - b.e_[i]);
    return r;
  }
  friend MultiIndex operator*(unsigned k, const MultiIndex& a) {
    MultiIndex r(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i) r.set(i, k * a.e_[i]);
    return r;
  }

  friend bool operator==(const MultiIndex& a, const MultiIndex& b) noexcept { return a.n_ == b.n_ && a.e_ == b.e_; }

  std::size_t hash() const noexcept {
    std::size_t h = n_;
    for (std::size_t i = 0; i < n_; ++i) h = h * 1000003u ^ e_[i];
    return h;
  }

 private:
  static std::uint8_t check_size(std::size_t n) {
    if (n > kMaxVars) throw Error(ErrorCode::kRangeViolation, "too many variables (max 8)");
    return static_cast<std::uint8_t>(n);
  }

  std::array<std::uint16_t, kMaxVars> e_{};
  std::uint8_t n_ = 0;
};

/// Graded order used for storage, printing and pivoting: lower total degree
/// first; within a degree, lexicographically larger first (x^2 before xy
/// before y^2 with x declared before y). It is multiplicative, so the first
/// monomial of x_i * f is x_i times the first monomial of f.
struct GradedLex {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const noexcept {
    const unsigned da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] != b[i]) return a[i] > b[i];
    return false;
  }
};

struct MultiIndexHash {
  std::size_t operator()(const MultiIndex& m) const noexcept { return m.hash(); }
};

/// All multi-indices of length nvars and total degree exactly n, in
/// GradedLex order.
std::vector<MultiIndex> monomials_of_degree(std::size_t nvars, unsigned n);

/// All multi-indices of total degree <= n, in GradedLex order.
std::vector<MultiIndex> monomials_up_to(std::size_t nvars, unsigned n);

}  // namespace ifilt

#endif  // IFILT_MULTI_INDEX_HPP
