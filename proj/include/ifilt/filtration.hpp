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

// Idealistic filtrations of r.f.g. type: G(T) for a finite list T of
// (polynomial, rational level) pairs, and the ideals 𝕀_a they generate.

#ifndef IFILT_FILTRATION_HPP
#define IFILT_FILTRATION_HPP

#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <vector>

#include "ifilt/extended.hpp"
#include "ifilt/gls.hpp"

namespace ifilt {

template <FieldLike K>
struct Generator {
  Poly<K> f;
  Rational level;

  friend bool operator==(const Generator& a, const Generator& b) { return a.level == b.level && a.f == b.f; }
};

template <FieldLike K>
class FiltrationSpec {
 public:
  explicit FiltrationSpec(ContextPtr<K> ctx, std::vector<Generator<K>> gens = {});

  const TruncationContext<K>& ctx() const noexcept { return *ctx_; }
  const ContextPtr<K>& ctx_ptr() const noexcept { return ctx_; }
  const std::vector<Generator<K>>& generators() const noexcept { return gens_; }
  std::size_t size() const noexcept { return gens_.size(); }
  bool empty() const noexcept { return gens_.empty(); }

  void add(Poly<K> f, Rational level);

  /// Drops zero polynomials, levels <= 0 and exact duplicates; keeps order.
  FiltrationSpec normalized() const;

  /// Least common multiple of the level denominators (1 when empty).
  Integer level_denominator() const;

  friend bool operator==(const FiltrationSpec& a, const FiltrationSpec& b) { return a.gens_ == b.gens_; }

 private:
  ContextPtr<K> ctx_;
  std::vector<Generator<K>> gens_;
};

/// Memoizing evaluator of the ideals 𝕀_a (truncated images). Uses the recursion
/// 𝕀_a = Σ_λ f_λ · 𝕀_{a - a_λ} for a > 0, which is the product description
/// Σ ∏ f_λ^{n_λ} (Σ n_λ a_λ >= a) reorganized by the first factor.
/// Thread-safe.
template <FieldLike K>
class LevelIdeals {
 public:
  explicit LevelIdeals(const FiltrationSpec<K>& F, Kernel kernel = Kernel::kParallel);

  const FiltrationSpec<K>& filtration() const noexcept { return F_; }
  std::shared_ptr<const TruncatedIdeal<K>> at(const Rational& a) const;
  /// True when some positive-level generator is a unit, so every 𝕀_a = R.
  bool is_trivial() const noexcept { return unit_generator_; }

 private:
  std::shared_ptr<const TruncatedIdeal<K>> compute(const Rational& a) const;

  FiltrationSpec<K> F_;
  Kernel kernel_;
  bool unit_generator_ = false;
  std::vector<Poly<K>> truncated_;  // positive-level generators, truncated to D
  std::vector<Rational> levels_;
  mutable std::recursive_mutex mu_;
  mutable std::map<Rational, std::shared_ptr<const TruncatedIdeal<K>>> memo_;
};

template <FieldLike K>
TruncatedIdeal<K> ideal_at_level(const FiltrationSpec<K>& F, const Rational& a, Kernel kernel = Kernel::kParallel);

/// μ_P at the origin: min over positive-level generators of ord(f)/a; the
/// empty infimum is infinity.
template <FieldLike K>
MuValue mu_P(const FiltrationSpec<K>& F);

/// μ_P >= 1.
template <FieldLike K>
bool in_support(const FiltrationSpec<K>& F);

/// Checks f^n + c_1 f^{n-1} + ... + c_n = 0 in R/m^{D+1} and c_i ∈ 𝕀_{i a}.
template <FieldLike K>
bool is_integral_witness(const FiltrationSpec<K>& F, const Poly<K>& f, const Rational& a,
                         std::span<const Poly<K>> coeffs);

/// v * f in R/m^{D+1} for a row vector v.
template <FieldLike K>
std::vector<typename K::Element> multiply_row(const TruncationContext<K>& ctx, const std::vector<typename K::Element>& v,
                                              const Poly<K>& f);

}  // namespace ifilt

#endif  // IFILT_FILTRATION_HPP
