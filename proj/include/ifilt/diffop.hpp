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

// Hasse differential operators in the basis {∂_{X^J}}, logarithmic operators
// X^{J_E}∂_{X^J}, composition, and the order / p^e-power tests built on them.

#ifndef IFILT_DIFFOP_HPP
#define IFILT_DIFFOP_HPP

#include <span>
#include <vector>

#include "ifilt/context.hpp"
#include "ifilt/extended.hpp"
#include "ifilt/poly.hpp"

namespace ifilt {

/// C(I, J) as a field element, via Lucas in positive characteristic.
template <FieldLike K>
typename K::Element binom_in_field(const K& k, const MultiIndex& I, const MultiIndex& J);

/// ∂_{X^J} f, exact: c X^I maps to c C(I,J) X^{I-J}.
template <FieldLike K>
Poly<K> hasse_apply(const Poly<K>& f, const MultiIndex& J);

/// J with every non-boundary component zeroed.
MultiIndex boundary_part(const MultiIndex& J, const std::vector<bool>& boundary);

/// X^{J_E} ∂_{X^J} f truncated to degree D.
template <FieldLike K>
Poly<K> log_apply(const Poly<K>& f, const MultiIndex& J, const TruncationContext<K>& ctx);

/// Finite sum of coefficient * operator terms. Application is exact on
/// polynomials; truncation is applied only by apply_truncated.
template <FieldLike K>
class DiffOp {
 public:
  struct Summand {
    Poly<K> coeff;
    MultiIndex J;
    bool logarithmic = false;
  };

  explicit DiffOp(ContextPtr<K> ctx) : ctx_(std::move(ctx)) {}

  static DiffOp identity(ContextPtr<K> ctx);
  static DiffOp partial(ContextPtr<K> ctx, const MultiIndex& J);
  static DiffOp logarithmic(ContextPtr<K> ctx, const MultiIndex& J);

  const TruncationContext<K>& ctx() const noexcept { return *ctx_; }
  const ContextPtr<K>& ctx_ptr() const noexcept { return ctx_; }
  const std::vector<Summand>& summands() const noexcept { return summands_; }

  void add(Poly<K> coeff, const MultiIndex& J, bool logarithmic = false);

  /// max |J| over summands; 0 for the zero operator.
  unsigned degree() const;
  bool is_zero() const;

  Poly<K> apply(const Poly<K>& f) const;
  Poly<K> apply_truncated(const Poly<K>& f) const;

  /// Same operator with logarithmic summands rewritten as X^{J_E} coefficients
  /// and equal multi-indices merged.
  DiffOp normalized() const;

 private:
  ContextPtr<K> ctx_;
  std::vector<Summand> summands_;
};

/// d1 ∘ d2 expanded in the ∂_{X^J} basis. Throws Error(kContextMismatch).
template <FieldLike K>
DiffOp<K> compose(const DiffOp<K>& d1, const DiffOp<K>& d2);

/// Checks ∂_J(fg) = Σ_{K+L=J} ∂_K(f) ∂_L(g) exactly.
template <FieldLike K>
bool product_rule_check(const Poly<K>& f, const Poly<K>& g, const MultiIndex& J);

/// Min order over generators; "at least D+1" when every generator vanishes
/// to order > D (including the empty and zero lists).
template <FieldLike K>
SatOrd ideal_order(std::span<const Poly<K>> gens, const TruncationContext<K>& ctx);

/// Cross-check via differential operators: the largest n <= D+1 such that every
/// ∂_J g with |J| < n vanishes at the origin.
template <FieldLike K>
SatOrd ideal_order_by_diff(std::span<const Poly<K>> gens, const TruncationContext<K>& ctx);

struct PePowerVerdict {
  bool generated = false;
  /// True when every generator has degree <= D - (p^e - 1), so the truncated
  /// comparison is exact; otherwise the verdict is valid at precision D.
  bool certified = false;
};

/// Compares the images of Diff^{p^e-1}(I) and I in R/m^{D+1}.
/// Throws Error(kCharacteristicZero) in characteristic zero.
template <FieldLike K>
PePowerVerdict is_pe_power_generated(std::span<const Poly<K>> gens, unsigned e, ContextPtr<K> ctx);

/// Every K with K <= J componentwise, in GradedLex order.
std::vector<MultiIndex> sub_indices(const MultiIndex& J);

}  // namespace ifilt

#endif  // IFILT_DIFFOP_HPP
