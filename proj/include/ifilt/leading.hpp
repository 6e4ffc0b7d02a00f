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

// Leading algebra L(𝕀) = ⊕ L_n, pure parts L_{p^e} ∩ F^e(G_1), leading
// generator systems and the σ sequence.

#ifndef IFILT_LEADING_HPP
#define IFILT_LEADING_HPP

#include <vector>

#include "ifilt/filtration.hpp"

namespace ifilt {

template <FieldLike K>
class LeadingAlgebra {
 public:
  using Vec = typename Subspace<K>::Vec;

  LeadingAlgebra(ContextPtr<K> ctx, std::vector<Subspace<K>> slices, std::vector<std::vector<Poly<K>>> lifts)
      : ctx_(std::move(ctx)), slices_(std::move(slices)), lifts_(std::move(lifts)) {}

  const TruncationContext<K>& ctx() const noexcept { return *ctx_; }
  const ContextPtr<K>& ctx_ptr() const noexcept { return ctx_; }
  /// Homogeneous subspace L_n of G_n, reduced echelon basis; n <= D.
  const Subspace<K>& slice(unsigned n) const { return slices_.at(n); }
  std::size_t dim(unsigned n) const { return slices_.at(n).dim(); }
  /// lifts(n)[r] is an element of 𝕀_n ∩ m^n (mod m^{D+1}) whose degree-n
  /// part is basis row r of L_n.
  const std::vector<Poly<K>>& lifts(unsigned n) const { return lifts_.at(n); }
  /// The element of 𝕀_n ∩ m^n with leading form `form`, combined from the
  /// echelon lifts. Throws Error(kInternal) if form is not in L_n.
  Poly<K> lift(unsigned n, const Poly<K>& form) const;

 private:
  ContextPtr<K> ctx_;
  std::vector<Subspace<K>> slices_;
  std::vector<std::vector<Poly<K>>> lifts_;
};

/// L_n for n = 0..D from the ideals 𝕀_n ∩ m^n.
template <FieldLike K>
LeadingAlgebra<K> leading_algebra(const LevelIdeals<K>& L);
template <FieldLike K>
LeadingAlgebra<K> leading_algebra(const FiltrationSpec<K>& F);

template <FieldLike K>
struct PurePart {
  unsigned e = 0;
  Subspace<K> space;             // inside G_{p^e}
  std::vector<Poly<K>> basis;    // reduced echelon basis, forms of degree p^e
  std::vector<Poly<K>> roots;    // linear forms with roots[i]^{p^e} = basis[i]
  std::size_t dim() const noexcept { return basis.size(); }
};

/// L_{p^e} ∩ span{x_i^{p^e}}. e = 0 gives L_1. Throws Error(kCharacteristicZero)
/// for e > 0 in characteristic zero and Error(kRangeViolation) when p^e > D.
template <FieldLike K>
PurePart<K> pure_part(const LeadingAlgebra<K>& L, unsigned e);

template <FieldLike K>
struct LgsEntry {
  Poly<K> h;             // representative modulo m^{D+1}
  unsigned e = 0;
  Poly<K> leading_form;  // degree-p^e part of h
  Poly<K> root;          // linear form with root^{p^e} = leading_form
};

struct SigmaSeq {
  std::size_t d = 0;
  std::vector<std::size_t> pure_dims;  // l^pure_{p^e}, e = 0..E_max
  std::vector<std::size_t> values;     // d - pure_dims[e]
  /// Last two computed pure dimensions agree (single-term sequences in char 0
  /// count as stabilized).
  bool stabilized = false;
  /// Prefix shown in reports: through one step past the last strict increase
  /// of the pure dimension (length 1 in characteristic zero).
  std::size_t reported_length = 0;
  std::vector<std::size_t> reported() const {
    return std::vector<std::size_t>(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(reported_length));
  }
};

/// floor(log_p D) in positive characteristic, 0 in characteristic zero.
unsigned default_emax(std::uint32_t p, unsigned D);

template <FieldLike K>
struct LeadingAnalysis {
  LeadingAlgebra<K> algebra;
  std::vector<PurePart<K>> pure;
  std::vector<LgsEntry<K>> lgs;
  SigmaSeq sigma;
  unsigned emax = 0;
};

/// Pure parts for e = 0..E_max, LGS extraction by extending Frobenius images
/// of earlier roots (echelon order), and σ. In characteristic zero E_max is 0.
template <FieldLike K>
LeadingAnalysis<K> analyze_leading(const LevelIdeals<K>& L, unsigned emax);

template <FieldLike K>
std::vector<LgsEntry<K>> extract_lgs(const FiltrationSpec<K>& F, unsigned emax);

template <FieldLike K>
SigmaSeq sigma(const FiltrationSpec<K>& F, unsigned emax);

/// Conditions (i) and (ii) of a leading generator system against L for all
/// e <= emax: h ∈ m^{p^e}, leading form pure and in L^pure_{p^e}, and the
/// Frobenius-lifted leading forms form a basis of every pure part.
template <FieldLike K>
bool lgs_conditions_hold(const LeadingAlgebra<K>& L, const std::vector<LgsEntry<K>>& lgs, unsigned emax);

/// Degree-n span of all products of LGS leading forms; compared with L_n
/// this is the pure-generation statement.
template <FieldLike K>
Subspace<K> generated_by_leading_forms(ContextPtr<K> ctx, const std::vector<LgsEntry<K>>& lgs, unsigned n);

}  // namespace ifilt

#endif  // IFILT_LEADING_HPP
