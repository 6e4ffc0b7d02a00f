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

// Order modulo an H-system, μ̃, the D_u / F_v operators, and the checkers for
// the supporting lemmas, the coefficient lemma and the nonsingularity
// principle. Checkers return booleans so a harness can aggregate them.

#ifndef IFILT_INVARIANTS_HPP
#define IFILT_INVARIANTS_HPP

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ifilt/diffop.hpp"
#include "ifilt/extended.hpp"
#include "ifilt/filtration.hpp"
#include "ifilt/leading.hpp"

namespace ifilt {

template <FieldLike K>
struct HEntry {
  Poly<K> h;
  unsigned e = 0;
};

/// H-system: entries (h_l, e_l) with (i) pure leading forms and (ii) independent
/// roots. After permuting variables the L x L minor M = [∂_{x_i^{p^e}} h_l]
/// (row i, column l; i, l <= L) is invertible, and C is its
/// inverse modulo m^{D+1}.
template <FieldLike K>
class HSystem {
 public:
  /// Verifies conditions (i) and (ii); throws Error(kHypothesisViolated)
  /// otherwise. `weak` records that the system came from the caller rather
  /// than from extract_lgs (spanning is not validated).
  static HSystem make(ContextPtr<K> ctx, std::vector<HEntry<K>> entries, bool weak = false);
  static HSystem from_lgs(ContextPtr<K> ctx, const std::vector<LgsEntry<K>>& lgs);

  const TruncationContext<K>& ctx() const noexcept { return *ctx_; }
  const ContextPtr<K>& ctx_ptr() const noexcept { return ctx_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  bool weak() const noexcept { return weak_; }
  /// Entries in the caller's coordinates, sorted by e.
  const std::vector<HEntry<K>>& entries() const noexcept { return entries_; }
  std::vector<Poly<K>> polys() const;
  /// Entries rewritten in the working coordinates (x'_j = x_{perm[j]}).
  const std::vector<HEntry<K>>& working() const noexcept { return working_; }
  const std::vector<std::size_t>& perm() const noexcept { return perm_; }
  Poly<K> to_working(const Poly<K>& f) const { return f.permuted(perm_); }

  unsigned e_min() const noexcept { return e_; }
  /// Number of entries with e = e_min.
  std::size_t L() const noexcept { return L_; }
  /// Next distinct exponent, absent when all entries share e_min.
  std::optional<unsigned> e_next() const noexcept { return e_next_; }
  /// p^{e_min} (1 in characteristic zero).
  unsigned q() const noexcept { return q_; }
  /// Entry (i, j) of C = M^{-1} modulo m^{D+1}.
  const Poly<K>& c(std::size_t i, std::size_t j) const { return C_.at(i * L_ + j); }
  /// u ranges over 0 <= u < p^{e' - e}; returns the bound (0 = unbounded).
  std::uint64_t u_bound() const noexcept { return u_bound_; }

 private:
  HSystem() = default;

  ContextPtr<K> ctx_;
  std::vector<HEntry<K>> entries_, working_;
  std::vector<std::size_t> perm_;
  unsigned e_ = 0, q_ = 1;
  std::size_t L_ = 0;
  std::optional<unsigned> e_next_;
  std::uint64_t u_bound_ = 0;
  std::vector<Poly<K>> C_;
  bool weak_ = false;
};

/// ord_H with cached images of m^n + (H). Thread-safe.
template <FieldLike K>
class OrdH {
 public:
  explicit OrdH(const HSystem<K>& H);
  OrdH(ContextPtr<K> ctx, std::span<const Poly<K>> hs);

  /// Infinity when f mod m^{D+1} lies in (H) and deg f <= D; "at least D+1"
  /// when it lies there only after truncating f; otherwise the largest n with
  /// f ∈ m^n + (H).
  SatOrd operator()(const Poly<K>& f) const;

 private:
  const Subspace<K>& level(unsigned n) const;

  ContextPtr<K> ctx_;
  Subspace<K> ideal_;
  mutable std::mutex mu_;
  mutable std::map<unsigned, std::unique_ptr<Subspace<K>>> sums_;
};

template <FieldLike K>
SatOrd ord_H(const Poly<K>& f, const HSystem<K>& H);

/// min over positive-level generators of ord_H(f)/a; G(∅) gives infinity,
/// all generators inside (H) give "infinity at precision".
template <FieldLike K>
MuValue mu_tilde(const FiltrationSpec<K>& F, const HSystem<K>& H);

/// D_u = Σ_{|T|=u} c^T ∂_{p^e T} in working coordinates (c^T uses row L of C).
/// D_0 = id, D_u = 0 for u < 0. Throws Error(kRangeViolation) for u >= p^{e'-e}.
template <FieldLike K>
DiffOp<K> build_Du(const HSystem<K>& H, long u);

/// D_u(β h_l) ≡ (D_u β) h_l + δ_{L,l} D_{u-1} β mod m^{r + p^{e_l} - u p^e + 1},
/// compared below degree D+1. β is in working coordinates; l is 1-based.
/// Throws Error(kRangeViolation) when β ∉ m^r or u, l are out of range.
template <FieldLike K>
bool supporting1_check(const HSystem<K>& H, const Poly<K>& beta, std::size_t l, long u, unsigned r);

/// (Σ R h_l) ∩ m^r = Σ m^{r - p^{e_l}} h_l in R/m^{D+1}.
template <FieldLike K>
bool supporting3_check(const HSystem<K>& H, unsigned r);

/// 𝕀_a = Σ_B 𝕀'_{a-|[B]|} H^B with 𝕀'_t = 𝕀_t ∩ m^{ceil(μ t)}, B over
/// |[B]| < a + p^{e_N}. Throws Error(kHypothesisViolated) when μ >= μ_H.
template <FieldLike K>
bool coefficient_decompose_check(const LevelIdeals<K>& L, const HSystem<K>& H, const Rational& a, const Rational& mu);

/// max(0, μ̃ - 1/grid) for finite positive μ̃ (or its lower bound), -1 for μ̃ = 0,
/// ceil(a) * D when infinite.
Rational default_coefficient_mu(const MuValue& mu_tilde, const Rational& a, unsigned D, unsigned grid);

struct NonsingularityReport {
  bool generated_by_H = false;
  std::optional<Rational> failing_level;
  bool all_level_one = false;
  std::optional<std::size_t> failing_entry;
  bool in_support = false;        // μ_P >= 1 at the origin
  bool origin_in_V_H = false;     // every h vanishes at the origin
  bool support_matches = false;
  std::size_t linear_rank = 0;    // rank of the degree-1 parts of H
  bool nonsingular_V_H = false;   // linear_rank == #H
  std::vector<std::string> diagnosis;
  bool passed() const noexcept { return generated_by_H && all_level_one && support_matches; }
};

/// Theorem checks at precision D. Throws Error(kHypothesisViolated) when μ̃
/// is not infinite.
template <FieldLike K>
NonsingularityReport nonsingularity_check(const LevelIdeals<K>& L, const HSystem<K>& H);

namespace detail {

/// F_v = Σ_{u=1}^v (-1)^u h_L^{u-1} D_u applied to f (working coordinates).
template <FieldLike K>
Poly<K> apply_Fv(const HSystem<K>& H, long v, const Poly<K>& f);

/// F_v congruence for α, β (working coordinates); hypotheses
/// are checked and reported as Error(kRangeViolation).
template <FieldLike K>
bool supporting2_check(const HSystem<K>& H, const Poly<K>& alpha, std::span<const Poly<K>> betas, long v, unsigned s);

}  // namespace detail

}  // namespace ifilt

#endif  // IFILT_INVARIANTS_HPP
