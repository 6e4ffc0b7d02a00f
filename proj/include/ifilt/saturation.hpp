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

// 𝔇-saturation by the explicit generator recipe, a bounded membership probe
// for the radical saturation, and the probe-based 𝔅 = 𝔕𝔇 pipeline.

#ifndef IFILT_SATURATION_HPP
#define IFILT_SATURATION_HPP

#include <span>
#include <string>
#include <vector>

#include "ifilt/filtration.hpp"

namespace ifilt {

/// T' = {(∂_{X^J} f, a - |J|) : (f, a) ∈ T, |J| < a}, zero and level <= 0
/// entries dropped.
template <FieldLike K>
FiltrationSpec<K> d_saturate(const FiltrationSpec<K>& F);

/// Same recipe with X^{J_E} ∂_{X^J}; equals d_saturate when the boundary is empty.
template <FieldLike K>
FiltrationSpec<K> d_saturate_log(const FiltrationSpec<K>& F);

struct RadicalProbeBounds {
  unsigned n_max = 8;
  unsigned grid = 64;
};

struct ProbeVerdict {
  bool member = false;
  unsigned witness_n = 0;
  /// The witness was found only at the grid level a - 1/grid (left-limit
  /// test), not at a itself.
  bool via_continuity = false;
  /// Some power f^n with n <= n_max could not be formed within degree D.
  bool precision_limited = false;
  Rational tested_level;
};

/// Member iff f^n ∈ 𝕀_{n a} (exact) or f^n ∈ 𝕀_{n (a - 1/grid)} (continuity)
/// for some n <= n_max with n deg f <= D. Throws Error(kInvalidArgument) for a <= 0.
template <FieldLike K>
ProbeVerdict radical_probe(const LevelIdeals<K>& L, const Poly<K>& f, const Rational& a, const RadicalProbeBounds& bounds);

template <FieldLike K>
ProbeVerdict radical_probe(const FiltrationSpec<K>& F, const Poly<K>& f, const Rational& a, const RadicalProbeBounds& bounds);

/// Only n = p, p^2, ... <= n_max. Throws Error(kCharacteristicZero) in char 0.
template <FieldLike K>
ProbeVerdict frobenius_probe(const LevelIdeals<K>& L, const Poly<K>& f, const Rational& a, const RadicalProbeBounds& bounds);

template <FieldLike K>
ProbeVerdict frobenius_probe(const FiltrationSpec<K>& F, const Poly<K>& f, const Rational& a, const RadicalProbeBounds& bounds);

template <FieldLike K>
struct ProbeLogEntry {
  Poly<K> f;
  Rational level;
  std::string source;  // "pe-root", "theta", "candidate"
  unsigned witness_n = 0;
};

template <FieldLike K>
struct BSaturation {
  FiltrationSpec<K> result;
  std::vector<ProbeLogEntry<K>> added;
  /// Candidates tested and not certified (including continuity-only hits).
  std::vector<ProbeLogEntry<K>> rejected;
};

/// 𝔇-saturate, add every candidate the probe certifies exactly, and
/// 𝔇-saturate again. Candidate pool: p^e-th roots of generators, θ upgrades
/// of variables and generator divisors when every generator is a monomial,
/// and the caller's candidates. Every addition is sound (at precision D).
template <FieldLike K>
BSaturation<K> b_saturate_probe(const FiltrationSpec<K>& F, const RadicalProbeBounds& bounds,
                                std::span<const Generator<K>> candidates = {});

}  // namespace ifilt

#endif  // IFILT_SATURATION_HPP
