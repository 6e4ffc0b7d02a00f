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

// Asymptotic order θ for monomial ideals, by exact rational linear
// programming over the Newton polyhedron.

#ifndef IFILT_THETA_HPP
#define IFILT_THETA_HPP

#include <optional>
#include <span>
#include <vector>

#include "ifilt/multi_index.hpp"
#include "ifilt/rational.hpp"

namespace ifilt {

/// max c.x subject to A x <= b, x >= 0, with b >= 0 (the origin is
/// feasible). nullopt when unbounded. Dense simplex, Bland's rule.
std::optional<Rational> lp_maximize(const std::vector<std::vector<Rational>>& A, const std::vector<Rational>& b,
                                    const std::vector<Rational>& c);

/// sup{ m/n : r^n ∈ I^m } for the monomial ideal I generated by X^{g_k}.
/// Throws Error(kNotProperIdeal) when some g_k = 0 and Error(kInvalidArgument)
/// on an empty generator list.
Rational theta_monomial(std::span<const MultiIndex> I, const MultiIndex& r);

/// Weighted variant for a monomial filtration G({(X^{g_k}, w_k)}): the largest
/// level s with (X^r, s) in its integral closure, max Σ w_k λ_k subject to
/// Σ λ_k g_k <= r. Same errors as theta_monomial.
Rational weighted_theta(std::span<const MultiIndex> gens, std::span<const Rational> weights, const MultiIndex& r);

}  // namespace ifilt

#endif  // IFILT_THETA_HPP
