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

#include "ifilt/theta.hpp"

#include "ifilt/error.hpp"

namespace ifilt {

std::optional<Rational> lp_maximize(const std::vector<std::vector<Rational>>& A, const std::vector<Rational>& b,
                                    const std::vector<Rational>& c) {
  const std::size_t m = A.size(), n = c.size();
  // Tableau rows 0..m-1: [A | I | b]; row m: objective [-c | 0 | 0].
  const std::size_t width = n + m + 1;
  std::vector<std::vector<Rational>> T(m + 1, std::vector<Rational>(width, Rational(0)));
  std::vector<std::size_t> basic(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (A[i].size() != n) throw Error(ErrorCode::kInvalidArgument, "lp: ragged constraint matrix");
    if (b[i] < 0) throw Error(ErrorCode::kInvalidArgument, "lp: negative right-hand side");
    for (std::size_t j = 0; j < n; ++j) T[i][j] = A[i][j];
    T[i][n + i] = 1;
    T[i][width - 1] = b[i];
    basic[i] = n + i;
  }
  for (std::size_t j = 0; j < n; ++j) T[m][j] = -c[j];

  for (;;) {
    std::size_t enter = width;
    for (std::size_t j = 0; j + 1 < width; ++j)
      if (T[m][j] < 0) {
        enter = j;
        break;
      }
    if (enter == width) return T[m][width - 1];

    std::size_t leave = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (T[i][enter] <= 0) continue;
      const Rational ratio = T[i][width - 1] / T[i][enter];
      if (leave == m || ratio < best || (ratio == best && basic[i] < basic[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) return std::nullopt;

    const Rational piv = T[leave][enter];
    for (auto& x : T[leave]) x /= piv;
    for (std::size_t i = 0; i <= m; ++i) {
      if (i == leave || T[i][enter] == 0) continue;
      const Rational f = T[i][enter];
      for (std::size_t j = 0; j < width; ++j) T[i][j] -= f * T[leave][j];
    }
    basic[leave] = enter;
  }
}

Rational weighted_theta(std::span<const MultiIndex> gens, std::span<const Rational> weights, const MultiIndex& r) {
  if (gens.empty()) throw Error(ErrorCode::kInvalidArgument, "theta: empty generator list");
  if (weights.size() != gens.size()) throw Error(ErrorCode::kInvalidArgument, "theta: weight count mismatch");
  const std::size_t d = r.size();
  for (const auto& g : gens) {
    if (g.size() != d) throw Error(ErrorCode::kInvalidArgument, "theta: exponent length mismatch");
    if (g.is_zero()) throw Error(ErrorCode::kNotProperIdeal, "not a proper ideal");
  }
  std::vector<std::vector<Rational>> A(d, std::vector<Rational>(gens.size()));
  std::vector<Rational> b(d);
  for (std::size_t i = 0; i < d; ++i) {
    b[i] = r[i];
    for (std::size_t k = 0; k < gens.size(); ++k) A[i][k] = gens[k][i];
  }
  const auto v = lp_maximize(A, b, std::vector<Rational>(weights.begin(), weights.end()));
  if (!v) throw Error(ErrorCode::kInternal, "theta: unbounded program for a proper ideal");
  return *v;
}

Rational theta_monomial(std::span<const MultiIndex> I, const MultiIndex& r) {
  const std::vector<Rational> ones(I.size(), Rational(1));
  return weighted_theta(I, ones, r);
}

}  // namespace ifilt
