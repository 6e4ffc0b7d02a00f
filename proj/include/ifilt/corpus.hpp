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

// Seeded random inputs shared by `verify`, the property tests and the
// acceptance runner: scalars, polynomials, r.f.g. specs and H-systems.

#ifndef IFILT_CORPUS_HPP
#define IFILT_CORPUS_HPP

#include <algorithm>
#include <random>
#include <vector>

#include "ifilt/filtration.hpp"
#include "ifilt/invariants.hpp"

namespace ifilt::corpus {

using Rng = std::mt19937_64;

inline std::uint64_t below(Rng& rng, std::uint64_t n) { return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(rng); }

inline FiniteField::Element random_scalar(const FiniteField& k, Rng& rng) {
  return static_cast<FiniteField::Element>(below(rng, k.order()));
}
inline Rational random_scalar(const RationalField&, Rng& rng) {
  const auto num = static_cast<std::int64_t>(below(rng, 9)) - 4;
  const auto den = static_cast<std::int64_t>(below(rng, 3)) + 1;
  return Rational(num, den);
}

template <FieldLike K>
typename K::Element random_nonzero(const K& k, Rng& rng) {
  for (;;) {
    auto c = random_scalar(k, rng);
    if (!k.is_zero(c)) return c;
  }
}

/// Sum of `terms` random monomials with degrees in [lo, hi], nonzero
/// coefficients (cancellation can still shorten it).
template <FieldLike K>
Poly<K> random_poly(const TruncationContext<K>& ctx, Rng& rng, unsigned lo, unsigned hi, unsigned terms) {
  Poly<K> f = ctx.zero_poly();
  if (hi < lo) return f;
  for (unsigned t = 0; t < terms; ++t) {
    const unsigned deg = lo + static_cast<unsigned>(below(rng, hi - lo + 1));
    const auto monos = monomials_of_degree(ctx.nvars(), deg);
    f.add_term(monos[below(rng, monos.size())], random_nonzero(ctx.field(), rng));
  }
  return f;
}

/// A random linear form with at least one nonzero coefficient.
template <FieldLike K>
Poly<K> random_linear(const TruncationContext<K>& ctx, Rng& rng) {
  for (;;) {
    Poly<K> f = ctx.zero_poly();
    for (std::size_t i = 0; i < ctx.nvars(); ++i) f.add_term(MultiIndex::unit(ctx.nvars(), i), random_scalar(ctx.field(), rng));
    if (!f.is_zero()) return f;
  }
}

struct SpecShape {
  unsigned max_gens = 2;
  unsigned max_degree = 4;
  unsigned max_terms = 3;
  unsigned max_den = 4;
  /// Levels may exceed the order of the generator; 𝔇-saturation then meets a
  /// unit at positive level and the filtration is trivial.
  bool allow_trivial = false;
};

/// G(T) with generators in m and positive levels of denominator <= max_den,
/// each level at most the order of its generator unless allow_trivial.
template <FieldLike K>
FiltrationSpec<K> random_spec(const ContextPtr<K>& ctx, Rng& rng, const SpecShape& shape = {}) {
  FiltrationSpec<K> F(ctx);
  const unsigned n = 1 + static_cast<unsigned>(below(rng, shape.max_gens));
  const unsigned hi = std::min(shape.max_degree, ctx->D());
  for (unsigned i = 0; i < n; ++i) {
    const unsigned lo = 1 + static_cast<unsigned>(below(rng, hi));
    Poly<K> f = random_poly(*ctx, rng, lo, hi, 1 + static_cast<unsigned>(below(rng, shape.max_terms)));
    if (f.is_zero()) continue;
    const auto den = 1 + static_cast<std::int64_t>(below(rng, shape.max_den));
    const unsigned top = shape.allow_trivial ? hi + 2 : f.order().value();
    const auto num = 1 + static_cast<std::int64_t>(below(rng, top * static_cast<std::uint64_t>(den)));
    F.add(std::move(f), Rational(num, den));
  }
  return F;
}

/// A random H-system: independent linear forms l_1..l_N, exponents e_l <=
/// max_e with p^{e_l} <= D, and h_l = l^{p^{e_l}} plus terms of higher order.
template <FieldLike K>
HSystem<K> random_hsystem(const ContextPtr<K>& ctx, Rng& rng, unsigned max_e, unsigned max_n) {
  const K& k = ctx->field();
  const std::uint32_t p = k.characteristic();
  const std::size_t N = 1 + below(rng, std::min<std::size_t>(max_n, ctx->nvars()));
  std::vector<Poly<K>> ls;
  Echelon<K> lin(&k, ctx->nvars());
  while (ls.size() < N) {
    Poly<K> l = random_linear(*ctx, rng);
    std::vector<typename K::Element> v(ctx->nvars());
    for (std::size_t i = 0; i < ctx->nvars(); ++i) v[i] = l.coefficient(MultiIndex::unit(ctx->nvars(), i));
    if (lin.insert(std::move(v))) ls.push_back(std::move(l));
  }
  std::vector<HEntry<K>> entries;
  for (const auto& l : ls) {
    unsigned e = 0;
    if (p != 0) {
      e = static_cast<unsigned>(below(rng, max_e + 1));
      while (e > 0 && ipow(p, e) > ctx->D()) --e;
    }
    const unsigned q = p == 0 ? 1 : static_cast<unsigned>(ipow(p, e));
    Poly<K> h = frobenius_power(l, e);
    if (q + 1 <= ctx->D()) h += random_poly(*ctx, rng, q + 1, std::min(ctx->D(), q + 3), 2);
    entries.push_back(HEntry<K>{std::move(h), e});
  }
  return HSystem<K>::make(ctx, std::move(entries), true);
}

}  // namespace ifilt::corpus

#endif  // IFILT_CORPUS_HPP
