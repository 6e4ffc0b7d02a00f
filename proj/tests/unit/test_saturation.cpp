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

#include "doctest.h"
#include "fixtures.hpp"
#include "ifilt/corpus.hpp"
#include "ifilt/diffop.hpp"
#include "ifilt/saturation.hpp"
#include "ifilt/theta.hpp"
#include "oracle.hpp"

using namespace fx;

namespace {

template <FieldLike K>
oracle::Filtration<K> plain(const FiltrationSpec<K>& F) {
  oracle::Filtration<K> o;
  for (const auto& g : F.generators()) {
    o.fs.push_back(g.f);
    o.levels.push_back(g.level);
  }
  return o;
}

template <FieldLike K>
std::vector<std::string> listing(const FiltrationSpec<K>& F) {
  std::vector<std::string> out;
  for (const auto& g : F.generators()) out.push_back(S(g.f) + " @ " + to_string(g.level));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("D-saturation of the cusp") {
  const auto c2 = ctx(gf(2), 2, 10);
  CHECK(listing(d_saturate(G<FiniteField>(c2, {{"x^2 + y^3", Rational(2)}}))) ==
        std::vector<std::string>{"x^2 + y^3 @ 2", "y^2 @ 1"});
  const auto c0 = ctx(qq(), 2, 10);
  CHECK(listing(d_saturate(G<RationalField>(c0, {{"x^2 + y^3", Rational(2)}}))) ==
        std::vector<std::string>{"2*x @ 1", "3*y^2 @ 1", "x^2 + y^3 @ 2"});
  // fractional level: only |J| < 3/2 contributes
  CHECK(listing(d_saturate(G<RationalField>(c0, {{"x^3", Rational(3, 2)}}))) ==
        std::vector<std::string>{"3*x^2 @ 1/2", "x^3 @ 3/2"});
}

TEST_CASE("D-saturation is idempotent and differentially closed") {
  corpus::Rng rng(53);
  for (int i = 0; i < 30; ++i) {
    const auto k = i % 2 ? gf(3) : gf(2);
    const std::size_t d = 1 + corpus::below(rng, 2);
    const unsigned D = 7;
    const auto c = ctx(k, d, D);
    const oracle::Truncated<FiniteField> T(k, d, D);
    const auto Fd = d_saturate(corpus::random_spec<FiniteField>(c, rng));
    const auto Fdd = d_saturate(Fd);
    for (const Rational& a : {Rational(1, 2), Rational(1), Rational(3, 2), Rational(2), Rational(3)}) {
      const auto Ia = oracle::level_ideal(T, plain(Fd), a, d);
      CHECK(oracle::same_span(Ia, oracle::level_ideal(T, plain(Fdd), a, d)));
      // ∂_J 𝕀_a ⊆ 𝕀_{a-|J|}, compared below degree D + 1 - |J|
      for (const auto& J : monomials_up_to(d, 2)) {
        if (J.is_zero()) continue;
        const unsigned j = J.degree();
        auto target = oracle::level_ideal(T, plain(Fd), a - j, d);
        const auto tail = T.power_m(D + 1 - j);
        for (const auto& r : tail.rows()) target.add(r);
        for (const auto& row : Ia.rows()) CHECK(target.contains(T.vec(hasse_apply(T.poly(row), J))));
      }
    }
  }
}

TEST_CASE("logarithmic saturation without a boundary is plain saturation") {
  corpus::Rng rng(59);
  const auto c = ctx(gf(3), 2, 8);
  for (int i = 0; i < 10; ++i) {
    const auto F = corpus::random_spec<FiniteField>(c, rng);
    CHECK(d_saturate_log(F) == d_saturate(F));
  }
  const auto cb = ctx(gf(3), 2, 8, {false, true});
  const auto Fl = listing(d_saturate_log(G<FiniteField>(cb, {{"x^3 + y^4", Rational(3)}})));
  // y ∂_y keeps the y-power: y^4 -> 4 y^4 = y^4 at level 2
  CHECK(Fl == std::vector<std::string>{"x^3 + y^4 @ 3", "y^4 @ 2"});
}

TEST_CASE("radical probe") {
  const auto c = ctx(gf(2), 2, 10);
  const auto F = G<FiniteField>(c, {{"x^2", Rational(2)}});
  const RadicalProbeBounds b{};
  const auto v = radical_probe(F, P(c, "x"), Rational(1), b);
  CHECK(v.member);
  CHECK(v.witness_n == 2);
  CHECK_FALSE(v.via_continuity);
  CHECK_FALSE(radical_probe(F, P(c, "y"), Rational(1), b).member);
  CHECK_FALSE(radical_probe(F, P(c, "x"), Rational(3, 2), b).member);
  CHECK(frobenius_probe(F, P(c, "x"), Rational(1), b).member);
  CHECK_THROWS_AS(radical_probe(F, P(c, "x"), Rational(0), b), Error);
  const auto q = ctx(qq(), 2, 10);
  const auto Fq = G<RationalField>(q, {{"x^2", Rational(2)}});
  CHECK(radical_probe(Fq, P(q, "x"), Rational(1), b).member);
  CHECK_THROWS_AS(frobenius_probe(Fq, P(q, "x"), Rational(1), b), Error);
  // the witness power must fit under the truncation
  const auto v2 = radical_probe(G<FiniteField>(c, {{"x^2", Rational(1)}}), P(c, "x"), Rational(1, 2), b);
  CHECK(v2.member);
  CHECK(v2.witness_n == 2);
  // x^3 at level 3/4 over (x^4, 1) needs n = 4, i.e. degree 12 > D
  const auto v3 = radical_probe(G<FiniteField>(c, {{"x^4", Rational(1)}}), P(c, "x^3"), Rational(3, 4), b);
  CHECK_FALSE(v3.member);
  CHECK(v3.precision_limited);
}

TEST_CASE("probe-based B-saturation") {
  const auto c = ctx(gf(2), 2, 8);
  const auto B = b_saturate_probe(G<FiniteField>(c, {{"y^2", Rational(2)}}), RadicalProbeBounds{});
  bool added = false;
  for (const auto& e : B.added) added = added || (S(e.f) == "y" && e.level == 1);
  CHECK(added);
  const auto B2 = b_saturate_probe(G<FiniteField>(c, {{"x", Rational(1)}, {"y^2", Rational(2)}}), RadicalProbeBounds{});
  const LevelIdeals<FiniteField> L(B2.result);
  CHECK(L.at(Rational(1))->contains(P(c, "y")));
  // caller candidates that do not certify are rejected, not added
  const std::vector<Generator<FiniteField>> cands{{P(c, "x + y"), Rational(2)}};
  const auto B3 = b_saturate_probe<FiniteField>(G<FiniteField>(c, {{"x^2", Rational(2)}}), RadicalProbeBounds{}, cands);
  bool rejected = false;
  for (const auto& e : B3.rejected) rejected = rejected || e.source == "candidate";
  CHECK(rejected);
}

TEST_CASE("monomial asymptotic order") {
  const std::vector<MultiIndex> cusp{{2, 0}, {0, 3}};
  CHECK(theta_monomial(cusp, MultiIndex{1, 1}) == Rational(5, 6));
  CHECK(oracle::theta_brute({{2, 0}, {0, 3}}, {1, 1}, 30) == Rational(5, 6));
  corpus::Rng rng(61);
  for (int i = 0; i < 40; ++i) {
    std::vector<MultiIndex> I;
    std::vector<std::vector<unsigned>> raw;
    for (std::size_t j = 0, n = 1 + corpus::below(rng, 3); j < n; ++j) {
      std::vector<unsigned> g{static_cast<unsigned>(corpus::below(rng, 4)), static_cast<unsigned>(corpus::below(rng, 4))};
      if (g[0] + g[1] == 0) g[1] = 2;
      raw.push_back(g);
      I.push_back(MultiIndex{g[0], g[1]});
    }
    const std::vector<unsigned> r{static_cast<unsigned>(1 + corpus::below(rng, 3)), static_cast<unsigned>(corpus::below(rng, 3))};
    CHECK(theta_monomial(I, MultiIndex{r[0], r[1]}) == oracle::theta_brute(raw, r, 30));
  }
  const std::vector<MultiIndex> unit{{0, 0}};
  const std::vector<MultiIndex> empty;
  try {
    theta_monomial(unit, MultiIndex{1, 0});
    FAIL("unit ideal accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNotProperIdeal);
  }
  CHECK_THROWS_AS(theta_monomial(empty, MultiIndex{1, 0}), Error);
  const std::vector<Rational> w{Rational(2)};
  const std::vector<MultiIndex> sq{{2, 0}};
  CHECK(weighted_theta(sq, w, MultiIndex{1, 3}) == Rational(1));
}

TEST_CASE("exact simplex") {
  const std::vector<std::vector<Rational>> A{{1, 2}, {3, 1}};
  const std::vector<Rational> b{4, 6}, c{1, 1};
  CHECK(lp_maximize(A, b, c) == Rational(14, 5));
  const std::vector<std::vector<Rational>> A2{{1, -1}};
  const std::vector<Rational> b2{1};
  CHECK_FALSE(lp_maximize(A2, b2, c).has_value());
}
