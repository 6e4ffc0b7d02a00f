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
#include "oracle.hpp"

using namespace fx;

TEST_CASE("graded order puts x^2 before xy before y^2") {
  const auto m = monomials_of_degree(2, 2);
  REQUIRE(m.size() == 3);
  CHECK(m[0] == MultiIndex{2, 0});
  CHECK(m[1] == MultiIndex{1, 1});
  CHECK(m[2] == MultiIndex{0, 2});
  CHECK(GradedLex{}(MultiIndex{0, 1}, MultiIndex{2, 0}));
  // C(d + n, n) monomials of degree <= n
  for (std::size_t d = 1; d <= 4; ++d)
    for (unsigned n = 0; n <= 6; ++n) CHECK(Integer(monomials_up_to(d, n).size()) == oracle::binom(static_cast<unsigned>(d) + n, n));
  CHECK_THROWS_AS(MultiIndex(9), Error);
}

TEST_CASE("printing and parsing round trip") {
  const auto c = ctx(gf(3), 2, 10);
  CHECK(S(P(c, "y^3 + x^2")) == "x^2 + y^3");
  CHECK(S(P(c, "2*x*y + 4")) == "1 + 2*x*y");
  CHECK(S(P(c, "(x + y)^3")) == "x^3 + y^3");
  CHECK(S(P(c, "x - x")) == "0");
  const auto q = ctx(qq(), 2, 10);
  CHECK(S(P(q, "x/2 - 3*y^2")) == "1/2*x - 3*y^2");
  const auto c4 = ctx(gf(2, 2), 2, 10);
  CHECK(S(P(c4, "a*x + (a+1)*y")) == "a*x + (a + 1)*y");
  CHECK_THROWS_AS(P(c, "x +"), Error);
  CHECK_THROWS_AS(P(c, "z"), Error);
  try {
    P(c, "x^");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kSyntax);
  }
  corpus::Rng rng(5);
  for (int i = 0; i < 50; ++i) {
    const auto f = corpus::random_poly(*q, rng, 0, 5, 4);
    CHECK(P(q, S(f)) == f);
  }
}

TEST_CASE("truncated multiplication commutes with truncation") {
  corpus::Rng rng(11);
  const auto c = ctx(gf(5), 3, 6);
  for (int i = 0; i < 60; ++i) {
    const auto f = corpus::random_poly(*c, rng, 0, 5, 4), g = corpus::random_poly(*c, rng, 0, 5, 4);
    CHECK(mul_trunc(f, g, 6) == (f * g).truncated(6));
    CHECK(f * g == g * f);
    // order is additive in a domain
    if (!f.is_zero() && !g.is_zero()) CHECK((f * g).order().value() == f.order().value() + g.order().value());
  }
}

TEST_CASE("graded components add back up") {
  corpus::Rng rng(3);
  const auto c = ctx(qq(), 2, 8);
  for (int i = 0; i < 30; ++i) {
    const auto f = corpus::random_poly(*c, rng, 0, 7, 5);
    Poly<QQ> sum = c->zero_poly();
    for (unsigned n = 0; n <= f.degree(); ++n) sum += graded_component(f, n);
    CHECK(sum == f);
  }
  CHECK(order_at_origin(c->zero_poly()).is_infinite());
  CHECK(order_at_origin(P(c, "x^3 + x*y")) == SatOrd::finite(2));
}

TEST_CASE("Frobenius powers and their roots") {
  const auto c = ctx(gf(3), 2, 12);
  CHECK(frobenius_power(P(c, "x + 2*y"), 1) == P(c, "x^3 + 2*y^3"));
  CHECK(frobenius_power(P(c, "x + y"), 1) == P(c, "(x + y)^3"));
  CHECK(*pe_power_root(P(c, "x^9 + y^9"), 2) == P(c, "x + y"));
  CHECK_FALSE(pe_power_root(P(c, "x^3 + y"), 1).has_value());
  corpus::Rng rng(2);
  const auto c8 = ctx(gf(2, 3), 2, 12);
  for (int i = 0; i < 30; ++i) {
    const auto f = corpus::random_poly(*c8, rng, 0, 3, 3);
    CHECK(*pe_power_root(frobenius_power(f, 2), 2) == f);
    CHECK(frobenius_power(f, 1) == f * f);
  }
  const auto q = ctx(qq(), 2, 4);
  CHECK_THROWS_AS(frobenius_power(P(q, "x"), 1), Error);
}

TEST_CASE("mixing fields is rejected") {
  const auto a = ctx(gf(2), 2, 4), b = ctx(gf(3), 2, 4);
  CHECK_THROWS_AS(P(a, "x") + P(b, "x"), Error);
}
