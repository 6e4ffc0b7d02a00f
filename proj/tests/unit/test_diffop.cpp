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
#include "oracle.hpp"

using namespace fx;

namespace {

template <FieldLike K>
typename K::Element oracle_binom(const K& k, const MultiIndex& I, const MultiIndex& J) {
  Integer c = 1;
  for (std::size_t a = 0; a < I.size(); ++a) c *= oracle::binom(I[a], J[a]);
  return k.from_integer(c);
}

template <FieldLike K>
void hasse_basis_law(std::shared_ptr<const K> k) {
  for (std::size_t d = 1; d <= 3; ++d) {
    const unsigned top = d == 3 ? 5 : 7;
    const auto c = ctx(k, d, top);
    for (const auto& I : monomials_up_to(d, top))
      for (const auto& J : monomials_up_to(d, top)) {
        const auto lhs = hasse_apply(Poly<K>::monomial(k, d, I), J);
        Poly<K> rhs(k, d);
        if (J.divides(I)) rhs.add_term(I - J, oracle_binom(*k, I, J));
        REQUIRE(lhs == rhs);
      }
  }
}

}  // namespace

TEST_CASE("Hasse derivative of a monomial") {
  hasse_basis_law(gf(2));
  hasse_basis_law(gf(3));
  hasse_basis_law(gf(5));
  hasse_basis_law(gf(2, 2));
  hasse_basis_law(qq());
}

TEST_CASE("generalized product rule") {
  corpus::Rng rng(17);
  const auto c = ctx(gf(3), 2, 10);
  for (int i = 0; i < 100; ++i) {
    const auto f = corpus::random_poly(*c, rng, 0, 5, 3), g = corpus::random_poly(*c, rng, 0, 5, 3);
    const auto J = monomials_up_to(2, 4)[corpus::below(rng, 15)];
    CHECK(product_rule_check(f, g, J));
    // expand the right-hand side here as well
    Poly<FiniteField> rhs = c->zero_poly();
    for (const auto& A : sub_indices(J)) rhs += hasse_apply(f, A) * hasse_apply(g, J - A);
    CHECK(hasse_apply(f * g, J) == rhs);
  }
}

TEST_CASE("composition of Hasse derivatives") {
  corpus::Rng rng(23);
  for (auto k : {gf(2), gf(3)}) {
    const auto c = ctx(k, 2, 10);
    for (int i = 0; i < 40; ++i) {
      const auto I = monomials_up_to(2, 3)[corpus::below(rng, 10)];
      const auto J = monomials_up_to(2, 3)[corpus::below(rng, 10)];
      const auto f = corpus::random_poly(*c, rng, 0, 8, 4);
      const auto op = compose(DiffOp<FiniteField>::partial(c, I), DiffOp<FiniteField>::partial(c, J));
      const auto expect = hasse_apply(f, I + J).scaled(oracle_binom(*k, I + J, I));
      CHECK(op.apply(f) == expect);
    }
  }
  // ∂_x ∘ ∂_x = 2 ∂_{x^2}, which vanishes in characteristic 2
  const auto c2 = ctx(gf(2), 1, 6);
  const auto sq = compose(DiffOp<FiniteField>::partial(c2, MultiIndex{1}), DiffOp<FiniteField>::partial(c2, MultiIndex{1}));
  CHECK(sq.normalized().is_zero());
  CHECK(DiffOp<FiniteField>::partial(c2, MultiIndex{2}).apply(P(c2, "x^6")) == P(c2, "x^4"));
  CHECK_THROWS_AS(compose(DiffOp<FiniteField>::identity(c2), DiffOp<FiniteField>::identity(ctx(gf(2), 1, 7))), Error);
}

TEST_CASE("logarithmic operators") {
  const auto c = ctx(qq(), 2, 10, {true, false});
  const auto f = P(c, "x^3*y^2 + x*y");
  CHECK(log_apply(f, MultiIndex{1, 0}, *c) == P(c, "3*x^3*y^2 + x*y"));
  CHECK(log_apply(f, MultiIndex{0, 1}, *c) == hasse_apply(f, MultiIndex{0, 1}));
  CHECK(log_apply(f, MultiIndex{2, 0}, *c) == P(c, "3*x^3*y^2"));
  CHECK(boundary_part(MultiIndex{2, 3}, {true, false}) == MultiIndex{2, 0});
  // without a boundary the two families coincide
  const auto plain = ctx(qq(), 2, 10);
  corpus::Rng rng(8);
  for (int i = 0; i < 20; ++i) {
    const auto g = corpus::random_poly(*plain, rng, 0, 6, 3);
    for (const auto& J : monomials_up_to(2, 2)) CHECK(log_apply(g, J, *plain) == hasse_apply(g, J));
  }
  auto op = DiffOp<RationalField>::logarithmic(c, MultiIndex{1, 0});
  CHECK(op.normalized().apply(f) == op.apply(f));
  CHECK(op.degree() == 1);
}

TEST_CASE("ideal order two ways") {
  const auto c = ctx(gf(2), 2, 8);
  const std::vector<Poly<FiniteField>> gens{P(c, "x^2 + y^3"), P(c, "y^5")};
  CHECK(ideal_order<FiniteField>(gens, *c) == SatOrd::finite(2));
  CHECK(ideal_order_by_diff<FiniteField>(gens, *c) == SatOrd::finite(2));
  const std::vector<Poly<FiniteField>> none;
  CHECK(ideal_order<FiniteField>(none, *c) == SatOrd::at_least(9));
  CHECK(ideal_order_by_diff<FiniteField>(none, *c) == SatOrd::at_least(9));
  corpus::Rng rng(4);
  for (int i = 0; i < 50; ++i) {
    std::vector<Poly<FiniteField>> gs{corpus::random_poly(*c, rng, 0, 9, 2), corpus::random_poly(*c, rng, 1, 9, 2)};
    CHECK(ideal_order<FiniteField>(gs, *c) == ideal_order_by_diff<FiniteField>(gs, *c));
  }
}

TEST_CASE("p^e-power generated ideals") {
  const auto c = ctx(gf(2), 2, 10);
  auto gen = [&](std::vector<const char*> fs, unsigned e) {
    std::vector<Poly<FiniteField>> gs;
    for (auto f : fs) gs.push_back(P(c, f));
    return is_pe_power_generated<FiniteField>(gs, e, c);
  };
  CHECK(gen({"x^2", "y^2"}, 1).generated);
  CHECK(gen({"x^2*y^2 + y^4"}, 1).generated);
  CHECK(gen({"x^4 + y^8"}, 2).generated);
  CHECK_FALSE(gen({"x^2 + y"}, 1).generated);
  CHECK_FALSE(gen({"x^3"}, 1).generated);
  CHECK_FALSE(gen({"x^4 + x^2*y^2"}, 2).generated);
  CHECK(gen({"x^2"}, 1).certified);
  CHECK_FALSE(gen({"y^10"}, 1).certified);
  const auto q = ctx(qq(), 1, 4);
  const std::vector<Poly<RationalField>> one{P(q, "x")};
  CHECK_THROWS_AS(is_pe_power_generated<RationalField>(one, 1, q), Error);
}
