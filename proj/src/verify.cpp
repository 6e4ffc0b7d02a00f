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

#include "ifilt/verify.hpp"

#include <chrono>
#include <functional>

#include "ifilt/corpus.hpp"
#include "ifilt/diffop.hpp"
#include "ifilt/invariants.hpp"
#include "ifilt/leading.hpp"
#include "ifilt/poly_io.hpp"
#include "ifilt/saturation.hpp"
#include "ifilt/theta.hpp"

namespace ifilt {

bool VerifySummary::passed() const noexcept {
  for (const auto& s : suites)
    if (!s.passed()) return false;
  return !suites.empty();
}

Json to_json(const VerifySummary& s) {
  Json suites = Json::array();
  for (const auto& r : s.suites)
    suites.push_back(Json{{"name", r.name},
                          {"law", r.law},
                          {"instances", r.instances},
                          {"failures", r.failures},
                          {"first_failure", r.first_failure},
                          {"passed", r.passed()}});
  return Json{{"seed", s.seed}, {"passed", s.passed()}, {"suites", suites}};
}

namespace {

using corpus::Rng;
using corpus::below;

struct Tally {
  SuiteResult& r;
  void check(bool ok, const std::function<std::string()>& what) {
    ++r.instances;
    if (ok) return;
    if (r.failures++ == 0) r.first_failure = what();
  }
};

template <FieldLike K>
using FieldPtr = std::shared_ptr<const K>;

FieldPtr<FiniteField> gf(std::uint32_t p, unsigned m = 1) {
  return std::make_shared<const FiniteField>(m == 1 ? FiniteField::prime(p) : FiniteField::extension(p, m));
}
FieldPtr<RationalField> qq() { return std::make_shared<const RationalField>(); }

/// Calls fn(field) for F_2, F_3, F_5 and Q.
template <class Fn>
void each_field(Fn&& fn) {
  fn(gf(2));
  fn(gf(3));
  fn(gf(5));
  fn(qq());
}

/// Calls fn(ctx) on a fresh random context over F_2 or F_3 with d <= 3.
template <class Fn>
void each_positive_context(Rng& rng, int count, unsigned maxD, Fn&& fn) {
  for (int i = 0; i < count; ++i) {
    const std::uint32_t p = below(rng, 2) == 0 ? 2 : 3;
    const std::size_t d = 1 + below(rng, 3);
    const unsigned D = std::max(4u, maxD - static_cast<unsigned>(below(rng, 3)) - (d == 3 ? 2u : 0u));
    fn(TruncationContext<FiniteField>::make(gf(p), d, D));
  }
}

template <FieldLike K>
std::string str(const Poly<K>& f) {
  return to_string(f);
}

// --- scalar and operator laws ------------------------------------------------

void hasse_basis(Rng&, SuiteResult& r) {
  Tally t{r};
  each_field([&](auto k) {
    using K = std::remove_const_t<typename decltype(k)::element_type>;
    for (std::size_t d = 1; d <= 3; ++d) {
      const auto monos = monomials_up_to(d, d == 3 ? 4 : 6);
      for (const auto& I : monos)
        for (const auto& J : monos) {
          Poly<K> want(k, d);
          if (J.divides(I)) {
            Integer c = 1;
            for (std::size_t a = 0; a < d; ++a) c *= binom(I[a], J[a]);
            want = Poly<K>::monomial(k, d, I - J, k->from_integer(c));
          }
          const Poly<K> got = hasse_apply(Poly<K>::monomial(k, d, I), J);
          t.check(got == want, [&] { return k->name() + ": d(" + str(Poly<K>::monomial(k, d, I)) + ") by J = " + str(Poly<K>::monomial(k, d, J)); });
        }
    }
  });
}

void product_rule(Rng& rng, SuiteResult& r) {
  Tally t{r};
  each_field([&](auto k) {
    using K = std::remove_const_t<typename decltype(k)::element_type>;
    for (int i = 0; i < 60; ++i) {
      const std::size_t d = 1 + below(rng, 3);
      auto ctx = TruncationContext<K>::make(k, d, 12);
      const Poly<K> f = corpus::random_poly(*ctx, rng, 0, 4, 3);
      const Poly<K> g = corpus::random_poly(*ctx, rng, 0, 4, 3);
      const auto Js = monomials_up_to(d, 4);
      const MultiIndex J = Js[below(rng, Js.size())];
      Poly<K> rhs(k, d);
      for (const auto& J1 : sub_indices(J)) rhs += hasse_apply(f, J1) * hasse_apply(g, J - J1);
      const bool ok = hasse_apply(f * g, J) == rhs && product_rule_check(f, g, J);
      t.check(ok, [&] { return k->name() + ": f = " + str(f) + ", g = " + str(g); });
    }
  });
}

void lucas(Rng&, SuiteResult& r) {
  Tally t{r};
  for (std::uint32_t p : {2u, 3u, 5u, 7u})
    for (std::uint64_t i = 0; i <= 100; ++i)
      for (std::uint64_t j = 0; j <= 100; ++j) {
        const Integer want = j > i ? Integer(0) : binom(i, j) % p;
        t.check(Integer(binom_mod_p(i, j, p)) == want,
                [&] { return "C(" + std::to_string(i) + "," + std::to_string(j) + ") mod " + std::to_string(p); });
      }
}

void lucas_scaling(Rng&, SuiteResult& r) {
  Tally t{r};
  for (std::uint32_t p : {2u, 3u, 5u})
    for (unsigned e = 1; e <= 3; ++e) {
      const std::uint64_t q = ipow(p, e);
      for (std::uint64_t i = 0; i <= 30; ++i)
        for (std::uint64_t j = 0; j <= 30; ++j)
          t.check(binom_mod_p(q * i, q * j, p) == binom_mod_p(i, j, p),
                  [&] { return "p = " + std::to_string(p) + ", e = " + std::to_string(e) + ", i = " + std::to_string(i) + ", j = " + std::to_string(j); });
    }
}

void frobenius_roots(Rng&, SuiteResult& r) {
  Tally t{r};
  for (auto [p, m] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}, {2u, 3u}, {3u, 2u}, {2u, 4u}, {5u, 2u}, {3u, 3u}}) {
    const auto k = gf(p, m);
    for (FiniteField::Element c = 0; c < k->order(); ++c)
      for (unsigned e = 0; e <= 3; ++e)
        t.check(k->frobenius(k->frobenius_root(c, e), e) == c && k->pow(k->frobenius_root(c, e), ipow(p, e)) == c,
                [&] { return k->name() + ": root of " + k->to_string(c); });
  }
}

void field_axioms(Rng& rng, SuiteResult& r) {
  Tally t{r};
  auto run = [&](const auto& k) {
    for (int i = 0; i < 200; ++i) {
      const auto a = corpus::random_scalar(k, rng), b = corpus::random_scalar(k, rng), c = corpus::random_scalar(k, rng);
      bool ok = k.add(k.add(a, b), c) == k.add(a, k.add(b, c)) && k.mul(k.mul(a, b), c) == k.mul(a, k.mul(b, c)) &&
                k.mul(a, k.add(b, c)) == k.add(k.mul(a, b), k.mul(a, c)) && k.add(a, k.neg(a)) == k.zero() &&
                k.mul(a, b) == k.mul(b, a);
      if (!k.is_zero(a)) ok = ok && k.mul(a, k.inv(a)) == k.one();
      t.check(ok, [&] { return k.name() + ": " + k.to_string(a) + ", " + k.to_string(b) + ", " + k.to_string(c); });
    }
  };
  for (auto [p, m] : {std::pair{2u, 1u}, {3u, 1u}, {7u, 1u}, {2u, 2u}, {3u, 2u}, {2u, 4u}}) run(*gf(p, m));
  run(RationalField{});
}

void hasse_composition(Rng& rng, SuiteResult& r) {
  Tally t{r};
  each_field([&](auto k) {
    using K = std::remove_const_t<typename decltype(k)::element_type>;
    for (int i = 0; i < 40; ++i) {
      const std::size_t d = 1 + below(rng, 3);
      auto ctx = TruncationContext<K>::make(k, d, 12);
      const Poly<K> f = corpus::random_poly(*ctx, rng, 0, 7, 4);
      const auto Js = monomials_up_to(d, 3);
      const MultiIndex I = Js[below(rng, Js.size())], J = Js[below(rng, Js.size())];
      Integer c = 1;
      for (std::size_t a = 0; a < d; ++a) c *= binom(I[a] + J[a], I[a]);
      const bool ok = hasse_apply(hasse_apply(f, J), I) == hasse_apply(f, I + J).scaled(k->from_integer(c));
      t.check(ok, [&] { return k->name() + ": f = " + str(f); });
    }
  });
}

void order_by_diff(Rng& rng, SuiteResult& r) {
  Tally t{r};
  each_field([&](auto k) {
    using K = std::remove_const_t<typename decltype(k)::element_type>;
    for (int i = 0; i < 25; ++i) {
      const std::size_t d = 1 + below(rng, 3);
      auto ctx = TruncationContext<K>::make(k, d, 8);
      std::vector<Poly<K>> gens;
      for (std::size_t j = 0, n = 1 + below(rng, 3); j < n; ++j)
        gens.push_back(corpus::random_poly(*ctx, rng, static_cast<unsigned>(below(rng, 4)), 9, 2));
      t.check(ideal_order<K>(gens, *ctx) == ideal_order_by_diff<K>(gens, *ctx), [&] { return k->name() + ": " + str(gens[0]); });
    }
  });
}

void pe_power_generation(Rng& rng, SuiteResult& r) {
  Tally t{r};
  for (int i = 0; i < 24; ++i) {
    const std::uint32_t p = i % 2 == 0 ? 2 : 3;
    const unsigned e = 1 + static_cast<unsigned>(below(rng, 2));
    const std::size_t d = 1 + below(rng, 3);
    auto ctx = TruncationContext<FiniteField>::make(gf(p), d, d == 3 ? 9 : 12);
    std::vector<Poly<FiniteField>> gens;
    for (std::size_t j = 0, n = 1 + below(rng, 2); j < n; ++j)
      gens.push_back(frobenius_power(corpus::random_poly(*ctx, rng, 1, 2, 2), e));
    const auto v = is_pe_power_generated<FiniteField>(gens, e, ctx);
    t.check(v.generated, [&] { return "GF(" + std::to_string(p) + "), e = " + std::to_string(e) + ": " + str(gens[0]); });
  }
}

// --- saturation -------------------------------------------------------------

std::vector<Rational> level_grid(const FiltrationSpec<FiniteField>& F, std::size_t cap) {
  const FiltrationSpec<FiniteField> N = F.normalized();
  Rational top = 0;
  for (const auto& g : N.generators()) top = std::max(top, g.level);
  const std::int64_t delta = to_int64(N.level_denominator());
  std::vector<Rational> out;
  for (std::int64_t k = 1; Rational(k, delta) <= top && out.size() < cap; ++k) out.emplace_back(k, delta);
  return out;
}

void d_saturation_laws(Rng& rng, SuiteResult& r) {
  Tally t{r};
  each_positive_context(rng, 50, 8, [&](const ContextPtr<FiniteField>& ctx) {
    const auto F = corpus::random_spec<FiniteField>(ctx, rng);
    const auto Fd = d_saturate(F);
    const LevelIdeals<FiniteField> L1(Fd), L2(d_saturate(Fd));
    for (const Rational& a : level_grid(Fd, 12))
      t.check(Subspace<FiniteField>(*L1.at(a)) == Subspace<FiniteField>(*L2.at(a)),
              [&] { return "idempotence at level " + to_string(a); });
    const auto N = Fd.normalized();
    for (const auto& g : N.generators())
      for (std::size_t i = 0; i < ctx->nvars(); ++i) {
        const auto dg = hasse_apply(g.f, MultiIndex::unit(ctx->nvars(), i));
        t.check(L1.at(g.level - 1)->contains_truncated(dg), [&] { return "d/dx_" + std::to_string(i) + " of " + str(g.f); });
      }
  });
}

void probe_differentiation(Rng& rng, SuiteResult& r) {
  Tally t{r};
  each_positive_context(rng, 24, 8, [&](const ContextPtr<FiniteField>& ctx) {
    const auto F = corpus::random_spec<FiniteField>(ctx, rng, corpus::SpecShape{2, 3, 2, 2});
    const LevelIdeals<FiniteField> L(F), Ld(d_saturate(F));
    const RadicalProbeBounds bounds{};
    std::vector<Poly<FiniteField>> cands;
    for (std::size_t i = 0; i < ctx->nvars(); ++i) cands.push_back(ctx->var(i));
    for (const auto& g : F.generators())
      for (unsigned e = 1; e <= 2; ++e)
        if (auto root = pe_power_root(g.f, e)) cands.push_back(*root);
    for (const auto& c : cands)
      for (const Rational& a : {Rational(1, 2), Rational(1), Rational(3, 2), Rational(2)}) {
        const auto v = radical_probe(L, c, a, bounds);
        if (!v.member || v.via_continuity) continue;
        for (const auto& J : monomials_up_to(ctx->nvars(), static_cast<unsigned>(to_int64(ceil(a))) - 1)) {
          const Rational b = a - J.degree();
          const Poly<FiniteField> dc = hasse_apply(c, J);
          if (b <= 0 || dc.is_zero()) continue;
          t.check(radical_probe(Ld, dc, b, bounds).member, [&] { return "derivative of " + str(c) + " @ " + to_string(a); });
        }
      }
  });
}

void theta_oracle(Rng& rng, SuiteResult& r) {
  Tally t{r};
  // max m with r^n ∈ a^m for monomial a, by enumerating generator counts
  auto brute = [](const std::vector<MultiIndex>& gens, const MultiIndex& x) {
    Rational best = 0;
    for (unsigned n = 1; n <= 30; ++n) {
      std::function<void(std::size_t, std::vector<long>, unsigned)> rec = [&](std::size_t l, std::vector<long> room, unsigned m) {
        if (l == gens.size()) {
          best = std::max(best, Rational(m, n));
          return;
        }
        for (unsigned c = 0;; ++c) {
          rec(l + 1, room, m + c);
          bool fits = true;
          for (std::size_t i = 0; i < room.size(); ++i) {
            room[i] -= gens[l][i];
            fits = fits && room[i] >= 0;
          }
          if (!fits) break;
        }
      };
      std::vector<long> room(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) room[i] = static_cast<long>(n) * x[i];
      rec(0, room, 0);
    }
    return best;
  };
  {
    const std::vector<MultiIndex> a{{2, 0}, {0, 3}};
    const Rational th = theta_monomial(std::span<const MultiIndex>(a), MultiIndex{1, 1});
    t.check(th == Rational(5, 6) && brute(a, MultiIndex{1, 1}) == th, [] { return "(x^2, y^3) / xy"; });
  }
  for (int i = 0; i < 50; ++i) {
    std::vector<MultiIndex> a;
    for (std::size_t j = 0, n = 1 + below(rng, 2); j < n; ++j) {
      MultiIndex m{static_cast<unsigned>(below(rng, 4)), static_cast<unsigned>(below(rng, 4))};
      if (m.is_zero()) m = MultiIndex{1, 0};
      a.push_back(m);
    }
    MultiIndex x{static_cast<unsigned>(below(rng, 3)), static_cast<unsigned>(below(rng, 3))};
    if (x.is_zero()) x = MultiIndex{0, 1};
    t.check(theta_monomial(std::span<const MultiIndex>(a), x) == brute(a, x), [&] { return "random monomial instance " + std::to_string(i); });
  }
}

// --- leading algebra ---------------------------------------------------------

struct LeadingCase {
  ContextPtr<FiniteField> ctx;
  FiltrationSpec<FiniteField> Fd;
};

std::vector<LeadingCase> leading_corpus(Rng& rng, int count) {
  std::vector<LeadingCase> out;
  each_positive_context(rng, count, 8, [&](const ContextPtr<FiniteField>& ctx) {
    out.push_back(LeadingCase{ctx, d_saturate(corpus::random_spec<FiniteField>(ctx, rng))});
  });
  return out;
}

void pure_generation(const std::vector<LeadingCase>& cases, SuiteResult& r) {
  Tally t{r};
  for (const auto& c : cases) {
    const LevelIdeals<FiniteField> L(c.Fd);
    const auto A = analyze_leading(L, default_emax(c.ctx->field().characteristic(), c.ctx->D()));
    for (unsigned n = 0; n <= c.ctx->D(); ++n)
      t.check(generated_by_leading_forms(c.ctx, A.lgs, n) == A.algebra.slice(n), [&] { return "degree " + std::to_string(n); });
  }
}

void lgs_conditions(const std::vector<LeadingCase>& cases, SuiteResult& r) {
  Tally t{r};
  for (const auto& c : cases) {
    const LevelIdeals<FiniteField> L(c.Fd);
    const auto A = analyze_leading(L, default_emax(c.ctx->field().characteristic(), c.ctx->D()));
    t.check(lgs_conditions_hold(A.algebra, A.lgs, A.emax), [&] { return "spec with " + std::to_string(c.Fd.size()) + " generators"; });
  }
}

// --- H-systems ----------------------------------------------------------------

std::vector<HSystem<FiniteField>> hsystem_corpus(Rng& rng, const std::vector<LeadingCase>& cases, int random_count) {
  std::vector<HSystem<FiniteField>> out;
  for (const auto& c : cases) {
    const auto lgs = extract_lgs(c.Fd, default_emax(c.ctx->field().characteristic(), c.ctx->D()));
    if (!lgs.empty()) out.push_back(HSystem<FiniteField>::from_lgs(c.ctx, lgs));
  }
  each_positive_context(rng, random_count, 8, [&](const ContextPtr<FiniteField>& ctx) {
    out.push_back(corpus::random_hsystem<FiniteField>(ctx, rng, 2, 3));
  });
  return out;
}

std::string describe(const HSystem<FiniteField>& H) {
  std::string out = H.ctx().field().name() + " D=" + std::to_string(H.ctx().D()) + " H = {";
  for (std::size_t l = 0; l < H.size(); ++l)
    out += (l ? ", (" : "(") + str(H.entries()[l].h) + ", e=" + std::to_string(H.entries()[l].e) + ")";
  return out + "}";
}

void supporting1(Rng& rng, const std::vector<HSystem<FiniteField>>& hs, SuiteResult& r) {
  Tally t{r};
  for (const auto& H : hs) {
    const auto& ctx = H.ctx();
    const long umax = H.u_bound() == 0 ? 3 : std::min<long>(3, static_cast<long>(H.u_bound()) - 1);
    for (int i = 0; i < 4; ++i) {
      const unsigned rr = static_cast<unsigned>(below(rng, 3));
      const Poly<FiniteField> beta = corpus::random_poly(ctx, rng, rr, std::min(ctx.D(), rr + 3), 3);
      const long u = static_cast<long>(below(rng, static_cast<std::uint64_t>(umax) + 1));
      for (std::size_t l = 1; l <= H.size(); ++l)
        t.check(supporting1_check(H, beta, l, u, rr), [&] { return describe(H) + "; beta = " + str(beta) + ", l = " + std::to_string(l) + ", u = " + std::to_string(u) + ", r = " + std::to_string(rr); });
    }
  }
}

void supporting2(Rng& rng, const std::vector<HSystem<FiniteField>>& hs, SuiteResult& r) {
  Tally t{r};
  for (const auto& H : hs) {
    const auto& ctx = H.ctx();
    const long vmax = H.u_bound() == 0 ? 3 : std::min<long>(3, static_cast<long>(H.u_bound()) - 1);
    if (vmax < 1) continue;
    for (int i = 0; i < 3; ++i) {
      const unsigned s = static_cast<unsigned>(H.q() + below(rng, 3));
      std::vector<Poly<FiniteField>> betas;
      Poly<FiniteField> alpha = corpus::random_poly(ctx, rng, s + 1, s + 3, 2);
      for (const auto& en : H.working()) {
        const unsigned q = static_cast<unsigned>(ipow(ctx.field().characteristic(), en.e));
        const unsigned lo = s > q ? s - q : 0;
        betas.push_back(corpus::random_poly(ctx, rng, lo, lo + 2, 2));
        alpha -= betas.back() * en.h;
      }
      const long v = 1 + static_cast<long>(below(rng, static_cast<std::uint64_t>(vmax)));
      t.check(detail::supporting2_check<FiniteField>(H, alpha, betas, v, s), [&] { return describe(H) + "; s = " + std::to_string(s) + ", v = " + std::to_string(v); });
    }
  }
}

void supporting3(const std::vector<HSystem<FiniteField>>& hs, SuiteResult& r) {
  Tally t{r};
  for (const auto& H : hs)
    for (unsigned rr = 0; rr <= H.ctx().D(); rr += 2)
      t.check(supporting3_check(H, rr), [&] { return "r = " + std::to_string(rr); });
}

void coefficient_lemma(const std::vector<LeadingCase>& cases, SuiteResult& r) {
  Tally t{r};
  for (const auto& c : cases) {
    const LevelIdeals<FiniteField> L(c.Fd);
    const auto lgs = extract_lgs(c.Fd, default_emax(c.ctx->field().characteristic(), c.ctx->D()));
    const auto H = HSystem<FiniteField>::from_lgs(c.ctx, lgs);
    const MuValue mt = mu_tilde(c.Fd, H);
    for (const Rational& a : level_grid(c.Fd, 6)) {
      const Rational mu = default_coefficient_mu(mt, a, c.ctx->D(), 64);
      t.check(coefficient_decompose_check(L, H, a, mu), [&] { return "level " + to_string(a) + ", mu = " + to_string(mu); });
    }
  }
}

void ord_h_laws(Rng& rng, const std::vector<HSystem<FiniteField>>& hs, SuiteResult& r) {
  Tally t{r};
  for (const auto& H : hs) {
    const auto& ctx = H.ctx();
    const OrdH<FiniteField> ord(H);
    const OrdH<FiniteField> plain(H.ctx_ptr(), {});
    for (int i = 0; i < 4; ++i) {
      const Poly<FiniteField> f = corpus::random_poly(ctx, rng, 0, 5, 3), g = corpus::random_poly(ctx, rng, 1, 5, 3);
      const SatOrd of = ord(f), og = ord(g), ofg = ord(f * g);
      if (!of.is_infinite() && !og.is_infinite())
        t.check(ofg.certainly_at_least(std::min(of.value() + og.value(), ctx.D() + 1)), [&] { return "f = " + str(f) + ", g = " + str(g); });
      const SatOrd op = f.order();
      t.check(of.certainly_at_least(std::min(op.is_infinite() ? ctx.D() + 1 : op.value(), ctx.D() + 1)), [&] { return "ord_H < ord_P at " + str(f); });
      if (!f.is_zero() && op.value() <= ctx.D()) t.check(plain(f) == SatOrd::finite(op.value()), [&] { return "H empty at " + str(f); });
    }
  }
}

void mu_tilde_choice(const std::vector<LeadingCase>& cases, SuiteResult& r) {
  Tally t{r};
  for (const auto& c : cases) {
    const std::size_t d = c.ctx->nvars();
    if (d < 2) continue;
    const unsigned emax = default_emax(c.ctx->field().characteristic(), c.ctx->D());
    const auto H1 = HSystem<FiniteField>::from_lgs(c.ctx, extract_lgs(c.Fd, emax));
    // LGS computed after reversing the variables, mapped back.
    std::vector<std::size_t> perm(d);
    for (std::size_t i = 0; i < d; ++i) perm[i] = d - 1 - i;
    FiltrationSpec<FiniteField> Fp(c.ctx);
    for (const auto& g : c.Fd.generators()) Fp.add(g.f.permuted(perm), g.level);
    std::vector<HEntry<FiniteField>> back;
    for (const auto& en : extract_lgs(Fp, emax)) back.push_back(HEntry<FiniteField>{en.h.permuted(perm), en.e});
    const auto H2 = HSystem<FiniteField>::make(c.ctx, back, false);
    t.check(mu_tilde(c.Fd, H1) == mu_tilde(c.Fd, H2), [&] { return "mu_tilde differs between LGS choices"; });
  }
}

void nonsingularity(Rng& rng, SuiteResult& r) {
  Tally t{r};
  auto run = [&](const FiltrationSpec<FiniteField>& F, bool probe, std::optional<bool> expect) {
    const auto Fb = probe ? b_saturate_probe(F, RadicalProbeBounds{}).result : d_saturate(F);
    const LevelIdeals<FiniteField> L(Fb);
    const auto H = HSystem<FiniteField>::from_lgs(F.ctx_ptr(), extract_lgs(Fb, default_emax(F.ctx().field().characteristic(), F.ctx().D())));
    if (!mu_tilde(Fb, H).is_infinite()) return;
    const auto rep = nonsingularity_check(L, H);
    if (expect) t.check(rep.passed() == *expect, [&] { return "unexpected verdict"; });
    if (rep.passed()) t.check(rep.linear_rank == H.size(), [&] { return "V(H) singular on a pass"; });
  };
  const auto k = gf(2);
  const auto ctx = TruncationContext<FiniteField>::make(k, 2, 8);
  {
    FiltrationSpec<FiniteField> F(ctx);
    F.add(ctx->var(0), 1);
    F.add(ctx->var(1).pow(2), 2);
    run(F, true, true);
  }
  {
    FiltrationSpec<FiniteField> F(ctx);
    F.add(ctx->var(1).pow(2), 2);
    run(F, false, false);
  }
  each_positive_context(rng, 16, 6, [&](const ContextPtr<FiniteField>& c) {
    FiltrationSpec<FiniteField> F(c);
    const auto p = c->field().characteristic();
    F.add(corpus::random_linear(*c, rng), 1);
    F.add(frobenius_power(corpus::random_linear(*c, rng), 1), Rational(p));
    run(F, true, std::nullopt);
  });
}

}  // namespace

VerifySummary run_verify(const VerifyOptions& opts) {
  VerifySummary out;
  out.seed = opts.seed;
  Rng rng(opts.seed);
  std::string corpus_error;
  auto suite = [&](std::string name, std::string law, const std::function<void(SuiteResult&)>& body) {
    SuiteResult r;
    r.name = std::move(name);
    r.law = std::move(law);
    const auto t0 = std::chrono::steady_clock::now();
    try {
      body(r);
    } catch (const std::exception& e) {
      ++r.failures;
      if (r.first_failure.empty()) r.first_failure = std::string("exception: ") + e.what();
    }
    if (r.instances == 0 && r.first_failure.empty()) r.first_failure = corpus_error.empty() ? "no instances" : corpus_error;
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.suites.push_back(std::move(r));
  };
  suite("hasse-basis", "Hasse derivative of a monomial is a binomial multiple", [&](auto& r) { hasse_basis(rng, r); });
  suite("product-rule", "generalized Leibniz rule for Hasse derivatives", [&](auto& r) { product_rule(rng, r); });
  suite("lucas", "binomials mod p via base-p digits agree with factorials", [&](auto& r) { lucas(rng, r); });
  suite("lucas-scaling", "C(p^e i, p^e j) = C(i, j) mod p", [&](auto& r) { lucas_scaling(rng, r); });
  suite("frobenius-roots", "Frobenius is bijective on finite fields", [&](auto& r) { frobenius_roots(rng, r); });
  suite("field-axioms", "ring and inverse laws in F_q and Q", [&](auto& r) { field_axioms(rng, r); });
  suite("hasse-composition", "composition of Hasse derivatives", [&](auto& r) { hasse_composition(rng, r); });
  suite("order-by-diff", "ideal order equals the differential-operator order", [&](auto& r) { order_by_diff(rng, r); });
  suite("pe-power-generation", "p^e-th power generated ideals are closed under Diff^{p^e-1}", [&](auto& r) { pe_power_generation(rng, r); });
  suite("d-saturation", "D-saturation is idempotent and differentially closed", [&](auto& r) { d_saturation_laws(rng, r); });
  suite("probe-differentiation", "differentiating radical-probe members stays in the probe of the D-saturation",
        [&](auto& r) { probe_differentiation(rng, r); });
  suite("theta-monomial", "asymptotic order of monomial ideals by LP equals brute force", [&](auto& r) { theta_oracle(rng, r); });
  // A broken library can throw while the corpus is built; the suites that
  // depend on it then run on nothing and fail.
  std::vector<LeadingCase> cases;
  std::vector<HSystem<FiniteField>> hs;
  try {
    cases = leading_corpus(rng, 40);
    hs = hsystem_corpus(rng, cases, 30);
  } catch (const std::exception& e) {
    corpus_error = std::string("corpus construction: ") + e.what();
  }
  suite("pure-generation", "leading algebra generated by LGS leading forms", [&](auto& r) { pure_generation(cases, r); });
  suite("lgs-conditions", "LGS leading forms give compatible pure-part bases", [&](auto& r) { lgs_conditions(cases, r); });
  suite("supporting-1", "D_u(beta h_l) congruence", [&](auto& r) { supporting1(rng, hs, r); });
  suite("supporting-2", "F_v congruence for relations of H", [&](auto& r) { supporting2(rng, hs, r); });
  suite("supporting-3", "(H) meets m^r in the span of m^{r - p^e_l} h_l", [&](auto& r) { supporting3(hs, r); });
  suite("coefficient-lemma", "I_a = sum over B of I'_{a-|B|} H^B", [&](auto& r) { coefficient_lemma(cases, r); });
  suite("ord-h", "ord_H is superadditive and dominates ord_P", [&](auto& r) { ord_h_laws(rng, hs, r); });
  suite("mu-tilde-choice", "mu_tilde does not depend on the LGS choice", [&](auto& r) { mu_tilde_choice(cases, r); });
  suite("nonsingularity", "B-saturated with infinite mu_tilde gives a nonsingular level-one LGS", [&](auto& r) { nonsingularity(rng, r); });
  return out;
}

}  // namespace ifilt
