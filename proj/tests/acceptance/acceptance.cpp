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

// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Values are checked against the test-side oracles in
// tests/support and the frozen brute-force output in tests/oracles.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "fixtures.hpp"
#include "ifilt/corpus.hpp"
#include "ifilt/diffop.hpp"
#include "ifilt/invariants.hpp"
#include "ifilt/leading.hpp"
#include "ifilt/saturation.hpp"
#include "ifilt/theta.hpp"
#include "json.hpp"
#include "oracle.hpp"

using namespace fx;
using corpus::below;
using corpus::Rng;
using Json = nlohmann::json;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::string first_failure;
  std::size_t cases = 0;

  void check(bool ok, const std::function<std::string()>& what) {
    ++cases;
    if (ok || !pass) {
      pass = pass && ok;
      return;
    }
    pass = false;
    first_failure = what();
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fixed(double s) {
  std::ostringstream o;
  o.precision(2);
  o << std::fixed << s;
  return o.str();
}

template <FieldLike K>
std::vector<std::string> listing(const FiltrationSpec<K>& F) {
  std::vector<std::string> out;
  for (const auto& g : F.generators()) out.push_back(S(g.f) + " @ " + to_string(g.level));
  std::sort(out.begin(), out.end());
  return out;
}

/// Grid k/δ up to the top level, δ the level denominator.
template <FieldLike K>
std::vector<Rational> level_grid(const FiltrationSpec<K>& F, std::size_t cap) {
  const auto N = F.normalized();
  Rational top = 0;
  for (const auto& g : N.generators()) top = std::max(top, g.level);
  const auto delta = to_int64(N.level_denominator());
  std::vector<Rational> out;
  for (std::int64_t k = 1; Rational(k, delta) <= top && out.size() < cap; ++k) out.emplace_back(k, delta);
  return out;
}

// --- 1 --------------------------------------------------------------------

template <FieldLike K>
void hasse_basis(std::shared_ptr<const K> k, const std::vector<std::vector<Integer>>& C, Outcome& o) {
  for (std::size_t d = 1; d <= 3; ++d) {
    const auto monos = monomials_up_to(d, 8);
    for (const auto& I : monos) {
      const auto xI = Poly<K>::monomial(k, d, I);
      for (const auto& J : monos) {
        Poly<K> expect(k, d);
        if (J.divides(I)) {
          Integer c = 1;
          for (std::size_t a = 0; a < d; ++a) c *= C[I[a]][J[a]];
          expect.add_term(I - J, k->from_integer(c));
        }
        o.check(hasse_apply(xI, J) == expect, [&] { return k->name() + ": " + S(xI); });
      }
    }
  }
}

Outcome criterion_hasse_basis() {
  Outcome o;
  const auto t0 = Clock::now();
  std::vector<std::vector<Integer>> C(9, std::vector<Integer>(9));
  for (unsigned n = 0; n <= 8; ++n)
    for (unsigned j = 0; j <= 8; ++j) C[n][j] = oracle::binom(n, j);
  hasse_basis(gf(2), C, o);
  hasse_basis(gf(3), C, o);
  hasse_basis(gf(5), C, o);
  hasse_basis(qq(), C, o);
  const double s = seconds_since(t0);
  o.check(s < 10, [&] { return "took " + fixed(s) + " s"; });
  o.detail = std::to_string(o.cases - 1) + " (I, J) pairs over GF(2), GF(3), GF(5), QQ in " + fixed(s) + " s";
  return o;
}

// --- 2 --------------------------------------------------------------------

template <FieldLike K>
void product_rule(std::shared_ptr<const K> k, Rng& rng, Outcome& o) {
  for (int i = 0; i < 500; ++i) {
    const std::size_t d = 1 + below(rng, 3);
    const auto c = ctx(k, d, 12);
    const auto f = corpus::random_poly(*c, rng, 0, 5, 3), g = corpus::random_poly(*c, rng, 0, 5, 3);
    const auto Js = monomials_up_to(d, 5);
    const auto J = Js[below(rng, Js.size())];
    Poly<K> rhs(k, d);
    for (const auto& A : monomials_up_to(d, J.degree()))
      if (A.divides(J)) rhs += hasse_apply(f, A) * hasse_apply(g, J - A);
    o.check(hasse_apply(f * g, J) == rhs && product_rule_check(f, g, J), [&] { return k->name() + ": f = " + S(f) + ", g = " + S(g); });
  }
}

Outcome criterion_product_rule() {
  Outcome o;
  Rng rng(2);
  product_rule(gf(2), rng, o);
  product_rule(gf(3), rng, o);
  product_rule(gf(5), rng, o);
  product_rule(qq(), rng, o);
  o.detail = std::to_string(o.cases) + " random (f, g, J) triples, 500 per field";
  return o;
}

// --- 3 --------------------------------------------------------------------

Outcome criterion_lucas() {
  Outcome o;
  std::vector<Integer> fact(201);
  fact[0] = 1;
  for (unsigned n = 1; n <= 200; ++n) fact[n] = fact[n - 1] * n;
  auto C = [&](unsigned n, unsigned k) { return k > n ? Integer(0) : fact[n] / (fact[k] * fact[n - k]); };
  for (std::uint32_t p : {2u, 3u, 5u, 7u})
    for (unsigned i = 0; i <= 200; ++i)
      for (unsigned j = 0; j <= 200; ++j) {
        const auto expect = static_cast<std::uint32_t>(static_cast<std::uint64_t>(C(i, j) % p));
        o.check(binom_mod_p(i, j, p) == expect, [&] { return "C(" + std::to_string(i) + ", " + std::to_string(j) + ") mod " + std::to_string(p); });
      }
  const std::size_t lucas_cases = o.cases;
  for (std::uint32_t p : {2u, 3u, 5u, 7u})
    for (unsigned e = 1; e <= 3; ++e) {
      const auto q = static_cast<unsigned>(ipow(p, e));
      for (unsigned i = 0; i <= 30; ++i)
        for (unsigned j = 0; j <= 30; ++j) {
          const auto expect = static_cast<std::uint32_t>(static_cast<std::uint64_t>(C(i, j) % p));
          bool ok = binom_mod_p(q * i, q * j, p) == expect;
          if (q * i <= 200) ok = ok && static_cast<std::uint64_t>(C(q * i, q * j) % p) == expect;
          o.check(ok, [&] { return "scaling p = " + std::to_string(p) + ", e = " + std::to_string(e); });
        }
    }
  o.detail = std::to_string(lucas_cases) + " Lucas values against factorials, " + std::to_string(o.cases - lucas_cases) +
             " scaling identities";
  return o;
}

// --- 4 --------------------------------------------------------------------

/// Monomial ideals in 2 variables with minimal generators of degree 1..top,
/// as antichains ordered by x-exponent.
void antichains(unsigned top, std::vector<std::vector<MultiIndex>>& out) {
  std::vector<MultiIndex> cur;
  std::function<void(int, unsigned)> rec = [&](int last_a, unsigned last_b) {
    if (!cur.empty()) out.push_back(cur);
    for (unsigned a = static_cast<unsigned>(last_a + 1); a <= top; ++a)
      for (unsigned b = 0; b < last_b && a + b <= top; ++b) {
        if (a + b == 0) continue;
        cur.push_back(MultiIndex{a, b});
        rec(static_cast<int>(a), b);
        cur.pop_back();
      }
  };
  rec(-1, top + 1);
}

/// Brute force over F_2: does the ideal equal the one generated by every g^2
/// that lies in it, g ranging over all polynomials of degree <= 2?
bool squares_generate_gf2(const oracle::Truncated<FiniteField>& T, const ContextPtr<FiniteField>& c,
                          const std::vector<Poly<FiniteField>>& gens) {
  const auto I = T.ideal(gens);
  const auto monos = monomials_up_to(2, 2);
  std::vector<Poly<FiniteField>> squares;
  for (unsigned mask = 1; mask < (1u << monos.size()); ++mask) {
    Poly<FiniteField> g = c->zero_poly();
    for (std::size_t b = 0; b < monos.size(); ++b)
      if (mask >> b & 1) g.add_term(monos[b], 1);
    const auto g2 = T.mul(g, g);
    if (I.contains(T.vec(g2))) squares.push_back(g2);
  }
  return oracle::same_span(I, T.ideal(squares));
}

/// Brute force for a monomial ideal I over F_p: the p-th powers inside I are
/// sums of c^p m^p with each m^p ∈ I, so I is p-th-power generated iff the
/// monomials m^p in I (deg m <= p) generate it.
bool powers_generate_monomial(const oracle::Truncated<FiniteField>& T, std::uint32_t p,
                              const std::vector<Poly<FiniteField>>& gens) {
  const auto I = T.ideal(gens);
  std::vector<Poly<FiniteField>> powers;
  for (const auto& m : monomials_up_to(2, p)) {
    const auto mp = T.monomial({p * m[0], p * m[1]});
    if (I.contains(T.vec(mp))) powers.push_back(mp);
  }
  return oracle::same_span(I, T.ideal(powers));
}

Outcome criterion_pe_power() {
  Outcome o;
  Rng rng(4);
  int forward = 0;
  for (int i = 0; i < 120; ++i) {
    const std::uint32_t p = i % 2 ? 3 : 2;
    const unsigned e = 1 + static_cast<unsigned>(below(rng, 2));
    const std::size_t d = 1 + below(rng, 3);
    const unsigned D = d == 3 ? 9 : 12;
    const auto c = ctx(gf(p), d, D);
    const unsigned q = static_cast<unsigned>(ipow(p, e));
    std::vector<Poly<FiniteField>> gens;
    for (std::size_t j = 0, n = 1 + below(rng, 3); j < n; ++j) {
      const auto g = corpus::random_poly(*c, rng, 1, std::max(1u, D / q), 2);
      if (!g.is_zero()) gens.push_back(frobenius_power(g, e));
    }
    ++forward;
    o.check(is_pe_power_generated<FiniteField>(gens, e, c).generated, [&] { return "forward: " + S(gens[0]); });
  }
  std::size_t converse = 0;
  for (std::uint32_t p : {2u, 3u}) {
    const unsigned top = p * p;
    const unsigned D = top + p - 1;
    const auto k = gf(p);
    const auto c = ctx(k, 2, D);
    const oracle::Truncated<FiniteField> T(k, 2, D);
    std::vector<std::vector<MultiIndex>> ideals;
    antichains(top, ideals);
    for (const auto& mons : ideals) {
      std::vector<Poly<FiniteField>> gens;
      for (const auto& m : mons) gens.push_back(Poly<FiniteField>::monomial(k, 2, m));
      const auto v = is_pe_power_generated<FiniteField>(gens, 1, c);
      const bool brute = p == 2 ? squares_generate_gf2(T, c, gens) : powers_generate_monomial(T, p, gens);
      ++converse;
      o.check(v.certified && v.generated == brute, [&] { return "converse GF(" + std::to_string(p) + "): " + S(gens[0]) + ", ..."; });
    }
  }
  o.detail = std::to_string(forward) + " random p^e-power ideals, " + std::to_string(converse) +
             " monomial ideals (2 variables, degree <= p^2) against brute force";
  return o;
}

// --- 5 --------------------------------------------------------------------

Outcome criterion_d_saturation() {
  Outcome o;
  Rng rng(5);
  int specs = 0;
  for (int i = 0; i < 60; ++i) {
    const auto k = i % 2 ? gf(3) : gf(2);
    const std::size_t d = 1 + below(rng, 3);
    const auto c = ctx(k, d, d == 3 ? 6 : 8);
    const auto F = corpus::random_spec<FiniteField>(c, rng, corpus::SpecShape{2, 4, 3, 4});
    const auto Fd = d_saturate(F);
    const LevelIdeals<FiniteField> L1(Fd), L2(d_saturate(Fd));
    ++specs;
    for (const Rational& a : level_grid(Fd, 16)) {
      o.check(Subspace<FiniteField>(*L1.at(a)) == Subspace<FiniteField>(*L2.at(a)), [&] { return "idempotence at " + to_string(a); });
      // ∂_J 𝕀_a ⊆ 𝕀_{a-|J|} modulo m^{D+1-|J|}
      for (const auto& J : monomials_up_to(d, 2)) {
        if (J.is_zero()) continue;
        const auto target = sum<FiniteField>(*L1.at(a - J.degree()), power_m<FiniteField>(c->D() + 1 - J.degree(), c));
        for (const auto& f : L1.at(a)->basis_polys())
          o.check(target.contains_truncated(hasse_apply(f, J)), [&] { return "closure at " + to_string(a) + " for " + S(f); });
      }
    }
  }
  o.detail = std::to_string(specs) + " random specs, " + std::to_string(o.cases) + " level and closure checks";
  return o;
}

// --- 6 --------------------------------------------------------------------

struct Curated {
  std::uint32_t p;
  std::size_t d;
  unsigned D;
  std::vector<std::pair<const char*, Rational>> gens;
};

std::vector<Curated> curated_corpus() {
  using R = Rational;
  return {
      {2, 2, 10, {{"x^2 + y^3", R(2)}}},
      {2, 2, 8, {{"x^2", R(2)}}},
      {2, 2, 8, {{"y^2", R(2)}}},
      {2, 2, 8, {{"x", R(1)}, {"y^2", R(2)}}},
      {2, 2, 8, {{"x^2 + x*y^2", R(2)}}},
      {2, 2, 8, {{"x^4 + y^5", R(4)}}},
      {2, 2, 8, {{"x*y", R(2)}}},
      {2, 2, 8, {{"x^2*y", R(3, 2)}}},
      {2, 2, 8, {{"x^2 + y^2", R(2)}, {"x*y^2", R(3)}}},
      {2, 3, 6, {{"x^2 + y*z", R(2)}}},
      {2, 3, 6, {{"x^2 + y^2 + z^3", R(2)}}},
      {2, 2, 8, {{"x^3 + y^4", R(3, 2)}}},
      {3, 2, 9, {{"x^3 + y^4", R(3)}}},
      {3, 2, 9, {{"x^3", R(3)}}},
      {3, 2, 9, {{"x^3 + x*y^3", R(3)}}},
      {3, 2, 8, {{"x^2 + y^3", R(2)}}},
      {3, 2, 8, {{"x*y", R(2)}, {"y^3", R(3)}}},
      {3, 3, 6, {{"x^3 + y^3 + z^4", R(3)}}},
      {3, 2, 9, {{"x^3 + y^5", R(5, 2)}}},
      {3, 2, 9, {{"x^3*y^3", R(6)}}},
      {3, 2, 8, {{"x + y^3", R(1)}, {"y^3", R(3)}}},
      {2, 2, 8, {{"x^2*y^2", R(4)}, {"x^3", R(2)}}},
  };
}

FiltrationSpec<FiniteField> build(const Curated& s) {
  const auto c = ctx(gf(s.p), s.d, s.D);
  FiltrationSpec<FiniteField> F(c);
  for (const auto& [f, a] : s.gens) F.add(P(c, f), a);
  return F;
}

Outcome criterion_probe_differentiation() {
  Outcome o;
  const RadicalProbeBounds bounds{};
  std::size_t members = 0, specs = 0;
  for (const auto& s : curated_corpus()) {
    const auto F = build(s);
    const auto& c = F.ctx_ptr();
    ++specs;
    const LevelIdeals<FiniteField> L(F), Ld(d_saturate(F));
    std::vector<Poly<FiniteField>> cands;
    for (std::size_t i = 0; i < s.d; ++i) cands.push_back(c->var(i));
    if (s.d >= 2) cands.push_back(c->var(0) + c->var(1));
    for (const auto& g : F.generators()) {
      cands.push_back(g.f);
      for (unsigned e = 1; e <= 2; ++e)
        if (auto r = pe_power_root(g.f, e)) cands.push_back(*r);
    }
    for (const auto& f : cands)
      for (const Rational& a : {Rational(1, 2), Rational(1), Rational(3, 2), Rational(2), Rational(3)}) {
        const auto v = radical_probe(L, f, a, bounds);
        if (!v.member || v.via_continuity) continue;
        ++members;
        for (const auto& J : monomials_up_to(s.d, static_cast<unsigned>(to_int64(ceil(a))) - 1)) {
          const Rational b = a - J.degree();
          const auto df = hasse_apply(f, J);
          if (b <= 0 || df.is_zero()) continue;
          o.check(radical_probe(Ld, df, b, bounds).member, [&] { return "derivative of " + S(f) + " @ " + to_string(a); });
        }
      }
  }
  o.check(members >= 20, [&] { return "only " + std::to_string(members) + " probe members"; });
  o.detail = std::to_string(specs) + " curated specs, " + std::to_string(members) + " probe members, " +
             std::to_string(o.cases - 1) + " differentiated re-certifications";
  return o;
}

// --- 7 --------------------------------------------------------------------

Outcome criterion_theta() {
  Outcome o;
  const std::vector<MultiIndex> cusp{{2, 0}, {0, 3}};
  const Rational v = theta_monomial(cusp, MultiIndex{1, 1});
  o.check(v == Rational(5, 6) && oracle::theta_brute({{2, 0}, {0, 3}}, {1, 1}, 30) == Rational(5, 6),
          [&] { return "(x^2, y^3) / xy gave " + to_string(v); });
  Rng rng(7);
  for (int i = 0; i < 60; ++i) {
    std::vector<MultiIndex> I;
    std::vector<std::vector<unsigned>> raw;
    for (std::size_t j = 0, n = 1 + below(rng, 3); j < n; ++j) {
      std::vector<unsigned> g{static_cast<unsigned>(below(rng, 4)), static_cast<unsigned>(below(rng, 4))};
      if (g[0] + g[1] == 0) g[0] = 1;
      raw.push_back(g);
      I.push_back(MultiIndex{g[0], g[1]});
    }
    const std::vector<unsigned> r{static_cast<unsigned>(below(rng, 4)), static_cast<unsigned>(1 + below(rng, 3))};
    const Rational lp = theta_monomial(I, MultiIndex{r[0], r[1]});
    const Rational brute = oracle::theta_brute(raw, r, 30);
    o.check(lp == brute, [&] { return "instance " + std::to_string(i) + ": LP " + to_string(lp) + ", brute " + to_string(brute); });
  }
  o.detail = std::to_string(o.cases) + " monomial instances, (x^2, y^3) / xy = " + to_string(v);
  return o;
}

// --- 8 --------------------------------------------------------------------

Outcome criterion_pure_generation() {
  Outcome o;
  Rng rng(8);
  std::vector<FiltrationSpec<FiniteField>> corpus;
  for (const auto& s : curated_corpus()) corpus.push_back(d_saturate(build(s)));
  for (int i = 0; i < 40; ++i) {
    const auto k = i % 2 ? gf(3) : gf(2);
    const std::size_t d = 1 + below(rng, 3);
    corpus.push_back(d_saturate(corpus::random_spec<FiniteField>(ctx(k, d, d == 3 ? 6 : 8), rng)));
  }
  for (const auto& Fd : corpus) {
    const auto& c = Fd.ctx_ptr();
    const LevelIdeals<FiniteField> L(Fd);
    const auto A = analyze_leading(L, default_emax(c->field().characteristic(), c->D()));
    for (unsigned n = 0; n <= c->D(); ++n) {
      const auto gen = generated_by_leading_forms(c, A.lgs, n);
      o.check(gen.dim() == A.algebra.dim(n) && gen.is_subset_of(A.algebra.slice(n)) && A.algebra.slice(n).is_subset_of(gen),
              [&] { return listing(Fd).front() + ", degree " + std::to_string(n); });
    }
  }
  o.detail = std::to_string(corpus.size()) + " saturated specs, " + std::to_string(o.cases) + " degrees compared";
  return o;
}

// --- 9 --------------------------------------------------------------------

template <FieldLike K>
void showcase(const std::shared_ptr<const TruncationContext<K>>& c, const Json& want, Outcome& o) {
  const std::string tag = c->field().name() + ": ";
  FiltrationSpec<K> F(c);
  F.add(P(c, "x^2 + y^3"), Rational(2));
  const auto Fd = d_saturate(F);
  o.check(Json(listing(Fd)) == want["saturated"], [&] { return tag + "saturated generators differ"; });
  const LevelIdeals<K> L(Fd);
  const auto A = analyze_leading(L, default_emax(c->field().characteristic(), c->D()));
  std::vector<std::size_t> dims;
  for (unsigned n = 0; n <= c->D(); ++n) dims.push_back(A.algebra.dim(n));
  o.check(Json(dims) == want["leading_dims"], [&] { return tag + "leading dimensions differ"; });
  o.check(Json(A.sigma.pure_dims) == want["pure_dims"], [&] { return tag + "pure dimensions differ"; });
  o.check(Json(A.sigma.values) == want["sigma_full"], [&] { return tag + "full sigma differs"; });
  o.check(Json(A.sigma.reported()) == want["sigma"], [&] { return tag + "sigma = " + Json(A.sigma.reported()).dump(); });
  std::vector<unsigned> es;
  std::vector<std::string> forms;
  for (const auto& en : A.lgs) {
    es.push_back(en.e);
    forms.push_back(S(en.leading_form));
  }
  o.check(Json(es) == want["lgs_e"] && Json(forms) == want["lgs_leading_forms"], [&] { return tag + "LGS differs"; });
  const auto H = HSystem<K>::from_lgs(c, A.lgs);
  const MuValue mt = mu_tilde(Fd, H);
  o.check(mt.is_finite() && Json(to_string(mt.value())) == want["mu_tilde"], [&] { return tag + "mu_tilde = " + mt.to_string(); });
}

Outcome criterion_showcase() {
  Outcome o;
  std::ifstream in(IFILT_ORACLE_JSON);
  if (!in) {
    o.check(false, [] { return std::string("cannot read ") + IFILT_ORACLE_JSON; });
    return o;
  }
  const Json want = Json::parse(in);
  const unsigned D = want["truncation"].get<unsigned>();
  showcase(ctx(gf(2), 2, D), want["char2"], o);
  showcase(ctx(qq(), 2, D), want["char0"], o);
  o.detail = "GF(2): sigma " + want["char2"]["sigma"].dump() + ", LGS e " + want["char2"]["lgs_e"].dump() + ", mu_tilde " +
             want["char2"]["mu_tilde"].get<std::string>() + "; QQ: sigma " + want["char0"]["sigma"].dump() + ", LGS e " +
             want["char0"]["lgs_e"].dump() + "; matches brute force";
  return o;
}

// --- 10 -------------------------------------------------------------------

Outcome criterion_supporting() {
  Outcome o;
  const auto t0 = Clock::now();
  Rng rng(10);
  std::size_t systems = 0, lemma_specs = 0;
  auto supporting = [&](const HSystem<FiniteField>& H) {
    ++systems;
    const auto& c = H.ctx();
    for (unsigned r = 0; r <= c.D(); ++r) o.check(supporting3_check(H, r), [&] { return "supporting 3, r = " + std::to_string(r); });
    const long umax = H.u_bound() == 0 ? 3 : std::min<long>(3, static_cast<long>(H.u_bound()) - 1);
    for (long u = 0; u <= umax; ++u)
      for (unsigned r = 0; r <= 3; ++r) {
        const auto beta = corpus::random_poly(c, rng, r, std::min(c.D(), r + 3), 3);
        for (std::size_t l = 1; l <= H.size(); ++l)
          o.check(supporting1_check(H, beta, l, u, r), [&] { return "supporting 1, u = " + std::to_string(u) + ", r = " + std::to_string(r); });
      }
  };
  for (int i = 0; i < 32; ++i) {
    const auto k = i % 2 ? gf(3) : gf(2);
    const std::size_t d = 1 + below(rng, 3);
    const auto c = ctx(k, d, d == 3 ? 7 : 10);
    supporting(corpus::random_hsystem<FiniteField>(c, rng, 2, 3));
  }
  std::vector<FiltrationSpec<FiniteField>> specs;
  for (const auto& s : curated_corpus()) specs.push_back(d_saturate(build(s)));
  for (int i = 0; i < 12; ++i) {
    const auto k = i % 2 ? gf(3) : gf(2);
    const std::size_t d = 1 + below(rng, 3);
    specs.push_back(d_saturate(corpus::random_spec<FiniteField>(ctx(k, d, d == 3 ? 6 : 8), rng)));
  }
  for (const auto& Fd : specs) {
    const auto& c = Fd.ctx_ptr();
    const auto lgs = extract_lgs(Fd, default_emax(c->field().characteristic(), c->D()));
    const auto H = HSystem<FiniteField>::from_lgs(c, lgs);
    if (!H.empty()) supporting(H);
    ++lemma_specs;
    const LevelIdeals<FiniteField> L(Fd);
    const MuValue mt = mu_tilde(Fd, H);
    for (const Rational& a : level_grid(Fd, 6)) {
      const Rational mu = default_coefficient_mu(mt, a, c->D(), 64);
      o.check(coefficient_decompose_check(L, H, a, mu), [&] { return "coefficient lemma at " + to_string(a) + ", " + listing(Fd).front(); });
    }
  }
  const double s = seconds_since(t0);
  o.check(s < 120, [&] { return "took " + fixed(s) + " s"; });
  o.detail = std::to_string(systems) + " H-systems, " + std::to_string(lemma_specs) + " specs for the coefficient lemma, " +
             std::to_string(o.cases - 1) + " checks in " + fixed(s) + " s";
  return o;
}

// --- 11 -------------------------------------------------------------------

Outcome criterion_nonsingularity() {
  Outcome o;
  const auto c = ctx(gf(2), 2, 8);
  FiltrationSpec<FiniteField> F(c);
  F.add(P(c, "x"), Rational(1));
  F.add(P(c, "y^2"), Rational(2));
  const auto B = b_saturate_probe(F, RadicalProbeBounds{});
  const auto H = HSystem<FiniteField>::from_lgs(c, extract_lgs(B.result, 3));
  std::vector<std::string> hs;
  for (const auto& en : H.entries()) hs.push_back("(" + S(en.h) + "," + std::to_string(en.e) + ")");
  o.check(hs == std::vector<std::string>{"(x,0)", "(y,0)"}, [&] { return "H = " + Json(hs).dump(); });
  o.check(mu_tilde(B.result, H).is_infinite(), [] { return std::string("mu_tilde finite after probe saturation"); });
  const auto rep = nonsingularity_check(LevelIdeals<FiniteField>(B.result), H);
  o.check(rep.generated_by_H && rep.all_level_one && rep.support_matches && rep.nonsingular_V_H && rep.passed(),
          [] { return std::string("probe-saturated spec fails a check"); });

  FiltrationSpec<FiniteField> Fy(c);
  Fy.add(P(c, "y^2"), Rational(2));
  const auto Fd = d_saturate(Fy);
  const auto Hd = HSystem<FiniteField>::from_lgs(c, extract_lgs(Fd, 3));
  const auto bad = nonsingularity_check(LevelIdeals<FiniteField>(Fd), Hd);
  bool diagnosed = false;
  for (const auto& s : bad.diagnosis) diagnosed = diagnosed || s.rfind("insufficient saturation", 0) == 0;
  o.check(!bad.all_level_one && !bad.passed() && bad.failing_entry == std::optional<std::size_t>(0) && diagnosed,
          [] { return std::string("D-only variant does not fail check (2) as documented"); });
  o.detail = "probe-saturated H = {(x,0), (y,0)} passes all three checks; D-only variant fails check (2): " +
             (bad.diagnosis.empty() ? std::string("-") : bad.diagnosis.front());
  return o;
}

// --- 12 -------------------------------------------------------------------

Outcome criterion_localization() {
  Outcome o;
  const auto c = ctx(qq(), 2, 8);
  const std::vector<std::pair<std::string, Rational>> base{
      {"(x-1)*y", Rational(0)},
      {"(x-1)*(x-2)*y", Rational(1, 2)},
      {"(x-1)*(x-2)*(x-3)*y", Rational(2, 3)},
      {"(x-1)*(x-2)*(x-3)*(x-4)*y", Rational(3, 4)},
  };
  const std::vector<Generator<RationalField>> cand{{P(c, "y"), Rational(1)}};
  const std::vector<RadicalProbeBounds> bounds{{}, {4, 16}, {12, 128}};
  int runs = 0;
  for (std::uint64_t seed : {1u, 2u, 3u, 4u, 5u})
    for (const auto& b : bounds) {
      auto gens = base;
      std::shuffle(gens.begin(), gens.end(), Rng(seed));
      FiltrationSpec<RationalField> F(c);
      for (const auto& [f, a] : gens) F.add(P(c, f), a);
      const auto B = b_saturate_probe<RationalField>(F, b, cand);
      bool added = false, rejected = false;
      for (const auto& e : B.added) added = added || (S(e.f) == "y" && e.level >= 1);
      for (const auto& e : B.rejected) rejected = rejected || (S(e.f) == "y" && e.level == 1);
      ++runs;
      o.check(!added && rejected, [&] { return "seed " + std::to_string(seed) + ": (y, 1) was detected"; });
    }
  o.detail = "(y, 1) not detected in " + std::to_string(runs) + " runs (5 seeds x 3 probe bounds)";
  return o;
}

// --- 13 -------------------------------------------------------------------

int shell(const std::string& cmd) {
  const int rc = std::system(cmd.c_str());
  if (rc == -1) return -1;
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

Outcome criterion_determinism() {
  Outcome o;
  const auto dir = std::filesystem::temp_directory_path();
  const std::string spec = std::string(IFILT_SPECS_DIR) + "/char2_showcase.spec";
  const auto a = dir / "ifilt_accept_a.json", b = dir / "ifilt_accept_b.json";
  const std::string bin = IFILT_BIN, mutant = IFILT_MUTANT_BIN;
  const int ra = shell("'" + bin + "' analyze '" + spec + "' --json > '" + a.string() + "'");
  const int rb = shell("'" + bin + "' analyze '" + spec + "' --json > '" + b.string() + "'");
  const std::string ja = slurp(a), jb = slurp(b);
  o.check(ra == 0 && rb == 0 && !ja.empty() && ja == jb, [] { return std::string("analyze output differs between runs"); });
  const int rv = shell("'" + bin + "' verify > /dev/null");
  o.check(rv == 0, [&] { return "verify exited " + std::to_string(rv); });
  const int rm = shell("'" + mutant + "' verify > /dev/null");
  o.check(rm != 0 && rm != -1, [&] { return "mutant verify exited " + std::to_string(rm); });
  o.detail = "analyze byte-identical (" + std::to_string(ja.size()) + " bytes), verify exit " + std::to_string(rv) +
             ", Lucas mutant exit " + std::to_string(rm);
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> all{
      {1, "hasse-basis", criterion_hasse_basis},
      {2, "product-rule", criterion_product_rule},
      {3, "lucas", criterion_lucas},
      {4, "pe-power-generation", criterion_pe_power},
      {5, "d-saturation-laws", criterion_d_saturation},
      {6, "probe-differentiation", criterion_probe_differentiation},
      {7, "theta-oracle", criterion_theta},
      {8, "pure-generation", criterion_pure_generation},
      {9, "char2-showcase", criterion_showcase},
      {10, "supporting-lemmas", criterion_supporting},
      {11, "nonsingularity", criterion_nonsingularity},
      {12, "localization", criterion_localization},
      {13, "determinism", criterion_determinism},
  };
  int failed = 0;
  for (const auto& c : all) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.first_failure = std::string("exception: ") + e.what();
    }
    std::printf("%s %2d %-22s %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str());
    if (!o.pass) {
      std::printf("        first failure: %s\n", o.first_failure.c_str());
      ++failed;
    }
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(all.size()) - failed, all.size());
  return failed == 0 ? 0 : 1;
}
