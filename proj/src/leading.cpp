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

#include "ifilt/leading.hpp"

#include <functional>

namespace ifilt {

template <FieldLike K>
Poly<K> LeadingAlgebra<K>::lift(unsigned n, const Poly<K>& form) const {
  const Subspace<K>& S = slices_.at(n);
  const Vec v = ctx_->to_vector(form);
  Poly<K> h = ctx_->zero_poly();
  Vec rest = v;
  std::vector<typename K::Element> coeffs;
  if (!S.echelon().reduce_tracked(rest, coeffs)) throw Error(ErrorCode::kInternal, "leading form is not in L_n");
  for (std::size_t r = 0; r < coeffs.size(); ++r)
    if (!ctx_->field().is_zero(coeffs[r])) h += lifts_.at(n)[r].scaled(coeffs[r]);
  if (!(h.graded_component(n) == form) || h.order().value() < n)
    throw Error(ErrorCode::kInternal, "inconsistent lift of a leading form");
  return h;
}

template <FieldLike K>
LeadingAlgebra<K> leading_algebra(const LevelIdeals<K>& L) {
  const auto& ctx = L.filtration().ctx_ptr();
  std::vector<Subspace<K>> slices;
  std::vector<std::vector<Poly<K>>> lifts;
  for (unsigned n = 0; n <= ctx->D(); ++n) {
    const auto I = L.at(Rational(n));
    std::vector<typename Subspace<K>::Vec> forms;
    std::vector<Poly<K>> ls;
    for (std::size_t r : I->rows_at_degree(n)) {
      forms.push_back(I->degree_part(I->rows()[r], n));
      ls.push_back(ctx->to_poly(I->rows()[r]));
    }
    Subspace<K> S = Subspace<K>::span(ctx, forms);
    // The reduced echelon rows of 𝕀_n restrict to reduced echelon rows of L_n
    // in the same order; check instead of assuming.
    for (std::size_t r = 0; r < forms.size(); ++r)
      if (S.rows()[r] != forms[r]) throw Error(ErrorCode::kInternal, "leading slice lost echelon alignment");
    slices.push_back(std::move(S));
    lifts.push_back(std::move(ls));
  }
  return LeadingAlgebra<K>(ctx, std::move(slices), std::move(lifts));
}

template <FieldLike K>
LeadingAlgebra<K> leading_algebra(const FiltrationSpec<K>& F) {
  return leading_algebra(LevelIdeals<K>(F));
}

template <FieldLike K>
PurePart<K> pure_part(const LeadingAlgebra<K>& L, unsigned e) {
  const auto& ctx = L.ctx();
  const std::uint32_t p = ctx.field().characteristic();
  if (p == 0 && e > 0) throw Error(ErrorCode::kCharacteristicZero, "pure parts in characteristic zero live in degree 1 only");
  const std::uint64_t q = p == 0 ? 1 : ipow(p, e);
  if (q > ctx.D()) throw Error(ErrorCode::kRangeViolation, "p^e exceeds the truncation degree");
  std::vector<typename Subspace<K>::Vec> powers;
  for (std::size_t i = 0; i < ctx.nvars(); ++i) {
    auto v = ctx.zero_vec();
    v[static_cast<std::size_t>(ctx.column(MultiIndex::unit(ctx.nvars(), i, static_cast<unsigned>(q))))] = ctx.field().one();
    powers.push_back(std::move(v));
  }
  const auto W = Subspace<K>::span(L.ctx_ptr(), std::move(powers));
  PurePart<K> P{e, intersect(L.slice(static_cast<unsigned>(q)), W), {}, {}};
  for (const auto& b : P.space.basis_polys()) {
    auto root = pe_power_root(b, e);
    if (!root) throw Error(ErrorCode::kInternal, "pure form without a p^e-th root");
    P.basis.push_back(b);
    P.roots.push_back(std::move(*root));
  }
  return P;
}

unsigned default_emax(std::uint32_t p, unsigned D) {
  if (p == 0) return 0;
  unsigned e = 0;
  for (std::uint64_t q = p; q <= D; q *= p) ++e;
  return e;
}

template <FieldLike K>
LeadingAnalysis<K> analyze_leading(const LevelIdeals<K>& Lv, unsigned emax) {
  const auto& ctx = Lv.filtration().ctx_ptr();
  const std::uint32_t p = ctx->field().characteristic();
  if (p == 0) emax = 0;
  if (p != 0 && ipow(p, emax) > ctx->D()) throw Error(ErrorCode::kRangeViolation, "p^E_max exceeds the truncation degree");

  LeadingAnalysis<K> out{leading_algebra(Lv), {}, {}, {}, emax};
  for (unsigned e = 0; e <= emax; ++e) {
    PurePart<K> P = pure_part(out.algebra, e);
    Echelon<K> span(&ctx->field(), ctx->ncols());
    for (const auto& entry : out.lgs) span.insert(ctx->to_vector(frobenius_power(entry.root, e)));
    for (std::size_t i = 0; i < P.basis.size(); ++i) {
      if (!span.insert(ctx->to_vector(P.basis[i]))) continue;
      const auto q = static_cast<unsigned>(p == 0 ? 1 : ipow(p, e));
      out.lgs.push_back(LgsEntry<K>{out.algebra.lift(q, P.basis[i]), e, P.basis[i], P.roots[i]});
    }
    out.pure.push_back(std::move(P));
  }

  SigmaSeq& s = out.sigma;
  s.d = ctx->nvars();
  for (const auto& P : out.pure) {
    s.pure_dims.push_back(P.dim());
    s.values.push_back(s.d - P.dim());
  }
  if (p == 0) {
    s.stabilized = true;
    s.reported_length = 1;
  } else {
    std::size_t last_increase = 0;
    for (std::size_t e = 1; e < s.pure_dims.size(); ++e)
      if (s.pure_dims[e] > s.pure_dims[e - 1]) last_increase = e;
    s.reported_length = std::min(last_increase + 2, s.values.size());
    s.stabilized = s.pure_dims.size() >= 2 && s.pure_dims[s.pure_dims.size() - 1] == s.pure_dims[s.pure_dims.size() - 2];
  }
  return out;
}

template <FieldLike K>
std::vector<LgsEntry<K>> extract_lgs(const FiltrationSpec<K>& F, unsigned emax) {
  return analyze_leading(LevelIdeals<K>(F), emax).lgs;
}

template <FieldLike K>
SigmaSeq sigma(const FiltrationSpec<K>& F, unsigned emax) {
  return analyze_leading(LevelIdeals<K>(F), emax).sigma;
}

template <FieldLike K>
bool lgs_conditions_hold(const LeadingAlgebra<K>& L, const std::vector<LgsEntry<K>>& lgs, unsigned emax) {
  const auto& ctx = L.ctx();
  const std::uint32_t p = ctx.field().characteristic();
  for (const auto& entry : lgs) {
    const auto q = static_cast<unsigned>(p == 0 ? 1 : ipow(p, entry.e));
    if (!entry.h.order().certainly_at_least(q)) return false;
    const Poly<K> form = entry.h.truncated(ctx.D()).graded_component(q);
    if (form.is_zero() || !(form == entry.leading_form)) return false;
    auto root = pe_power_root(form, entry.e);
    if (!root || root->degree() != 1 || root->order().value() != 1) return false;
    if (!pure_part(L, entry.e).space.contains(form)) return false;
  }
  if (p == 0) emax = 0;
  for (unsigned e = 0; e <= emax; ++e) {
    const PurePart<K> P = pure_part(L, e);
    Echelon<K> span(&ctx.field(), ctx.ncols());
    std::size_t count = 0;
    for (const auto& entry : lgs) {
      if (entry.e > e) continue;
      ++count;
      const auto r = pe_power_root(entry.leading_form, entry.e);
      const auto v = ctx.to_vector(frobenius_power(*r, e));
      if (!P.space.contains_vec(v)) return false;
      if (!span.insert(v)) return false;  // dependent
    }
    if (count != P.dim()) return false;
  }
  return true;
}

template <FieldLike K>
Subspace<K> generated_by_leading_forms(ContextPtr<K> ctx, const std::vector<LgsEntry<K>>& lgs, unsigned n) {
  std::vector<typename Subspace<K>::Vec> prods;
  std::vector<unsigned> degs;
  for (const auto& entry : lgs) degs.push_back(entry.leading_form.degree());
  std::function<void(std::size_t, unsigned, const Poly<K>&)> rec = [&](std::size_t start, unsigned deg, const Poly<K>& acc) {
    if (deg == n) {
      prods.push_back(ctx->to_vector(acc));
      return;
    }
    for (std::size_t j = start; j < lgs.size(); ++j)
      if (deg + degs[j] <= n) rec(j, deg + degs[j], acc * lgs[j].leading_form);
  };
  rec(0, 0, ctx->one_poly());
  return Subspace<K>::span(ctx, std::move(prods));
}

#define IFILT_INSTANTIATE(K)                                                                                 \
  template class LeadingAlgebra<K>;                                                                          \
  template LeadingAlgebra<K> leading_algebra<K>(const LevelIdeals<K>&);                                      \
  template LeadingAlgebra<K> leading_algebra<K>(const FiltrationSpec<K>&);                                   \
  template PurePart<K> pure_part<K>(const LeadingAlgebra<K>&, unsigned);                                     \
  template LeadingAnalysis<K> analyze_leading<K>(const LevelIdeals<K>&, unsigned);                           \
  template std::vector<LgsEntry<K>> extract_lgs<K>(const FiltrationSpec<K>&, unsigned);                      \
  template SigmaSeq sigma<K>(const FiltrationSpec<K>&, unsigned);                                            \
  template bool lgs_conditions_hold<K>(const LeadingAlgebra<K>&, const std::vector<LgsEntry<K>>&, unsigned); \
  template Subspace<K> generated_by_leading_forms<K>(ContextPtr<K>, const std::vector<LgsEntry<K>>&, unsigned);

IFILT_INSTANTIATE(FiniteField)
IFILT_INSTANTIATE(RationalField)

}  // namespace ifilt
