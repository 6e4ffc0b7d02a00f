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

#include "ifilt/diffop.hpp"

#include <algorithm>
#include <map>

#include "ifilt/gls.hpp"

namespace ifilt {

std::vector<MultiIndex> sub_indices(const MultiIndex& J) {
  std::vector<MultiIndex> out{MultiIndex(J.size())};
  for (std::size_t i = 0; i < J.size(); ++i) {
    const std::size_t n = out.size();
    for (unsigned k = 1; k <= J[i]; ++k)
      for (std::size_t t = 0; t < n; ++t) {
        MultiIndex m = out[t];
        m.set(i, k);
        out.push_back(m);
      }
  }
  std::sort(out.begin(), out.end(), GradedLex{});
  return out;
}

MultiIndex boundary_part(const MultiIndex& J, const std::vector<bool>& boundary) {
  MultiIndex out(J.size());
  for (std::size_t i = 0; i < J.size(); ++i)
    if (i < boundary.size() && boundary[i]) out.set(i, J[i]);
  return out;
}

template <FieldLike K>
typename K::Element binom_in_field(const K& k, const MultiIndex& I, const MultiIndex& J) {
  if (!J.divides(I)) return k.zero();
  const std::uint32_t p = k.characteristic();
  if (p != 0) {
    std::int64_t prod = 1;
    for (std::size_t a = 0; a < I.size(); ++a) {
      prod = prod * binom_mod_p(I[a], J[a], p) % p;
      if (prod == 0) break;
    }
    return k.from_int(prod);
  }
  const auto upper = I.to_vector(), lower = J.to_vector();
  return k.from_integer(binom_multi(upper, lower));
}

template <FieldLike K>
Poly<K> hasse_apply(const Poly<K>& f, const MultiIndex& J) {
  if (J.size() != f.nvars()) throw Error(ErrorCode::kInvalidArgument, "multi-index length differs from variable count");
  const K& k = f.field();
  Poly<K> out(f.field_ptr(), f.nvars());
  for (const auto& [I, c] : f.terms()) {
    if (!J.divides(I)) continue;
    const auto b = binom_in_field(k, I, J);
    if (k.is_zero(b)) continue;
    out.add_term(I - J, k.mul(c, b));
  }
  return out;
}

template <FieldLike K>
Poly<K> log_apply(const Poly<K>& f, const MultiIndex& J, const TruncationContext<K>& ctx) {
  const MultiIndex JE = boundary_part(J, ctx.boundary());
  return hasse_apply(f, J).times_monomial(JE, f.field().one(), ctx.D());
}

template <FieldLike K>
DiffOp<K> DiffOp<K>::identity(ContextPtr<K> ctx) {
  const MultiIndex zero(ctx->nvars());
  return partial(std::move(ctx), zero);
}

template <FieldLike K>
DiffOp<K> DiffOp<K>::partial(ContextPtr<K> ctx, const MultiIndex& J) {
  DiffOp d(ctx);
  d.add(ctx->one_poly(), J, false);
  return d;
}

template <FieldLike K>
DiffOp<K> DiffOp<K>::logarithmic(ContextPtr<K> ctx, const MultiIndex& J) {
  DiffOp d(ctx);
  d.add(ctx->one_poly(), J, true);
  return d;
}

template <FieldLike K>
void DiffOp<K>::add(Poly<K> coeff, const MultiIndex& J, bool logarithmic) {
  ctx_->check_poly(coeff);
  if (J.size() != ctx_->nvars()) throw Error(ErrorCode::kInvalidArgument, "multi-index length differs from variable count");
  if (coeff.is_zero()) return;
  summands_.push_back(Summand{std::move(coeff), J, logarithmic});
}

template <FieldLike K>
unsigned DiffOp<K>::degree() const {
  unsigned d = 0;
  for (const auto& s : summands_) d = std::max(d, s.J.degree());
  return d;
}

template <FieldLike K>
bool DiffOp<K>::is_zero() const {
  return normalized().summands_.empty();
}

template <FieldLike K>
DiffOp<K> DiffOp<K>::normalized() const {
  std::map<MultiIndex, Poly<K>, GradedLex> merged;
  for (const auto& s : summands_) {
    Poly<K> c = s.logarithmic ? s.coeff.times_monomial(boundary_part(s.J, ctx_->boundary()), ctx_->field().one()) : s.coeff;
    auto it = merged.find(s.J);
    if (it == merged.end())
      merged.emplace(s.J, std::move(c));
    else
      it->second += c;
  }
  DiffOp out(ctx_);
  for (auto& [J, c] : merged) out.add(std::move(c), J, false);
  return out;
}

template <FieldLike K>
Poly<K> DiffOp<K>::apply(const Poly<K>& f) const {
  ctx_->check_poly(f);
  Poly<K> out = ctx_->zero_poly();
  for (const auto& s : summands_) {
    Poly<K> g = hasse_apply(f, s.J);
    if (s.logarithmic) g = g.times_monomial(boundary_part(s.J, ctx_->boundary()), ctx_->field().one());
    out += s.coeff * g;
  }
  return out;
}

template <FieldLike K>
Poly<K> DiffOp<K>::apply_truncated(const Poly<K>& f) const {
  return apply(f.truncated(ctx_->D() + degree())).truncated(ctx_->D());
}

template <FieldLike K>
DiffOp<K> compose(const DiffOp<K>& d1, const DiffOp<K>& d2) {
  check_same_context(d1.ctx(), d2.ctx());
  const DiffOp<K> a = d1.normalized(), b = d2.normalized();
  const K& k = d1.ctx().field();
  // ∂_K (β ∂_J) = Σ_{K1+K2=K} ∂_{K1}(β) C(K2+J, J) ∂_{K2+J}
  DiffOp<K> out(d1.ctx_ptr());
  for (const auto& sa : a.summands()) {
    for (const auto& sb : b.summands()) {
      for (const MultiIndex& K1 : sub_indices(sa.J)) {
        const MultiIndex K2 = sa.J - K1;
        const MultiIndex T = K2 + sb.J;
        const auto c = binom_in_field(k, T, sb.J);
        if (k.is_zero(c)) continue;
        Poly<K> db = hasse_apply(sb.coeff, K1);
        if (db.is_zero()) continue;
        out.add((sa.coeff * db).scaled(c), T, false);
      }
    }
  }
  return out.normalized();
}

template <FieldLike K>
bool product_rule_check(const Poly<K>& f, const Poly<K>& g, const MultiIndex& J) {
  const Poly<K> lhs = hasse_apply(f * g, J);
  Poly<K> rhs(f.field_ptr(), f.nvars());
  for (const MultiIndex& Kx : sub_indices(J)) rhs += hasse_apply(f, Kx) * hasse_apply(g, J - Kx);
  return lhs == rhs;
}

template <FieldLike K>
SatOrd ideal_order(std::span<const Poly<K>> gens, const TruncationContext<K>& ctx) {
  unsigned best = ctx.D() + 1;
  for (const auto& g : gens) {
    const SatOrd o = g.order();
    if (o.is_finite() && o.value() < best) best = o.value();
  }
  return best > ctx.D() ? SatOrd::at_least(ctx.D() + 1) : SatOrd::finite(best);
}

template <FieldLike K>
SatOrd ideal_order_by_diff(std::span<const Poly<K>> gens, const TruncationContext<K>& ctx) {
  for (unsigned n = 1; n <= ctx.D() + 1; ++n) {
    // ord >= n iff every ∂_J g with |J| <= n-1 vanishes at the origin.
    for (const MultiIndex& J : monomials_of_degree(ctx.nvars(), n - 1))
      for (const auto& g : gens)
        if (!ctx.field().is_zero(hasse_apply(g, J).constant_term())) return SatOrd::finite(n - 1);
  }
  return SatOrd::at_least(ctx.D() + 1);
}

template <FieldLike K>
PePowerVerdict is_pe_power_generated(std::span<const Poly<K>> gens, unsigned e, ContextPtr<K> ctx) {
  const std::uint32_t p = ctx->field().characteristic();
  if (p == 0) throw Error(ErrorCode::kCharacteristicZero, "p^e-power test needs positive characteristic");
  PePowerVerdict v;
  const auto q = static_cast<unsigned>(ipow(p, e));
  v.certified = true;
  for (const auto& g : gens)
    if (!g.is_zero() && g.degree() + (q - 1) > ctx->D()) v.certified = false;
  if (e == 0) {
    v.generated = true;
    return v;
  }
  std::vector<Poly<K>> derived;
  for (const MultiIndex& J : monomials_up_to(ctx->nvars(), q - 1))
    for (const auto& g : gens) {
      Poly<K> h = hasse_apply(g, J);
      if (!h.is_zero()) derived.push_back(std::move(h));
    }
  const auto I = ideal_image(std::span<const Poly<K>>(gens), ctx);
  const auto DI = ideal_image(derived, ctx);
  v.generated = DI.is_subset_of(I);
  return v;
}

#define IFILT_INSTANTIATE(K)                                                                            \
  template K::Element binom_in_field<K>(const K&, const MultiIndex&, const MultiIndex&);                \
  template Poly<K> hasse_apply<K>(const Poly<K>&, const MultiIndex&);                                  \
  template Poly<K> log_apply<K>(const Poly<K>&, const MultiIndex&, const TruncationContext<K>&);        \
  template class DiffOp<K>;                                                                             \
  template DiffOp<K> compose<K>(const DiffOp<K>&, const DiffOp<K>&);                                    \
  template bool product_rule_check<K>(const Poly<K>&, const Poly<K>&, const MultiIndex&);               \
  template SatOrd ideal_order<K>(std::span<const Poly<K>>, const TruncationContext<K>&);                \
  template SatOrd ideal_order_by_diff<K>(std::span<const Poly<K>>, const TruncationContext<K>&);        \
  template PePowerVerdict is_pe_power_generated<K>(std::span<const Poly<K>>, unsigned, ContextPtr<K>);

IFILT_INSTANTIATE(FiniteField)
IFILT_INSTANTIATE(RationalField)

}  // namespace ifilt
