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

#include "ifilt/saturation.hpp"

#include <algorithm>

#include "ifilt/diffop.hpp"
#include "ifilt/theta.hpp"

namespace ifilt {

namespace {

template <FieldLike K>
FiltrationSpec<K> saturate_impl(const FiltrationSpec<K>& F, bool logarithmic) {
  const auto& ctx = F.ctx();
  FiltrationSpec<K> out(F.ctx_ptr());
  const FiltrationSpec<K> N = F.normalized();
  for (const auto& g : N.generators()) {
    // |J| < a, i.e. |J| <= ceil(a) - 1.
    const auto top = static_cast<unsigned>(to_int64(ceil(g.level)) - 1);
    for (const MultiIndex& J : monomials_up_to(ctx.nvars(), top)) {
      Poly<K> h = hasse_apply(g.f, J);
      if (logarithmic) h = h.times_monomial(boundary_part(J, ctx.boundary()), ctx.field().one());
      out.add(std::move(h), g.level - J.degree());
    }
  }
  return out.normalized();
}

template <FieldLike K>
ProbeVerdict probe_impl(const LevelIdeals<K>& L, const Poly<K>& f, const Rational& a, const RadicalProbeBounds& bounds,
                        const std::vector<unsigned>& exponents) {
  if (a <= 0) throw Error(ErrorCode::kInvalidArgument, "probe level must be positive");
  if (bounds.n_max < 1 || bounds.grid < 1) throw Error(ErrorCode::kInvalidArgument, "probe bounds must be >= 1");
  ProbeVerdict v;
  v.tested_level = a;
  if (f.is_zero()) {
    v.member = true;
    v.witness_n = 1;
    return v;
  }
  const unsigned D = L.filtration().ctx().D();
  const Rational below = a - Rational(1, bounds.grid);
  for (unsigned n : exponents) {
    if (static_cast<unsigned long>(n) * f.degree() > D) {
      v.precision_limited = true;
      break;
    }
    const Poly<K> fn = f.pow(n);
    if (L.at(Rational(n) * a)->contains(fn)) {
      v.member = true;
      v.witness_n = n;
      return v;
    }
    if (below > 0 && L.at(Rational(n) * below)->contains(fn)) {
      v.member = true;
      v.witness_n = n;
      v.via_continuity = true;
      v.tested_level = below;
      return v;
    }
  }
  return v;
}

}  // namespace

template <FieldLike K>
FiltrationSpec<K> d_saturate(const FiltrationSpec<K>& F) {
  return saturate_impl(F, false);
}

template <FieldLike K>
FiltrationSpec<K> d_saturate_log(const FiltrationSpec<K>& F) {
  return saturate_impl(F, F.ctx().has_boundary());
}

template <FieldLike K>
ProbeVerdict radical_probe(const LevelIdeals<K>& L, const Poly<K>& f, const Rational& a, const RadicalProbeBounds& bounds) {
  std::vector<unsigned> ns;
  for (unsigned n = 1; n <= bounds.n_max; ++n) ns.push_back(n);
  return probe_impl(L, f, a, bounds, ns);
}

template <FieldLike K>
ProbeVerdict radical_probe(const FiltrationSpec<K>& F, const Poly<K>& f, const Rational& a, const RadicalProbeBounds& bounds) {
  return radical_probe(LevelIdeals<K>(F), f, a, bounds);
}

template <FieldLike K>
ProbeVerdict frobenius_probe(const LevelIdeals<K>& L, const Poly<K>& f, const Rational& a, const RadicalProbeBounds& bounds) {
  const std::uint32_t p = L.filtration().ctx().field().characteristic();
  if (p == 0) throw Error(ErrorCode::kCharacteristicZero, "Frobenius probe needs positive characteristic");
  std::vector<unsigned> ns;
  for (std::uint64_t q = p; q <= bounds.n_max; q *= p) ns.push_back(static_cast<unsigned>(q));
  return probe_impl(L, f, a, bounds, ns);
}

template <FieldLike K>
ProbeVerdict frobenius_probe(const FiltrationSpec<K>& F, const Poly<K>& f, const Rational& a, const RadicalProbeBounds& bounds) {
  return frobenius_probe(LevelIdeals<K>(F), f, a, bounds);
}

template <FieldLike K>
BSaturation<K> b_saturate_probe(const FiltrationSpec<K>& F, const RadicalProbeBounds& bounds,
                                std::span<const Generator<K>> candidates) {
  const auto& ctx = F.ctx();
  const FiltrationSpec<K> Fd = ctx.has_boundary() ? d_saturate_log(F) : d_saturate(F);
  const std::uint32_t p = ctx.field().characteristic();

  std::vector<ProbeLogEntry<K>> pool;
  if (p != 0) {
    for (const auto& g : Fd.generators()) {
      std::uint64_t q = p;
      for (unsigned e = 1; q <= bounds.n_max; ++e, q *= p) {
        auto root = pe_power_root(g.f, e);
        if (root && root->degree() > 0) pool.push_back({std::move(*root), g.level / Rational(q), "pe-root", 0});
      }
    }
  }
  const bool monomial = !Fd.empty() && std::all_of(Fd.generators().begin(), Fd.generators().end(),
                                                   [](const auto& g) { return g.f.num_terms() == 1; });
  if (monomial) {
    std::vector<MultiIndex> exps;
    std::vector<Rational> levels;
    for (const auto& g : Fd.generators()) {
      exps.push_back(g.f.terms().begin()->first);
      levels.push_back(g.level);
    }
    std::vector<MultiIndex> targets;
    for (std::size_t i = 0; i < ctx.nvars(); ++i) targets.push_back(MultiIndex::unit(ctx.nvars(), i));
    for (const auto& e : exps)
      for (const MultiIndex& s : sub_indices(e))
        if (!s.is_zero() && !(s == e)) targets.push_back(s);
    std::sort(targets.begin(), targets.end(), GradedLex{});
    targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
    const bool proper = std::none_of(exps.begin(), exps.end(), [](const MultiIndex& m) { return m.is_zero(); });
    if (proper) {
      for (const auto& t : targets) {
        const Rational s = weighted_theta(exps, levels, t);
        if (s > 0) pool.push_back({Poly<K>::monomial(ctx.field_ptr(), ctx.nvars(), t), s, "theta", 0});
      }
    }
  }
  for (const auto& c : candidates) pool.push_back({c.f, c.level, "candidate", 0});

  const LevelIdeals<K> L(Fd);
  BSaturation<K> out{Fd, {}, {}};
  for (auto& c : pool) {
    if (c.level <= 0 || c.f.is_zero()) continue;
    if (c.f.degree() <= ctx.D() && L.at(c.level)->contains(c.f)) continue;  // already there
    const ProbeVerdict v = radical_probe(L, c.f, c.level, bounds);
    c.witness_n = v.witness_n;
    if (v.member && !v.via_continuity) {
      const bool dup = std::any_of(out.added.begin(), out.added.end(),
                                   [&](const auto& a) { return a.f == c.f && a.level == c.level; });
      if (!dup) out.added.push_back(c);
    } else {
      out.rejected.push_back(c);
    }
  }
  if (out.added.empty()) return out;
  FiltrationSpec<K> enlarged = Fd;
  for (const auto& a : out.added) enlarged.add(a.f, a.level);
  out.result = ctx.has_boundary() ? d_saturate_log(enlarged) : d_saturate(enlarged);
  return out;
}

#define IFILT_INSTANTIATE(K)                                                                                          \
  template FiltrationSpec<K> d_saturate<K>(const FiltrationSpec<K>&);                                                  \
  template FiltrationSpec<K> d_saturate_log<K>(const FiltrationSpec<K>&);                                              \
  template ProbeVerdict radical_probe<K>(const LevelIdeals<K>&, const Poly<K>&, const Rational&,                       \
                                         const RadicalProbeBounds&);                                                   \
  template ProbeVerdict radical_probe<K>(const FiltrationSpec<K>&, const Poly<K>&, const Rational&,                    \
                                         const RadicalProbeBounds&);                                                   \
  template ProbeVerdict frobenius_probe<K>(const LevelIdeals<K>&, const Poly<K>&, const Rational&,                     \
                                           const RadicalProbeBounds&);                                                 \
  template ProbeVerdict frobenius_probe<K>(const FiltrationSpec<K>&, const Poly<K>&, const Rational&,                  \
                                           const RadicalProbeBounds&);                                                 \
  template BSaturation<K> b_saturate_probe<K>(const FiltrationSpec<K>&, const RadicalProbeBounds&,                     \
                                              std::span<const Generator<K>>);

IFILT_INSTANTIATE(FiniteField)
IFILT_INSTANTIATE(RationalField)

}  // namespace ifilt
