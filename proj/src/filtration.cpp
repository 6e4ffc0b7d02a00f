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

#include "ifilt/filtration.hpp"

#include <algorithm>

namespace ifilt {

template <FieldLike K>
FiltrationSpec<K>::FiltrationSpec(ContextPtr<K> ctx, std::vector<Generator<K>> gens) : ctx_(std::move(ctx)) {
  for (auto& g : gens) add(std::move(g.f), std::move(g.level));
}

template <FieldLike K>
void FiltrationSpec<K>::add(Poly<K> f, Rational level) {
  ctx_->check_poly(f);
  gens_.push_back(Generator<K>{std::move(f), std::move(level)});
}

template <FieldLike K>
FiltrationSpec<K> FiltrationSpec<K>::normalized() const {
  FiltrationSpec out(ctx_);
  for (const auto& g : gens_) {
    if (g.f.is_zero() || g.level <= 0) continue;
    if (std::find(out.gens_.begin(), out.gens_.end(), g) != out.gens_.end()) continue;
    out.gens_.push_back(g);
  }
  return out;
}

template <FieldLike K>
Integer FiltrationSpec<K>::level_denominator() const {
  Integer d = 1;
  for (const auto& g : gens_) d = lcm(d, denominator(g.level));
  return d;
}

template <FieldLike K>
std::vector<typename K::Element> multiply_row(const TruncationContext<K>& ctx, const std::vector<typename K::Element>& v,
                                              const Poly<K>& f) {
  const K& k = ctx.field();
  auto out = ctx.zero_vec();
  for (std::size_t c = 0; c < v.size(); ++c) {
    if (k.is_zero(v[c])) continue;
    const MultiIndex& m = ctx.monomial(c);
    const unsigned room = ctx.D() - m.degree();
    for (const auto& [t, coef] : f.terms()) {
      if (t.degree() > room) break;
      const auto col = static_cast<std::size_t>(ctx.column(m + t));
      out[col] = k.add(out[col], k.mul(v[c], coef));
    }
  }
  return out;
}

template <FieldLike K>
LevelIdeals<K>::LevelIdeals(const FiltrationSpec<K>& F, Kernel kernel) : F_(F.normalized()), kernel_(kernel) {
  for (const auto& g : F_.generators()) {
    const SatOrd o = g.f.order();
    if (o.is_finite() && o.value() == 0) unit_generator_ = true;
    Poly<K> t = g.f.truncated(F_.ctx().D());
    if (t.is_zero()) continue;  // invisible at this precision
    truncated_.push_back(std::move(t));
    levels_.push_back(g.level);
  }
}

template <FieldLike K>
std::shared_ptr<const TruncatedIdeal<K>> LevelIdeals<K>::at(const Rational& a) const {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  // 𝕀_a = R for every a <= 0; share one entry.
  const Rational key = a <= 0 ? Rational(0) : a;
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  auto r = compute(key);
  memo_.emplace(key, r);
  return r;
}

template <FieldLike K>
std::shared_ptr<const TruncatedIdeal<K>> LevelIdeals<K>::compute(const Rational& a) const {
  const auto& ctx = F_.ctx_ptr();
  std::vector<Poly<K>> gens;
  for (const auto& g : F_.generators()) gens.push_back(g.f);
  if (a <= 0 || unit_generator_) return std::make_shared<const TruncatedIdeal<K>>(full_ring<K>(ctx), std::move(gens));

  std::vector<typename Subspace<K>::Vec> seeds;
  for (std::size_t k = 0; k < truncated_.size(); ++k) {
    const Rational rest = a - levels_[k];
    if (rest <= 0) {
      seeds.push_back(ctx->to_vector_truncated(truncated_[k]));
      continue;
    }
    const auto lower = at(rest);
    const auto& rows = lower->rows();
    std::vector<typename Subspace<K>::Vec> prods(rows.size());
    const auto count = static_cast<std::int64_t>(rows.size());
#pragma omp parallel for schedule(dynamic, 8)
    for (std::int64_t r = 0; r < count; ++r) prods[r] = multiply_row(*ctx, rows[r], truncated_[k]);
    for (auto& v : prods) seeds.push_back(std::move(v));
  }
  Subspace<K> s(ctx);
  s.close_under_variables(std::move(seeds), kernel_);
  return std::make_shared<const TruncatedIdeal<K>>(std::move(s), std::move(gens));
}

template <FieldLike K>
TruncatedIdeal<K> ideal_at_level(const FiltrationSpec<K>& F, const Rational& a, Kernel kernel) {
  LevelIdeals<K> L(F, kernel);
  return *L.at(a);
}

template <FieldLike K>
MuValue mu_P(const FiltrationSpec<K>& F) {
  MuValue best = MuValue::infinity();
  const FiltrationSpec<K> N = F.normalized();
  for (const auto& g : N.generators()) {
    const SatOrd o = g.f.order();
    best = min(best, MuValue::finite(Rational(o.value()) / g.level));
  }
  return best;
}

template <FieldLike K>
bool in_support(const FiltrationSpec<K>& F) {
  const MuValue m = mu_P(F);
  return m.is_infinite() || m.value() >= 1;
}

template <FieldLike K>
bool is_integral_witness(const FiltrationSpec<K>& F, const Poly<K>& f, const Rational& a,
                         std::span<const Poly<K>> coeffs) {
  if (coeffs.empty()) throw Error(ErrorCode::kInvalidArgument, "integral witness needs at least one coefficient");
  const unsigned D = F.ctx().D();
  const auto n = static_cast<unsigned>(coeffs.size());
  Poly<K> total = f.pow(n, D);
  for (unsigned i = 1; i <= n; ++i) total += coeffs[i - 1].multiply(f.pow(n - i, D), D);
  if (!total.truncated(D).is_zero()) return false;
  LevelIdeals<K> L(F);
  for (unsigned i = 1; i <= n; ++i)
    if (!L.at(Rational(i) * a)->contains_truncated(coeffs[i - 1])) return false;
  return true;
}

#define IFILT_INSTANTIATE(K)                                                                                  \
  template class FiltrationSpec<K>;                                                                           \
  template class LevelIdeals<K>;                                                                              \
  template TruncatedIdeal<K> ideal_at_level<K>(const FiltrationSpec<K>&, const Rational&, Kernel);            \
  template MuValue mu_P<K>(const FiltrationSpec<K>&);                                                         \
  template bool in_support<K>(const FiltrationSpec<K>&);                                                      \
  template bool is_integral_witness<K>(const FiltrationSpec<K>&, const Poly<K>&, const Rational&,             \
                                       std::span<const Poly<K>>);                                             \
  template std::vector<K::Element> multiply_row<K>(const TruncationContext<K>&, const std::vector<K::Element>&, \
                                                   const Poly<K>&);

IFILT_INSTANTIATE(FiniteField)
IFILT_INSTANTIATE(RationalField)

}  // namespace ifilt
