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

#include "ifilt/invariants.hpp"

#include <algorithm>
#include <functional>

namespace ifilt {

namespace {

template <FieldLike K>
using PolyMatrix = std::vector<Poly<K>>;  // row-major L x L

template <FieldLike K>
PolyMatrix<K> matmul_trunc(const PolyMatrix<K>& A, const PolyMatrix<K>& B, std::size_t n, const TruncationContext<K>& ctx) {
  PolyMatrix<K> C(n * n, ctx.zero_poly());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) C[i * n + j] += A[i * n + k].multiply(B[k * n + j], ctx.D());
  return C;
}

/// Gauss-Jordan inverse over the field; nullopt when singular.
template <FieldLike K>
std::optional<std::vector<typename K::Element>> invert(const K& k, std::vector<typename K::Element> m, std::size_t n) {
  std::vector<typename K::Element> inv(n * n, k.zero());
  for (std::size_t i = 0; i < n; ++i) inv[i * n + i] = k.one();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && k.is_zero(m[piv * n + col])) ++piv;
    if (piv == n) return std::nullopt;
    for (std::size_t j = 0; j < n; ++j) {
      std::swap(m[piv * n + j], m[col * n + j]);
      std::swap(inv[piv * n + j], inv[col * n + j]);
    }
    const auto s = k.inv(m[col * n + col]);
    for (std::size_t j = 0; j < n; ++j) {
      m[col * n + j] = k.mul(m[col * n + j], s);
      inv[col * n + j] = k.mul(inv[col * n + j], s);
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || k.is_zero(m[i * n + col])) continue;
      const auto f = k.neg(m[i * n + col]);
      for (std::size_t j = 0; j < n; ++j) {
        m[i * n + j] = k.add(m[i * n + j], k.mul(f, m[col * n + j]));
        inv[i * n + j] = k.add(inv[i * n + j], k.mul(f, inv[col * n + j]));
      }
    }
  }
  return inv;
}

template <FieldLike K>
unsigned level_of(const K& k, unsigned e) {
  return k.characteristic() == 0 ? 1u : static_cast<unsigned>(ipow(k.characteristic(), e));
}

/// All B in N^w.size() with Σ b_l w_l <= bound, each reported with |[B]|.
void enumerate_B(const std::vector<unsigned>& w, unsigned bound,
                 const std::function<void(const std::vector<unsigned>&, unsigned)>& visit) {
  std::vector<unsigned> B(w.size(), 0);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t l, unsigned total) {
    if (l == w.size()) {
      visit(B, total);
      return;
    }
    for (unsigned b = 0; total + b * w[l] <= bound; ++b) {
      B[l] = b;
      rec(l + 1, total + b * w[l]);
    }
    B[l] = 0;
  };
  rec(0, 0);
}

template <FieldLike K>
Poly<K> power_product(const std::vector<Poly<K>>& hs, const std::vector<unsigned>& B, unsigned D) {
  Poly<K> out = Poly<K>::constant(hs.empty() ? nullptr : hs[0].field_ptr(), hs.empty() ? 0 : hs[0].nvars(),
                                  hs[0].field().one());
  for (std::size_t l = 0; l < hs.size(); ++l)
    if (B[l] > 0) out = out.multiply(hs[l].pow(B[l], D), D);
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// HSystem

template <FieldLike K>
HSystem<K> HSystem<K>::make(ContextPtr<K> ctx, std::vector<HEntry<K>> entries, bool weak) {
  const K& k = ctx->field();
  const std::size_t d = ctx->nvars();
  const unsigned D = ctx->D();
  std::stable_sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.e < b.e; });
  if (entries.size() > d) throw Error(ErrorCode::kHypothesisViolated, "an H-system has at most d entries");

  // (i): h_l ∈ m^{p^{e_l}} with pure leading form; (ii): the roots of the
  // leading forms are independent (Frobenius is bijective on the field, so
  // this is independence of every Frobenius-lifted subset).
  Echelon<K> roots(&k, d);
  for (std::size_t l = 0; l < entries.size(); ++l) {
    const auto& [h, e] = entries[l];
    ctx->check_poly(h);
    if (k.characteristic() == 0 && e > 0) throw Error(ErrorCode::kHypothesisViolated, "characteristic zero entries must have e = 0");
    const unsigned q = level_of(k, e);
    if (q > D) throw Error(ErrorCode::kRangeViolation, "entry level p^e exceeds the truncation degree");
    const std::string which = "entry " + std::to_string(l + 1);
    if (!h.order().certainly_at_least(q)) throw Error(ErrorCode::kHypothesisViolated, which + " is not in m^{p^e}");
    const auto root = pe_power_root(h.graded_component(q), e);
    if (!root || root->is_zero()) throw Error(ErrorCode::kHypothesisViolated, which + " has no pure leading form");
    std::vector<typename K::Element> v(d, k.zero());
    for (const auto& [m, c] : root->terms()) {
      std::size_t i = 0;
      while (m[i] == 0) ++i;
      v[i] = c;
    }
    if (!roots.insert(std::move(v))) throw Error(ErrorCode::kHypothesisViolated, "leading forms are not independent at " + which);
  }

  HSystem H;
  H.ctx_ = ctx;
  H.entries_ = entries;
  H.weak_ = weak;
  H.perm_.resize(d);
  for (std::size_t i = 0; i < d; ++i) H.perm_[i] = i;
  if (entries.empty()) {
    H.working_ = entries;
    return H;
  }
  H.e_ = entries[0].e;
  H.q_ = level_of(k, H.e_);
  for (const auto& en : entries) {
    if (en.e == H.e_)
      ++H.L_;
    else if (!H.e_next_)
      H.e_next_ = en.e;
  }
  if (H.e_next_) H.u_bound_ = ipow(k.characteristic(), *H.e_next_ - H.e_);
  const std::size_t L = H.L_;

  // Pick L variables whose x_i^{p^e} coefficients give an invertible minor.
  std::vector<std::size_t> chosen;
  Echelon<K> cols(&k, L);
  for (std::size_t i = 0; i < d && chosen.size() < L; ++i) {
    std::vector<typename K::Element> col(L);
    for (std::size_t l = 0; l < L; ++l) col[l] = entries[l].h.coefficient(MultiIndex::unit(d, i, H.q_));
    if (cols.insert(std::move(col))) chosen.push_back(i);
  }
  if (chosen.size() < L) throw Error(ErrorCode::kCoordinatesDoNotNormalize, "coords do not normalize H");
  std::vector<std::size_t> perm = chosen;
  for (std::size_t i = 0; i < d; ++i)
    if (std::find(chosen.begin(), chosen.end(), i) == chosen.end()) perm.push_back(i);
  H.perm_ = perm;
  for (const auto& en : entries) H.working_.push_back(HEntry<K>{en.h.permuted(perm), en.e});

  PolyMatrix<K> M(L * L, ctx->zero_poly());
  std::vector<typename K::Element> M0(L * L);
  for (std::size_t l = 0; l < L; ++l)
    for (std::size_t i = 0; i < L; ++i) {
      M[i * L + l] = hasse_apply(H.working_[l].h, MultiIndex::unit(d, i, H.q_)).truncated(D);
      M0[i * L + l] = M[i * L + l].constant_term();
    }
  const auto M0inv = invert(k, M0, L);
  if (!M0inv) throw Error(ErrorCode::kCoordinatesDoNotNormalize, "coords do not normalize H");

  // C = Σ_k (-M0^{-1} N)^k M0^{-1} with N = M - M0 ∈ m; k <= D suffices.
  PolyMatrix<K> Minv0(L * L, ctx->zero_poly()), X(L * L, ctx->zero_poly());
  for (std::size_t i = 0; i < L * L; ++i) Minv0[i] = Poly<K>::constant(ctx->field_ptr(), d, (*M0inv)[i]);
  PolyMatrix<K> N = M;
  for (std::size_t i = 0; i < L * L; ++i) N[i] -= Poly<K>::constant(ctx->field_ptr(), d, M0[i]);
  X = matmul_trunc(Minv0, N, L, *ctx);
  for (auto& x : X) x = -x;
  PolyMatrix<K> term = Minv0, C = Minv0;
  for (unsigned it = 1; it <= D; ++it) {
    term = matmul_trunc(X, term, L, *ctx);
    bool zero = true;
    for (std::size_t i = 0; i < L * L; ++i) {
      C[i] += term[i];
      zero = zero && term[i].is_zero();
    }
    if (zero) break;
  }
  const PolyMatrix<K> CM = matmul_trunc(C, M, L, *ctx);
  for (std::size_t i = 0; i < L; ++i)
    for (std::size_t j = 0; j < L; ++j) {
      const Poly<K> want = i == j ? ctx->one_poly() : ctx->zero_poly();
      if (!(CM[i * L + j] == want)) throw Error(ErrorCode::kInternal, "C M != I at truncation");
    }
  H.C_ = std::move(C);
  return H;
}

template <FieldLike K>
HSystem<K> HSystem<K>::from_lgs(ContextPtr<K> ctx, const std::vector<LgsEntry<K>>& lgs) {
  std::vector<HEntry<K>> entries;
  for (const auto& en : lgs) entries.push_back(HEntry<K>{en.h, en.e});
  return make(std::move(ctx), std::move(entries), false);
}

template <FieldLike K>
std::vector<Poly<K>> HSystem<K>::polys() const {
  std::vector<Poly<K>> out;
  for (const auto& en : entries_) out.push_back(en.h);
  return out;
}

// ---------------------------------------------------------------------------
// ord_H, μ̃

template <FieldLike K>
OrdH<K>::OrdH(const HSystem<K>& H) : OrdH(H.ctx_ptr(), H.polys()) {}

template <FieldLike K>
OrdH<K>::OrdH(ContextPtr<K> ctx, std::span<const Poly<K>> hs) : ctx_(ctx), ideal_(ideal_image(hs, ctx)) {}

template <FieldLike K>
const Subspace<K>& OrdH<K>::level(unsigned n) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto& slot = sums_[n];
  if (!slot) slot = std::make_unique<Subspace<K>>(sum(power_m<K>(n, ctx_), ideal_));
  return *slot;
}

template <FieldLike K>
SatOrd OrdH<K>::operator()(const Poly<K>& f) const {
  const unsigned D = ctx_->D();
  const auto v = ctx_->to_vector_truncated(f);
  if (ideal_.contains_vec(v)) return f.is_zero() || f.degree() <= D ? SatOrd::infinity() : SatOrd::at_least(D + 1);
  for (unsigned n = 1; n <= D; ++n)
    if (!level(n).contains_vec(v)) return SatOrd::finite(n - 1);
  return SatOrd::finite(D);
}

template <FieldLike K>
SatOrd ord_H(const Poly<K>& f, const HSystem<K>& H) {
  return OrdH<K>(H)(f);
}

template <FieldLike K>
MuValue mu_tilde(const FiltrationSpec<K>& F, const HSystem<K>& H) {
  const FiltrationSpec<K> N = F.normalized();
  if (N.empty()) return MuValue::infinity();
  const OrdH<K> ord(H);
  MuValue best = MuValue::infinity_at_precision();
  for (const auto& g : N.generators()) {
    const SatOrd o = ord(g.f);
    if (o.is_infinite()) continue;
    const Rational v = Rational(o.value()) / g.level;
    best = min(best, o.is_finite() ? MuValue::finite(v) : MuValue::at_least(v));
  }
  return best;
}

// ---------------------------------------------------------------------------
// D_u, F_v and the supporting lemmas

template <FieldLike K>
DiffOp<K> build_Du(const HSystem<K>& H, long u) {
  const auto& ctx = H.ctx();
  DiffOp<K> out(H.ctx_ptr());
  if (u < 0) return out;
  if (H.u_bound() != 0 && static_cast<std::uint64_t>(u) >= H.u_bound())
    throw Error(ErrorCode::kRangeViolation, "u must be < p^{e'-e}");
  if (u == 0) return DiffOp<K>::identity(H.ctx_ptr());
  if (H.empty()) throw Error(ErrorCode::kRangeViolation, "D_u needs a nonempty H-system");
  const std::size_t L = H.L();
  const std::size_t d = ctx.nvars();
  for (const MultiIndex& T : monomials_of_degree(L, static_cast<unsigned>(u))) {
    Poly<K> coef = ctx.one_poly();
    MultiIndex J(d);
    for (std::size_t j = 0; j < L; ++j) {
      if (T[j] == 0) continue;
      coef = coef.multiply(H.c(L - 1, j).pow(T[j], ctx.D()), ctx.D());
      J.set(j, H.q() * T[j]);
    }
    out.add(std::move(coef), J, false);
  }
  return out;
}

template <FieldLike K>
bool supporting1_check(const HSystem<K>& H, const Poly<K>& beta, std::size_t l, long u, unsigned r) {
  if (l < 1 || l > H.size()) throw Error(ErrorCode::kRangeViolation, "entry index out of range");
  if (u < 0) throw Error(ErrorCode::kRangeViolation, "u must be >= 0");
  if (!beta.order().certainly_at_least(r)) throw Error(ErrorCode::kRangeViolation, "beta is not in m^r");
  const auto& ctx = H.ctx();
  const auto& hl = H.working()[l - 1];
  const long bound = static_cast<long>(r) + level_of(ctx.field(), hl.e) - u * static_cast<long>(H.q()) + 1;
  const DiffOp<K> Du = build_Du(H, u), Du1 = build_Du(H, u - 1);
  if (bound <= 0) return true;
  const unsigned top = static_cast<unsigned>(std::min<long>(bound, ctx.D() + 1)) - 1;
  Poly<K> lhs = Du.apply(beta * hl.h);
  Poly<K> rhs = Du.apply(beta) * hl.h;
  if (l == H.L()) rhs += Du1.apply(beta);
  return (lhs - rhs).truncated(top).is_zero();
}

template <FieldLike K>
bool supporting3_check(const HSystem<K>& H, unsigned r) {
  const auto& ctx = H.ctx_ptr();
  const auto hs = H.polys();
  const auto lhs = intersect(Subspace<K>(ideal_image(hs, ctx)), power_m<K>(r, ctx));
  std::vector<Poly<K>> gens;
  for (const auto& en : H.entries()) {
    const long k = static_cast<long>(r) - level_of(ctx->field(), en.e);
    for (const MultiIndex& A : monomials_of_degree(ctx->nvars(), k <= 0 ? 0u : static_cast<unsigned>(k)))
      gens.push_back(en.h.times_monomial(A, ctx->field().one(), ctx->D()));
  }
  return lhs == Subspace<K>(ideal_image(gens, ctx));
}

namespace detail {

template <FieldLike K>
Poly<K> apply_Fv(const HSystem<K>& H, long v, const Poly<K>& f) {
  const auto& ctx = H.ctx();
  const Poly<K>& hL = H.working()[H.L() - 1].h;
  Poly<K> out = ctx.zero_poly();
  Poly<K> hpow = ctx.one_poly();
  for (long u = 1; u <= v; ++u) {
    Poly<K> term = hpow * build_Du(H, u).apply(f);
    out += (u % 2 == 0) ? term : -term;
    hpow = hpow * hL;
  }
  return out;
}

template <FieldLike K>
bool supporting2_check(const HSystem<K>& H, const Poly<K>& alpha, std::span<const Poly<K>> betas, long v, unsigned s) {
  const auto& ctx = H.ctx();
  if (betas.size() != H.size()) throw Error(ErrorCode::kRangeViolation, "need one beta per entry");
  if (v < 1 || (H.u_bound() != 0 && static_cast<std::uint64_t>(v) >= H.u_bound()))
    throw Error(ErrorCode::kRangeViolation, "v out of range");
  Poly<K> combo = alpha;
  for (std::size_t l = 0; l < betas.size(); ++l) {
    const long need = static_cast<long>(s) - level_of(ctx.field(), H.working()[l].e);
    if (need > 0 && !betas[l].order().certainly_at_least(static_cast<unsigned>(need)))
      throw Error(ErrorCode::kRangeViolation, "beta order below s - p^{e_l}");
    combo += betas[l] * H.working()[l].h;
  }
  if (!combo.order().certainly_at_least(s + 1)) throw Error(ErrorCode::kRangeViolation, "alpha + Σ beta h not in m^{s+1}");
  const long bound = static_cast<long>(s) - H.q() + 1;
  if (bound <= 0) return true;
  const unsigned top = static_cast<unsigned>(std::min<long>(bound, ctx.D() + 1)) - 1;
  const std::size_t Li = H.L() - 1;
  const Poly<K>& hL = H.working()[Li].h;
  Poly<K> rhs = apply_Fv(H, v, alpha);
  Poly<K> tail = hL.pow(static_cast<unsigned>(v)) * build_Du(H, v).apply(betas[Li]);
  rhs += (v % 2 == 0) ? tail : -tail;
  for (std::size_t l = 0; l < betas.size(); ++l)
    if (l != Li) rhs += apply_Fv(H, v, betas[l]) * H.working()[l].h;
  return (betas[Li] - rhs).truncated(top).is_zero();
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Coefficient lemma, nonsingularity

Rational default_coefficient_mu(const MuValue& mt, const Rational& a, unsigned D, unsigned grid) {
  if (mt.is_infinite()) return Rational(ceil(a)) * D;
  // mu_tilde = 0 only for a unit at positive level; no mu >= 0 qualifies.
  if (mt.value() == 0) return Rational(-1);
  Rational m = mt.value() - Rational(1, grid);
  return m < 0 ? Rational(0) : m;
}

template <FieldLike K>
bool coefficient_decompose_check(const LevelIdeals<K>& Lv, const HSystem<K>& H, const Rational& a, const Rational& mu) {
  const auto& F = Lv.filtration();
  const auto& ctx = F.ctx_ptr();
  const MuValue mt = mu_tilde(F, H);
  if (!mt.is_infinite() && mu >= mt.value()) throw Error(ErrorCode::kHypothesisViolated, "hypothesis violated: mu >= mu_H");
  if (a <= 0) return Lv.at(a)->is_full();

  const auto hs = H.polys();
  std::vector<unsigned> w;
  for (const auto& en : H.entries()) w.push_back(level_of(ctx->field(), en.e));
  const unsigned wN = w.empty() ? 0 : w.back();
  // |[B]| < a + p^{e_N}; also H^B vanishes mod m^{D+1} once |[B]| > D.
  const Rational limit = a + wN;
  const unsigned bound = std::min<unsigned>(ctx->D(), static_cast<unsigned>(to_int64(ceil(limit))));

  std::vector<typename Subspace<K>::Vec> seeds;
  enumerate_B(w, bound, [&](const std::vector<unsigned>& B, unsigned size) {
    if (Rational(size) >= limit) return;
    const Poly<K> HB = hs.empty() ? ctx->one_poly() : power_product(hs, B, ctx->D());
    const Rational t = a - size;
    if (t <= 0) {
      seeds.push_back(ctx->to_vector_truncated(HB));
      return;
    }
    const long n = static_cast<long>(to_int64(ceil(mu * t)));
    const Subspace<K> Ip = n <= 0 ? Subspace<K>(*Lv.at(t)) : intersect(Subspace<K>(*Lv.at(t)), power_m<K>(n, ctx));
    for (const auto& row : Ip.rows()) seeds.push_back(multiply_row(*ctx, row, HB));
  });
  Subspace<K> rhs(ctx);
  rhs.close_under_variables(std::move(seeds), Kernel::kParallel);
  return rhs == Subspace<K>(*Lv.at(a));
}

template <FieldLike K>
NonsingularityReport nonsingularity_check(const LevelIdeals<K>& Lv, const HSystem<K>& H) {
  const auto& F = Lv.filtration();
  const auto& ctx = F.ctx_ptr();
  const K& k = ctx->field();
  const MuValue mt = mu_tilde(F, H);
  if (!mt.is_infinite()) throw Error(ErrorCode::kHypothesisViolated, "hypotheses not met: mu_tilde is " + mt.to_string());

  NonsingularityReport rep;
  const auto hs = H.polys();
  std::vector<unsigned> w;
  for (const auto& en : H.entries()) w.push_back(level_of(k, en.e));

  // (1) 𝕀_a ⊆ Σ_{|[B]| >= a} R H^B on the level grid up to D.
  const std::int64_t delta = to_int64(F.level_denominator());
  rep.generated_by_H = true;
  for (std::int64_t step = 1; step <= static_cast<std::int64_t>(ctx->D()) * delta; ++step) {
    const Rational a(step, delta);
    std::vector<Poly<K>> gens;
    enumerate_B(w, ctx->D(), [&](const std::vector<unsigned>& B, unsigned size) {
      if (Rational(size) < a) return;
      gens.push_back(power_product(hs, B, ctx->D()));
    });
    const auto rhs = ideal_image(gens, ctx);
    if (!Lv.at(a)->is_subset_of(rhs)) {
      rep.generated_by_H = false;
      rep.failing_level = a;
      rep.diagnosis.push_back("I_" + to_string(a) + " is not generated by H");
      break;
    }
  }

  // (2) every entry at level p^0 = 1.
  rep.all_level_one = true;
  for (std::size_t l = 0; l < H.size(); ++l) {
    if (H.entries()[l].e == 0) continue;
    rep.all_level_one = false;
    rep.failing_entry = l;
    rep.diagnosis.push_back("insufficient saturation: entry " + std::to_string(l + 1) + " sits at level " +
                            std::to_string(w[l]) + " > 1; the filtration is not B-saturated within the probe bounds");
    break;
  }

  // (3) origin ∈ Supp(𝕀) iff origin ∈ V(H); and V(H) smooth there.
  rep.in_support = in_support(F);
  rep.origin_in_V_H = std::all_of(hs.begin(), hs.end(), [&](const Poly<K>& h) { return k.is_zero(h.constant_term()); });
  rep.support_matches = rep.in_support == rep.origin_in_V_H;
  if (!rep.support_matches) rep.diagnosis.push_back("support at the origin differs from V(H)");
  Echelon<K> lin(&k, ctx->nvars());
  for (const auto& h : hs) {
    std::vector<typename K::Element> v(ctx->nvars(), k.zero());
    for (std::size_t i = 0; i < ctx->nvars(); ++i) v[i] = h.coefficient(MultiIndex::unit(ctx->nvars(), i));
    lin.insert(std::move(v));
  }
  rep.linear_rank = lin.rank();
  rep.nonsingular_V_H = rep.linear_rank == hs.size();
  return rep;
}

#define IFILT_INSTANTIATE(K)                                                                                         \
  template class HSystem<K>;                                                                                         \
  template class OrdH<K>;                                                                                            \
  template SatOrd ord_H<K>(const Poly<K>&, const HSystem<K>&);                                                       \
  template MuValue mu_tilde<K>(const FiltrationSpec<K>&, const HSystem<K>&);                                         \
  template DiffOp<K> build_Du<K>(const HSystem<K>&, long);                                                           \
  template bool supporting1_check<K>(const HSystem<K>&, const Poly<K>&, std::size_t, long, unsigned);                \
  template bool supporting3_check<K>(const HSystem<K>&, unsigned);                                                   \
  template bool coefficient_decompose_check<K>(const LevelIdeals<K>&, const HSystem<K>&, const Rational&,            \
                                               const Rational&);                                                     \
  template NonsingularityReport nonsingularity_check<K>(const LevelIdeals<K>&, const HSystem<K>&);                   \
  template Poly<K> detail::apply_Fv<K>(const HSystem<K>&, long, const Poly<K>&);                                     \
  template bool detail::supporting2_check<K>(const HSystem<K>&, const Poly<K>&, std::span<const Poly<K>>, long,      \
                                             unsigned);

IFILT_INSTANTIATE(FiniteField)
IFILT_INSTANTIATE(RationalField)

}  // namespace ifilt
