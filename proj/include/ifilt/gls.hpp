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

// Subspaces of the truncated ring R/m^{D+1}, stored as one reduced echelon
// basis over all monomials of degree <= D. Per-degree slices are views.

#ifndef IFILT_GLS_HPP
#define IFILT_GLS_HPP

#include <span>
#include <string>
#include <vector>

#include "ifilt/context.hpp"
#include "ifilt/linalg/echelon.hpp"
#include "ifilt/linalg/kernels.hpp"

namespace ifilt {

template <FieldLike K>
class Subspace {
 public:
  using Element = typename K::Element;
  using Vec = std::vector<Element>;
  using Ctx = TruncationContext<K>;

  explicit Subspace(ContextPtr<K> ctx) : ctx_(std::move(ctx)), basis_(&ctx_->field(), ctx_->ncols()) {}

  /// Span of the given vectors (not closed under anything).
  static Subspace span(ContextPtr<K> ctx, std::vector<Vec> vs) {
    Subspace s(std::move(ctx));
    for (auto& v : vs) s.basis_.insert(std::move(v));
    s.basis_.make_reduced();
    return s;
  }
  static Subspace span_polys(ContextPtr<K> ctx, std::span<const Poly<K>> fs) {
    std::vector<Vec> vs;
    for (const auto& f : fs) vs.push_back(ctx->to_vector_truncated(f));
    return span(std::move(ctx), std::move(vs));
  }

  const Ctx& ctx() const noexcept { return *ctx_; }
  const ContextPtr<K>& ctx_ptr() const noexcept { return ctx_; }
  std::size_t dim() const noexcept { return basis_.rank(); }
  bool is_zero() const noexcept { return basis_.rank() == 0; }
  bool is_full() const noexcept { return basis_.rank() == ctx_->ncols(); }
  const Echelon<K>& echelon() const noexcept { return basis_; }
  const std::vector<Vec>& rows() const noexcept { return basis_.rows(); }

  std::vector<Poly<K>> basis_polys() const {
    std::vector<Poly<K>> out;
    for (const auto& r : basis_.rows()) out.push_back(ctx_->to_poly(r));
    return out;
  }

  /// Throws Error(kExceedsTruncation) when deg f > D.
  bool contains(const Poly<K>& f) const { return basis_.contains(ctx_->to_vector(f)); }
  bool contains_truncated(const Poly<K>& f) const { return basis_.contains(ctx_->to_vector_truncated(f)); }
  bool contains_vec(const Vec& v) const { return basis_.contains(v); }

  bool is_subset_of(const Subspace& other) const {
    check_same_context(*ctx_, *other.ctx_);
    for (const auto& r : rows())
      if (!other.basis_.contains(r)) return false;
    return true;
  }
  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.dim() == b.dim() && a.is_subset_of(b);
  }

  /// Pivot columns of degree n: the dimension of the degree-n slice of leading forms.
  std::size_t dim_at_degree(unsigned n) const {
    std::size_t k = 0;
    for (std::size_t r = 0; r < basis_.rank(); ++r)
      if (ctx_->column_degree(basis_.pivot(r)) == n) ++k;
    return k;
  }

  /// Indices of basis rows whose pivot has degree n.
  std::vector<std::size_t> rows_at_degree(unsigned n) const {
    std::vector<std::size_t> out;
    for (std::size_t r = 0; r < basis_.rank(); ++r)
      if (ctx_->column_degree(basis_.pivot(r)) == n) out.push_back(r);
    return out;
  }

  /// The homogeneous subspace of G_n formed by the degree-n parts of the
  /// elements of this subspace that lie in m^n.
  Subspace leading_slice(unsigned n) const {
    std::vector<Vec> vs;
    for (std::size_t r : rows_at_degree(n)) vs.push_back(degree_part(rows()[r], n));
    return span(ctx_, std::move(vs));
  }

  Vec degree_part(const Vec& v, unsigned n) const {
    Vec out = ctx_->zero_vec();
    for (std::size_t c = ctx_->degree_begin(n); c < ctx_->degree_end(n); ++c) out[c] = v[c];
    return out;
  }

  // Mutation used by builders; keeps the canonical form.
  void insert_all(std::vector<Vec> vs) {
    for (auto& v : vs) basis_.insert(std::move(v));
    basis_.make_reduced();
  }
  void close_under_variables(std::vector<Vec> seeds, Kernel kernel) {
    close_ideal(basis_, *ctx_, std::move(seeds), kernel);
    basis_.make_reduced();
  }

 protected:
  ContextPtr<K> ctx_;
  Echelon<K> basis_;
};

/// Image of an ideal in R/m^{D+1}, with the generators that produced it.
template <FieldLike K>
class TruncatedIdeal : public Subspace<K> {
 public:
  TruncatedIdeal(Subspace<K> space, std::vector<Poly<K>> gens) : Subspace<K>(std::move(space)), gens_(std::move(gens)) {}
  const std::vector<Poly<K>>& generators() const noexcept { return gens_; }

 private:
  std::vector<Poly<K>> gens_;
};

/// Image of the ideal generated by gens: span of all X^A g truncated.
template <FieldLike K>
TruncatedIdeal<K> ideal_image(std::span<const Poly<K>> gens, ContextPtr<K> ctx, Kernel kernel = Kernel::kParallel) {
  Subspace<K> s(ctx);
  std::vector<typename Subspace<K>::Vec> seeds;
  for (const auto& g : gens) seeds.push_back(ctx->to_vector_truncated(g));
  s.close_under_variables(std::move(seeds), kernel);
  return TruncatedIdeal<K>(std::move(s), std::vector<Poly<K>>(gens.begin(), gens.end()));
}
template <FieldLike K>
TruncatedIdeal<K> ideal_image(const std::vector<Poly<K>>& gens, ContextPtr<K> ctx, Kernel kernel = Kernel::kParallel) {
  return ideal_image(std::span<const Poly<K>>(gens), std::move(ctx), kernel);
}

/// Ideal generated by the rows of an existing subspace.
template <FieldLike K>
Subspace<K> ideal_closure(const Subspace<K>& s, Kernel kernel = Kernel::kParallel) {
  Subspace<K> out(s.ctx_ptr());
  out.close_under_variables(s.rows(), kernel);
  return out;
}

/// Membership; throws Error(kExceedsTruncation) when deg f > D.
template <FieldLike K>
bool membership(const Poly<K>& f, const Subspace<K>& s) {
  return s.contains(f);
}

template <FieldLike K>
Subspace<K> sum(const Subspace<K>& a, const Subspace<K>& b) {
  check_same_context(a.ctx(), b.ctx());
  Subspace<K> s = a;
  s.insert_all(b.rows());
  return s;
}

/// Zassenhaus: reduce rows [v | v] for v in a and [w | 0] for w in b; the
/// rows with vanishing left half carry a basis of the intersection.
template <FieldLike K>
Subspace<K> intersect(const Subspace<K>& a, const Subspace<K>& b) {
  check_same_context(a.ctx(), b.ctx());
  const std::size_t n = a.ctx().ncols();
  const K& k = a.ctx().field();
  Echelon<K> e(&k, 2 * n);
  for (const auto& v : a.rows()) {
    typename Subspace<K>::Vec w(2 * n, k.zero());
    std::copy(v.begin(), v.end(), w.begin());
    std::copy(v.begin(), v.end(), w.begin() + static_cast<std::ptrdiff_t>(n));
    e.insert(std::move(w));
  }
  for (const auto& v : b.rows()) {
    typename Subspace<K>::Vec w(2 * n, k.zero());
    std::copy(v.begin(), v.end(), w.begin());
    e.insert(std::move(w));
  }
  std::vector<typename Subspace<K>::Vec> out;
  for (std::size_t r = 0; r < e.rank(); ++r)
    if (e.pivot(r) >= n) out.emplace_back(e.rows()[r].begin() + static_cast<std::ptrdiff_t>(n), e.rows()[r].end());
  return Subspace<K>::span(a.ctx_ptr(), std::move(out));
}

/// Image of m^n; the full ring when n <= 0 and zero when n > D.
template <FieldLike K>
Subspace<K> power_m(long n, ContextPtr<K> ctx) {
  const auto& c = *ctx;
  std::vector<typename Subspace<K>::Vec> vs;
  const std::size_t from = n <= 0 ? 0 : c.degree_begin(static_cast<unsigned>(n));
  for (std::size_t col = from; col < c.ncols(); ++col) {
    auto v = c.zero_vec();
    v[col] = c.field().one();
    vs.push_back(std::move(v));
  }
  return Subspace<K>::span(std::move(ctx), std::move(vs));
}

template <FieldLike K>
Subspace<K> full_ring(ContextPtr<K> ctx) {
  return power_m<K>(0, std::move(ctx));
}

}  // namespace ifilt

#endif  // IFILT_GLS_HPP
