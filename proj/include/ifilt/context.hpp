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

// The Artinian quotient R/m^{D+1}: a fixed column layout of all monomials of
// degree <= D, plus the boundary divisor for logarithmic operators.

#ifndef IFILT_CONTEXT_HPP
#define IFILT_CONTEXT_HPP

#include <cstdint>
#include <memory>
#include <unordered_map>
#include <vector>

#include "ifilt/poly.hpp"

namespace ifilt {

template <FieldLike K>
class TruncationContext {
 public:
  using Element = typename K::Element;
  using Vec = std::vector<Element>;
  using FieldPtr = std::shared_ptr<const K>;
  using Ptr = std::shared_ptr<const TruncationContext>;

  /// boundary[i] marks x_i as a component of the boundary E; empty means none.
  static Ptr make(FieldPtr field, std::size_t nvars, unsigned D, std::vector<bool> boundary = {}) {
    return Ptr(new TruncationContext(std::move(field), nvars, D, std::move(boundary)));
  }

  const FieldPtr& field_ptr() const noexcept { return field_; }
  const K& field() const noexcept { return *field_; }
  std::size_t nvars() const noexcept { return nvars_; }
  unsigned D() const noexcept { return D_; }
  const std::vector<bool>& boundary() const noexcept { return boundary_; }
  bool has_boundary() const noexcept {
    for (bool b : boundary_)
      if (b) return true;
    return false;
  }

  std::size_t ncols() const noexcept { return cols_.size(); }
  const MultiIndex& monomial(std::size_t c) const noexcept { return cols_[c]; }
  unsigned column_degree(std::size_t c) const noexcept { return cols_[c].degree(); }
  /// Columns of degree n occupy [degree_begin(n), degree_begin(n+1)).
  std::size_t degree_begin(unsigned n) const noexcept { return n > D_ ? cols_.size() : begin_[n]; }
  std::size_t degree_end(unsigned n) const noexcept { return degree_begin(n + 1); }

  /// Column of m, or -1 when deg m > D.
  std::int64_t column(const MultiIndex& m) const {
    auto it = index_.find(m);
    return it == index_.end() ? -1 : static_cast<std::int64_t>(it->second);
  }
  /// Column of x_i * monomial(c), or -1 past the truncation.
  std::int32_t shifted(std::size_t c, std::size_t i) const noexcept { return shift_[c * nvars_ + i]; }

  Poly<K> zero_poly() const { return Poly<K>(field_, nvars_); }
  Poly<K> one_poly() const { return Poly<K>::constant(field_, nvars_, field_->one()); }
  Poly<K> var(std::size_t i) const { return Poly<K>::variable(field_, nvars_, i); }

  Vec zero_vec() const { return Vec(cols_.size(), field_->zero()); }

  /// Throws Error(kExceedsTruncation) when deg f > D.
  Vec to_vector(const Poly<K>& f) const {
    if (!f.is_zero() && f.degree() > D_) throw Error(ErrorCode::kExceedsTruncation, "polynomial exceeds truncation degree");
    return to_vector_truncated(f);
  }
  /// Image of f in R/m^{D+1}.
  Vec to_vector_truncated(const Poly<K>& f) const {
    check_poly(f);
    Vec v = zero_vec();
    for (const auto& [m, c] : f.terms()) {
      if (m.degree() > D_) break;
      v[index_.at(m)] = c;
    }
    return v;
  }
  Poly<K> to_poly(const Vec& v) const {
    Poly<K> f(field_, nvars_);
    for (std::size_t c = 0; c < v.size(); ++c)
      if (!field_->is_zero(v[c])) f.add_term(cols_[c], v[c]);
    return f;
  }
  /// x_i * v with terms beyond degree D dropped.
  Vec shift(const Vec& v, std::size_t i) const {
    Vec r = zero_vec();
    for (std::size_t c = 0; c < v.size(); ++c) {
      if (field_->is_zero(v[c])) continue;
      const std::int32_t t = shifted(c, i);
      if (t >= 0) r[static_cast<std::size_t>(t)] = v[c];
    }
    return r;
  }

  void check_poly(const Poly<K>& f) const {
    if (f.nvars() != nvars_) throw Error(ErrorCode::kInvalidArgument, "polynomial has wrong number of variables");
    if (!(f.field_ptr() == field_ || f.field() == *field_)) throw Error(ErrorCode::kFieldMismatch, "polynomial over a different field");
  }

  friend bool operator==(const TruncationContext& a, const TruncationContext& b) {
    return a.nvars_ == b.nvars_ && a.D_ == b.D_ && a.boundary_ == b.boundary_ && (a.field_ == b.field_ || *a.field_ == *b.field_);
  }

 private:
  TruncationContext(FieldPtr field, std::size_t nvars, unsigned D, std::vector<bool> boundary)
      : field_(std::move(field)), nvars_(nvars), D_(D), boundary_(std::move(boundary)) {
    if (!field_) throw Error(ErrorCode::kInvalidArgument, "null field");
    if (nvars_ == 0 || nvars_ > kMaxVars) throw Error(ErrorCode::kRangeViolation, "number of variables must be in 1..8");
    if (D_ < 1) throw Error(ErrorCode::kRangeViolation, "truncation degree must be >= 1");
    if (boundary_.empty()) boundary_.assign(nvars_, false);
    if (boundary_.size() != nvars_) throw Error(ErrorCode::kInvalidArgument, "boundary mask has wrong length");
    cols_ = monomials_up_to(nvars_, D_);
    index_.reserve(cols_.size());
    begin_.assign(D_ + 2, cols_.size());
    for (std::size_t c = 0; c < cols_.size(); ++c) {
      index_.emplace(cols_[c], c);
      const unsigned n = cols_[c].degree();
      if (begin_[n] == cols_.size()) begin_[n] = c;
    }
    shift_.assign(cols_.size() * nvars_, -1);
    for (std::size_t c = 0; c < cols_.size(); ++c) {
      if (cols_[c].degree() == D_) continue;
      for (std::size_t i = 0; i < nvars_; ++i)
        shift_[c * nvars_ + i] = static_cast<std::int32_t>(index_.at(cols_[c] + MultiIndex::unit(nvars_, i)));
    }
  }

  FieldPtr field_;
  std::size_t nvars_;
  unsigned D_;
  std::vector<bool> boundary_;
  std::vector<MultiIndex> cols_;
  std::unordered_map<MultiIndex, std::size_t, MultiIndexHash> index_;
  std::vector<std::size_t> begin_;
  std::vector<std::int32_t> shift_;
};

template <FieldLike K>
using ContextPtr = typename TruncationContext<K>::Ptr;

template <FieldLike K>
void check_same_context(const TruncationContext<K>& a, const TruncationContext<K>& b) {
  if (&a != &b && !(a == b)) throw Error(ErrorCode::kContextMismatch, "objects built over different truncation contexts");
}

}  // namespace ifilt

#endif  // IFILT_CONTEXT_HPP
