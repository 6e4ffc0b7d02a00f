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

// Dense row echelon form over an exact field. A row's pivot is its first
// nonzero column and is normalized to 1. Columns are in GradedLex order, so
// the pivot of a polynomial row is its lowest-degree monomial.

#ifndef IFILT_LINALG_ECHELON_HPP
#define IFILT_LINALG_ECHELON_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "ifilt/coeff.hpp"

namespace ifilt {

template <FieldLike K>
class Echelon {
 public:
  using Element = typename K::Element;
  using Vec = std::vector<Element>;

  Echelon(const K* field, std::size_t ncols) : field_(field), ncols_(ncols), row_of_col_(ncols, -1) {}

  std::size_t ncols() const noexcept { return ncols_; }
  std::size_t rank() const noexcept { return rows_.size(); }
  const std::vector<Vec>& rows() const noexcept { return rows_; }
  std::size_t pivot(std::size_t r) const noexcept { return pivots_[r]; }
  /// Row whose pivot is column c, or -1.
  std::int64_t row_of_column(std::size_t c) const noexcept { return row_of_col_[c]; }
  const K& field() const noexcept { return *field_; }

  /// Eliminates every pivot column from v. Returns true if v became zero.
  bool reduce(Vec& v) const {
    bool nonzero = false;
    for (std::size_t c = 0; c < ncols_; ++c) {
      if (field_->is_zero(v[c])) continue;
      const std::int64_t r = row_of_col_[c];
      if (r < 0) {
        nonzero = true;
        continue;
      }
      axpy(v, field_->neg(v[c]), rows_[static_cast<std::size_t>(r)], c);
    }
    return !nonzero;
  }

  /// As reduce(), also recording v_original = v_reduced + sum coeffs[r] * row r.
  bool reduce_tracked(Vec& v, std::vector<Element>& coeffs) const {
    coeffs.assign(rows_.size(), field_->zero());
    bool nonzero = false;
    for (std::size_t c = 0; c < ncols_; ++c) {
      if (field_->is_zero(v[c])) continue;
      const std::int64_t r = row_of_col_[c];
      if (r < 0) {
        nonzero = true;
        continue;
      }
      coeffs[static_cast<std::size_t>(r)] = v[c];
      axpy(v, field_->neg(v[c]), rows_[static_cast<std::size_t>(r)], c);
    }
    return !nonzero;
  }

  bool contains(Vec v) const { return reduce(v); }

  /// Adds v to the span. Returns the new row index, or nullopt if v was
  /// already in the span.
  std::optional<std::size_t> insert(Vec v) {
    if (v.size() != ncols_) throw Error(ErrorCode::kInvalidArgument, "echelon: row length mismatch");
    if (reduce(v)) return std::nullopt;
    return insert_reduced(std::move(v));
  }

  /// Inserts a vector that is already reduced against this basis and nonzero.
  std::size_t insert_reduced(Vec v) {
    std::size_t c = 0;
    while (field_->is_zero(v[c])) ++c;
    const Element s = field_->inv(v[c]);
    for (std::size_t j = c; j < ncols_; ++j)
      if (!field_->is_zero(v[j])) v[j] = field_->mul(v[j], s);
    rows_.push_back(std::move(v));
    pivots_.push_back(c);
    row_of_col_[c] = static_cast<std::int64_t>(rows_.size() - 1);
    return rows_.size() - 1;
  }

  /// Reduced row echelon form with rows sorted by pivot: the canonical basis
  /// of the span.
  void make_reduced() {
    std::vector<std::size_t> order(rows_.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivots_[a] < pivots_[b]; });
    std::vector<Vec> rows;
    std::vector<std::size_t> pivots;
    rows.reserve(rows_.size());
    for (std::size_t r : order) {
      rows.push_back(std::move(rows_[r]));
      pivots.push_back(pivots_[r]);
    }
    rows_ = std::move(rows);
    pivots_ = std::move(pivots);
    std::fill(row_of_col_.begin(), row_of_col_.end(), -1);
    for (std::size_t r = 0; r < rows_.size(); ++r) row_of_col_[pivots_[r]] = static_cast<std::int64_t>(r);
    // Back substitution, bottom row first.
    for (std::size_t r = rows_.size(); r-- > 0;) {
      for (std::size_t s = 0; s < r; ++s) {
        const Element f = rows_[s][pivots_[r]];
        if (!field_->is_zero(f)) axpy(rows_[s], field_->neg(f), rows_[r], pivots_[r]);
      }
    }
  }

  /// v += s * row, touching columns >= from.
  void axpy(Vec& v, const Element& s, const Vec& row, std::size_t from) const {
    for (std::size_t j = from; j < ncols_; ++j)
      if (!field_->is_zero(row[j])) v[j] = field_->add(v[j], field_->mul(s, row[j]));
  }

 private:
  const K* field_;
  std::size_t ncols_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<std::int64_t> row_of_col_;
};

}  // namespace ifilt

#endif  // IFILT_LINALG_ECHELON_HPP
