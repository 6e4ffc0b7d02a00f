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

#include "ifilt/extended.hpp"
#include "ifilt/multi_index.hpp"

#include <algorithm>

namespace ifilt {

namespace {

void fill_degree(std::size_t nvars, unsigned n, std::size_t pos, MultiIndex& cur, std::vector<MultiIndex>& out) {
  if (pos + 1 == nvars) {
    cur.set(pos, n);
    out.push_back(cur);
    return;
  }
  for (unsigned k = n + 1; k-- > 0;) {
    cur.set(pos, k);
    fill_degree(nvars, n - k, pos + 1, cur, out);
  }
  cur.set(pos, 0);
}

}  // namespace

std::vector<MultiIndex> monomials_of_degree(std::size_t nvars, unsigned n) {
  std::vector<MultiIndex> out;
  if (nvars == 0) {
    if (n == 0) out.emplace_back(0);
    return out;
  }
  MultiIndex cur(nvars);
  fill_degree(nvars, n, 0, cur, out);
  return out;
}

std::vector<MultiIndex> monomials_up_to(std::size_t nvars, unsigned n) {
  std::vector<MultiIndex> out;
  for (unsigned k = 0; k <= n; ++k) {
    auto layer = monomials_of_degree(nvars, k);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

std::string SatOrd::to_string() const {
  switch (kind_) {
    case Kind::kFinite: return std::to_string(value_);
    case Kind::kAtLeast: return ">=" + std::to_string(value_);
    case Kind::kInfinite: return "infinity";
  }
  return "?";
}

MuValue min(const MuValue& a, const MuValue& b) {
  if (b.kind_ == MuValue::Kind::kInfinite) return a;
  if (a.kind_ == MuValue::Kind::kInfinite) return b;
  if (b.kind_ == MuValue::Kind::kInfiniteAtPrecision) return a;
  if (a.kind_ == MuValue::Kind::kInfiniteAtPrecision) return b;
  if (a.value_ < b.value_) return a.is_finite() ? a : MuValue::at_least(a.value_);
  if (b.value_ < a.value_) return b.is_finite() ? b : MuValue::at_least(b.value_);
  return a.is_finite() ? a : b;
}

std::string MuValue::to_string() const {
  switch (kind_) {
    case Kind::kFinite: return ifilt::to_string(value_);
    case Kind::kAtLeast: return ">=" + ifilt::to_string(value_);
    case Kind::kInfiniteAtPrecision: return "infinity (at precision)";
    case Kind::kInfinite: return "infinity";
  }
  return "?";
}

}  // namespace ifilt
