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

#ifndef IFILT_TESTS_FIXTURES_HPP
#define IFILT_TESTS_FIXTURES_HPP

#include <memory>
#include <string>
#include <vector>

#include "ifilt/context.hpp"
#include "ifilt/filtration.hpp"
#include "ifilt/poly_io.hpp"

namespace fx {

using namespace ifilt;

using GF = FiniteField;
using QQ = RationalField;

inline std::shared_ptr<const GF> gf(std::uint32_t p, unsigned m = 1) {
  return std::make_shared<const GF>(m == 1 ? GF::prime(p) : GF::extension(p, m));
}
inline std::shared_ptr<const QQ> qq() { return std::make_shared<const QQ>(); }

template <FieldLike K>
ContextPtr<K> ctx(std::shared_ptr<const K> k, std::size_t d, unsigned D, std::vector<bool> boundary = {}) {
  return TruncationContext<K>::make(std::move(k), d, D, std::move(boundary));
}

/// Parses in the default variable names x, y, z, w.
template <FieldLike K>
Poly<K> P(const std::shared_ptr<const TruncationContext<K>>& c, const std::string& text) {
  const auto names = default_names(c->nvars());
  return parse_poly<K>(text, c->field_ptr(), names);
}

template <FieldLike K>
std::string S(const Poly<K>& f) {
  return to_string(f);
}

template <FieldLike K>
FiltrationSpec<K> G(const std::shared_ptr<const TruncationContext<K>>& c, std::initializer_list<std::pair<const char*, Rational>> gens) {
  FiltrationSpec<K> F(c);
  for (const auto& [f, a] : gens) F.add(P(c, f), a);
  return F;
}

}  // namespace fx

#endif  // IFILT_TESTS_FIXTURES_HPP
