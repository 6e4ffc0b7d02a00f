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

// Text format for filtration specs read by the command-line tool.
//
//   # comment
//   field: GF(2)            # GF(p), GF(p^m), GF(q), QQ
//   generator: a            # extension-field generator symbol (default a)
//   vars: x, y
//   truncation: 10
//   boundary: y             # optional
//   gen: x^2 + y^3 @ 2
//   candidate: y @ 1        # extra radical-probe candidates
//   emax: 3
//   radical-n-max: 8
//   radical-grid: 64

#ifndef IFILT_SPEC_FILE_HPP
#define IFILT_SPEC_FILE_HPP

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ifilt/coeff.hpp"
#include "ifilt/filtration.hpp"
#include "ifilt/poly_io.hpp"
#include "ifilt/saturation.hpp"

namespace ifilt {

inline constexpr std::size_t kEnvelopeVars = 6;
inline constexpr unsigned kEnvelopeTruncation = 16;

struct SpecEntry {
  std::string poly;  // canonical printing over the declared field and vars
  Rational level;
  friend bool operator==(const SpecEntry&, const SpecEntry&) = default;
};

struct SpecFile {
  FieldSpec field;
  std::string symbol = "a";
  std::vector<std::string> vars;
  unsigned truncation = 0;
  std::vector<std::string> boundary;
  std::vector<SpecEntry> gens;
  std::vector<SpecEntry> candidates;
  std::optional<unsigned> emax;
  RadicalProbeBounds bounds;

  friend bool operator==(const SpecFile& a, const SpecFile& b) {
    return a.field == b.field && a.symbol == b.symbol && a.vars == b.vars && a.truncation == b.truncation &&
           a.boundary == b.boundary && a.gens == b.gens && a.candidates == b.candidates && a.emax == b.emax &&
           a.bounds.n_max == b.bounds.n_max && a.bounds.grid == b.bounds.grid;
  }
};

/// First error wins; messages start with "line N:". Codes: kSyntax,
/// kUnknownVariable, kNotPrimePower, kTruncationEnvelope.
SpecFile parse_spec(std::string_view text);

std::string print_spec(const SpecFile& spec);

/// Appends `<poly> @ <level>` lines (blank lines and # comments skipped) to
/// spec.candidates.
void add_candidates(SpecFile& spec, std::string_view text);

/// Throws Error(kTruncationEnvelope) outside 1 <= d <= 6, 1 <= D <= 16.
void check_envelope(std::size_t nvars, unsigned D);

/// Calls fn(std::shared_ptr<const K>) with the spec's field object.
template <class Fn>
decltype(auto) with_field(const SpecFile& spec, Fn&& fn) {
  if (spec.field.kind == FieldKind::kRationals) return fn(std::make_shared<const RationalField>());
  auto k = std::make_shared<FiniteField>(*make_finite_field(spec.field));
  k->set_symbol(spec.symbol);
  return fn(std::shared_ptr<const FiniteField>(std::move(k)));
}

template <FieldLike K>
ContextPtr<K> make_context(const SpecFile& spec, std::shared_ptr<const K> k) {
  std::vector<bool> mask;
  if (!spec.boundary.empty()) {
    mask.assign(spec.vars.size(), false);
    for (const auto& b : spec.boundary)
      for (std::size_t i = 0; i < spec.vars.size(); ++i)
        if (spec.vars[i] == b) mask[i] = true;
  }
  return TruncationContext<K>::make(std::move(k), spec.vars.size(), spec.truncation, std::move(mask));
}

template <FieldLike K>
std::vector<Generator<K>> to_generators(const std::vector<SpecEntry>& entries, const ContextPtr<K>& ctx,
                                        std::span<const std::string> names) {
  std::vector<Generator<K>> out;
  for (const auto& e : entries) out.push_back(Generator<K>{parse_poly<K>(e.poly, ctx->field_ptr(), names), e.level});
  return out;
}

template <FieldLike K>
FiltrationSpec<K> to_filtration(const SpecFile& spec, const ContextPtr<K>& ctx) {
  return FiltrationSpec<K>(ctx, to_generators<K>(spec.gens, ctx, spec.vars));
}

}  // namespace ifilt

#endif  // IFILT_SPEC_FILE_HPP
