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

#ifndef IFILT_POLY_HPP
#define IFILT_POLY_HPP

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ifilt/coeff.hpp"
#include "ifilt/extended.hpp"
#include "ifilt/multi_index.hpp"

namespace ifilt {

/// Sparse multivariate polynomial over a field K. No stored coefficient is
/// zero; terms iterate in GradedLex order (lowest degree first).
template <FieldLike K>
class Poly {
 public:
  using Element = typename K::Element;
  using FieldPtr = std::shared_ptr<const K>;
  using TermMap = std::map<MultiIndex, Element, GradedLex>;

  Poly(FieldPtr field, std::size_t nvars) : field_(std::move(field)), nvars_(nvars) {
    if (!field_) throw Error(ErrorCode::kInvalidArgument, "Poly: null field");
    if (nvars_ > kMaxVars) throw Error(ErrorCode::kRangeViolation, "too many variables (max 8)");
  }

  static Poly constant(FieldPtr field, std::size_t nvars, const Element& c) {
    Poly f(std::move(field), nvars);
    f.add_term(MultiIndex(nvars), c);
    return f;
  }
  static Poly monomial(FieldPtr field, std::size_t nvars, const MultiIndex& m, const Element& c) {
    Poly f(std::move(field), nvars);
    f.add_term(m, c);
    return f;
  }
  static Poly monomial(FieldPtr field, std::size_t nvars, const MultiIndex& m) {
    const Element one = field->one();
    return monomial(std::move(field), nvars, m, one);
  }
  static Poly variable(FieldPtr field, std::size_t nvars, std::size_t i) {
    return monomial(std::move(field), nvars, MultiIndex::unit(nvars, i));
  }

  const FieldPtr& field_ptr() const noexcept { return field_; }
  const K& field() const noexcept { return *field_; }
  std::size_t nvars() const noexcept { return nvars_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t num_terms() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  Element coefficient(const MultiIndex& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? field_->zero() : it->second;
  }
  Element constant_term() const { return coefficient(MultiIndex(nvars_)); }

  /// terms[m] += c, dropping the entry if it cancels.
  void add_term(const MultiIndex& m, const Element& c) {
    if (m.size() != nvars_) throw Error(ErrorCode::kInvalidArgument, "monomial has wrong number of variables");
    if (field_->is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (inserted) return;
    it->second = field_->add(it->second, c);
    if (field_->is_zero(it->second)) terms_.erase(it);
  }

  /// Largest total degree of a term; 0 for the zero polynomial.
  unsigned degree() const noexcept { return terms_.empty() ? 0 : terms_.rbegin()->first.degree(); }

  /// Order at the origin: the lowest total degree of a term.
  SatOrd order() const noexcept {
    return terms_.empty() ? SatOrd::infinity() : SatOrd::finite(terms_.begin()->first.degree());
  }

  Poly truncated(unsigned max_degree) const {
    Poly r(field_, nvars_);
    for (const auto& [m, c] : terms_) {
      if (m.degree() > max_degree) break;
      r.terms_.emplace_hint(r.terms_.end(), m, c);
    }
    return r;
  }

  Poly graded_component(unsigned n) const {
    Poly r(field_, nvars_);
    for (const auto& [m, c] : terms_)
      if (m.degree() == n) r.terms_.emplace_hint(r.terms_.end(), m, c);
    return r;
  }

  Poly scaled(const Element& s) const {
    Poly r(field_, nvars_);
    if (field_->is_zero(s)) return r;
    for (const auto& [m, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), m, field_->mul(c, s));
    return r;
  }

  Poly times_monomial(const MultiIndex& a, const Element& s, std::optional<unsigned> max_degree = std::nullopt) const {
    Poly r(field_, nvars_);
    if (field_->is_zero(s)) return r;
    for (const auto& [m, c] : terms_) {
      MultiIndex t = m + a;
      if (max_degree && t.degree() > *max_degree) break;
      r.terms_.emplace_hint(r.terms_.end(), std::move(t), field_->mul(c, s));
    }
    return r;
  }

  Poly& operator+=(const Poly& g) {
    check_compatible(g);
    for (const auto& [m, c] : g.terms_) add_term(m, c);
    return *this;
  }
  Poly& operator-=(const Poly& g) {
    check_compatible(g);
    for (const auto& [m, c] : g.terms_) add_term(m, field_->neg(c));
    return *this;
  }
  friend Poly operator+(Poly f, const Poly& g) { return f += g; }
  friend Poly operator-(Poly f, const Poly& g) { return f -= g; }
  friend Poly operator-(const Poly& f) { return f.scaled(f.field_->neg(f.field_->one())); }

  /// Exact product, or the product with terms above max_degree discarded.
  Poly multiply(const Poly& g, std::optional<unsigned> max_degree = std::nullopt) const {
    check_compatible(g);
    Poly r(field_, nvars_);
    for (const auto& [m, c] : terms_) {
      if (max_degree && m.degree() > *max_degree) break;
      for (const auto& [n, d] : g.terms_) {
        if (max_degree && m.degree() + n.degree() > *max_degree) break;
        r.add_term(m + n, field_->mul(c, d));
      }
    }
    return r;
  }
  friend Poly operator*(const Poly& f, const Poly& g) { return f.multiply(g); }

  Poly pow(unsigned n, std::optional<unsigned> max_degree = std::nullopt) const {
    Poly r = constant(field_, nvars_, field_->one());
    Poly b = *this;
    while (n > 0) {
      if (n & 1u) r = r.multiply(b, max_degree);
      n >>= 1;
      if (n > 0) b = b.multiply(b, max_degree);
    }
    return max_degree ? r.truncated(*max_degree) : r;
  }

  /// Renames variables: variable i of the result is variable perm[i] of this.
  Poly permuted(std::span<const std::size_t> perm) const {
    Poly r(field_, nvars_);
    for (const auto& [m, c] : terms_) {
      MultiIndex t(nvars_);
      for (std::size_t i = 0; i < nvars_; ++i) t.set(i, m[perm[i]]);
      r.add_term(t, c);
    }
    return r;
  }

  friend bool operator==(const Poly& f, const Poly& g) {
    return f.nvars_ == g.nvars_ && same_field(f, g) && f.terms_ == g.terms_;
  }

  static bool same_field(const Poly& f, const Poly& g) {
    return f.field_ == g.field_ || *f.field_ == *g.field_;
  }

 private:
  void check_compatible(const Poly& g) const {
    if (!same_field(*this, g)) throw Error(ErrorCode::kFieldMismatch, "polynomials over different fields");
    if (nvars_ != g.nvars_) throw Error(ErrorCode::kInvalidArgument, "polynomials in different rings");
  }

  FieldPtr field_;
  std::size_t nvars_;
  TermMap terms_;
};

/// f * g with every term of total degree > max_degree discarded.
template <FieldLike K>
Poly<K> mul_trunc(const Poly<K>& f, const Poly<K>& g, unsigned max_degree) {
  return f.multiply(g, max_degree);
}

template <FieldLike K>
SatOrd order_at_origin(const Poly<K>& f) {
  return f.order();
}

template <FieldLike K>
Poly<K> graded_component(const Poly<K>& f, unsigned n) {
  return f.graded_component(n);
}

/// g^(p^e) in characteristic p > 0, computed termwise (Frobenius is additive).
template <FieldLike K>
Poly<K> frobenius_power(const Poly<K>& g, unsigned e) {
  const std::uint32_t p = g.field().characteristic();
  if (e == 0) return g;
  if (p == 0) throw Error(ErrorCode::kCharacteristicZero, "char-0 has no Frobenius");
  const auto q = static_cast<unsigned>(ipow(p, e));
  Poly<K> r(g.field_ptr(), g.nvars());
  for (const auto& [m, c] : g.terms()) r.add_term(q * m, g.field().pow(c, q));
  return r;
}

/// The polynomial h with h^(p^e) = f if one exists: every exponent must be
/// divisible by p^e; each coefficient is replaced by its Frobenius root.
template <FieldLike K>
std::optional<Poly<K>> pe_power_root(const Poly<K>& f, unsigned e) {
  if (e == 0) return f;
  const std::uint32_t p = f.field().characteristic();
  if (p == 0) throw Error(ErrorCode::kCharacteristicZero, "char-0 has no Frobenius");
  const auto q = static_cast<unsigned>(ipow(p, e));
  Poly<K> r(f.field_ptr(), f.nvars());
  for (const auto& [m, c] : f.terms()) {
    MultiIndex root(f.nvars());
    for (std::size_t i = 0; i < f.nvars(); ++i) {
      if (m[i] % q != 0) return std::nullopt;
      root.set(i, m[i] / q);
    }
    r.add_term(root, f.field().frobenius_root(c, e));
  }
  return r;
}

}  // namespace ifilt

#endif  // IFILT_POLY_HPP
