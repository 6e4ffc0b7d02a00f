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

// Exact scalar arithmetic: binomial services, finite fields F_q (q = p^m)
// and the rationals. The two field classes share one duck-typed interface
// (see the FieldLike concept); every algebraic template in the library is
// parameterized on it.

#ifndef IFILT_COEFF_HPP
#define IFILT_COEFF_HPP

#include <concepts>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ifilt/error.hpp"
#include "ifilt/rational.hpp"

namespace ifilt {

// ---------------------------------------------------------------------------
// Binomial coefficients

/// Exact C(n, k); zero when k > n.
Integer binom(std::uint64_t n, std::uint64_t k);

/// C(i, j) mod p via Lucas' theorem (product of base-p digit binomials).
std::uint32_t binom_mod_p(std::uint64_t i, std::uint64_t j, std::uint32_t p);

/// Product of componentwise binomials; zero if some j_a > i_a.
/// Throws Error(kInvalidArgument) on length mismatch.
Integer binom_multi(std::span<const std::uint32_t> upper, std::span<const std::uint32_t> lower);

bool is_prime(std::uint64_t n);

/// p^e, throwing on overflow past 2^63.
std::uint64_t ipow(std::uint64_t p, unsigned e);

// ---------------------------------------------------------------------------
// Field interface

template <class K>
concept FieldLike = requires(const K& k, const typename K::Element& a, std::int64_t n) {
  { k.characteristic() } -> std::convertible_to<std::uint32_t>;
  { k.zero() } -> std::same_as<typename K::Element>;
  { k.one() } -> std::same_as<typename K::Element>;
  { k.from_int(n) } -> std::same_as<typename K::Element>;
  { k.add(a, a) } -> std::same_as<typename K::Element>;
  { k.sub(a, a) } -> std::same_as<typename K::Element>;
  { k.mul(a, a) } -> std::same_as<typename K::Element>;
  { k.neg(a) } -> std::same_as<typename K::Element>;
  { k.inv(a) } -> std::same_as<typename K::Element>;
  { k.is_zero(a) } -> std::convertible_to<bool>;
  { k.frobenius_root(a, 1u) } -> std::same_as<typename K::Element>;
  { k.to_string(a) } -> std::convertible_to<std::string>;
  { k.name() } -> std::convertible_to<std::string>;
};

// ---------------------------------------------------------------------------
// F_q

class FiniteField {
 public:
  using Element = std::uint32_t;

  /// Largest supported field order; multiplication is table driven.
  static constexpr std::uint32_t kMaxOrder = 1u << 20;

  static FiniteField prime(std::uint32_t p);
  /// F_{p^m} with the built-in modulus when one is shipped (F_4, F_8, F_9,
  /// F_16, F_25, F_27), otherwise the lexicographically first monic
  /// irreducible polynomial of degree m.
  static FiniteField extension(std::uint32_t p, unsigned m);
  /// F_{p^m} with a caller-supplied monic modulus, coefficients low to high.
  static FiniteField extension(std::uint32_t p, std::vector<std::uint32_t> modulus);

  std::uint32_t characteristic() const noexcept { return p_; }
  unsigned degree() const noexcept { return m_; }
  std::uint32_t order() const noexcept { return q_; }
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

  Element zero() const noexcept { return 0; }
  Element one() const noexcept { return 1; }
  /// The class of the polynomial variable of F_p[t]/(modulus); p-adic code p.
  Element generator() const;
  Element from_int(std::int64_t n) const noexcept;
  Element from_integer(const Integer& n) const;
  /// Element with the given base-p digits (coefficients of 1, t, t^2, ...).
  Element from_digits(std::span<const std::uint32_t> digits) const;
  std::vector<std::uint32_t> digits(Element a) const;

  Element add(Element a, Element b) const noexcept {
    if (m_ == 1) {
      const std::uint32_t s = a + b;
      return s >= p_ ? s - p_ : s;
    }
    return add_ext(a, b);
  }
  Element sub(Element a, Element b) const noexcept { return add(a, neg(b)); }
  Element neg(Element a) const noexcept {
    if (m_ == 1) return a == 0 ? 0 : p_ - a;
    return neg_ext(a);
  }
  Element mul(Element a, Element b) const noexcept {
    if (a == 0 || b == 0) return 0;
    if (m_ == 1) return static_cast<Element>((static_cast<std::uint64_t>(a) * b) % p_);
    return exp_[log_[a] + log_[b]];
  }
  Element inv(Element a) const;
  Element div(Element a, Element b) const { return mul(a, inv(b)); }
  Element pow(Element a, std::uint64_t n) const noexcept;
  bool is_zero(Element a) const noexcept { return a == 0; }
  bool is_one(Element a) const noexcept { return a == 1; }

  /// a^(p^e).
  Element frobenius(Element a, unsigned e) const noexcept;
  /// The unique b with b^(p^e) = a.
  Element frobenius_root(Element a, unsigned e) const noexcept;

  /// Prime field: "0".."p-1". Extension: polynomial in `symbol`, highest
  /// power first, e.g. "a^2 + 2*a + 1".
  std::string to_string(Element a) const;
  /// "GF(p)" or "GF(p^m)".
  std::string name() const;
  const std::string& symbol() const noexcept { return symbol_; }
  void set_symbol(std::string symbol) { symbol_ = std::move(symbol); }

  friend bool operator==(const FiniteField& a, const FiniteField& b) noexcept {
    return a.p_ == b.p_ && a.m_ == b.m_ && a.modulus_ == b.modulus_;
  }

 private:
  FiniteField() = default;
  void build_tables();
  Element add_ext(Element a, Element b) const noexcept;
  Element neg_ext(Element a) const noexcept;
  Element mul_slow(Element a, Element b) const;

  std::uint32_t p_ = 2;
  unsigned m_ = 1;
  std::uint32_t q_ = 2;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> pow_p_;  // p^i for i < m
  std::vector<Element> exp_;          // length 2(q-1)
  std::vector<std::uint32_t> log_;    // length q, log_[0] unused
  std::string symbol_ = "a";
};

/// Exhaustive check: no monic factor of degree 1..m/2 over F_p.
bool is_irreducible_mod_p(std::span<const std::uint32_t> monic, std::uint32_t p);

// ---------------------------------------------------------------------------
// Q

class RationalField {
 public:
  using Element = Rational;

  std::uint32_t characteristic() const noexcept { return 0; }
  Element zero() const { return Rational(0); }
  Element one() const { return Rational(1); }
  Element from_int(std::int64_t n) const { return Rational(n); }
  Element from_integer(const Integer& n) const { return Rational(n); }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element neg(const Element& a) const { return -a; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element inv(const Element& a) const;
  Element div(const Element& a, const Element& b) const { return mul(a, inv(b)); }
  Element pow(const Element& a, std::uint64_t n) const;
  bool is_zero(const Element& a) const { return a == 0; }
  bool is_one(const Element& a) const { return a == 1; }
  /// Identity for e = 0; there is no Frobenius in characteristic zero.
  Element frobenius_root(const Element& a, unsigned e) const;
  std::string to_string(const Element& a) const { return ifilt::to_string(a); }
  std::string name() const { return "QQ"; }

  friend bool operator==(const RationalField&, const RationalField&) noexcept { return true; }
};

static_assert(FieldLike<FiniteField>);
static_assert(FieldLike<RationalField>);

// ---------------------------------------------------------------------------
// Field descriptions as written in spec files: GF(p), GF(p^m), GF(q), QQ.

enum class FieldKind { kPrime, kExtension, kRationals };

struct FieldSpec {
  FieldKind kind = FieldKind::kRationals;
  std::uint32_t p = 0;
  unsigned m = 1;
  std::vector<std::uint32_t> modulus;  // empty: built-in / first irreducible

  std::string to_string() const;
  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// Throws Error(kNotPrimePower) for GF(n) with n not a prime power and
/// Error(kSyntax) for anything unparseable.
FieldSpec parse_field_spec(std::string_view text);

std::shared_ptr<const FiniteField> make_finite_field(const FieldSpec& spec);

}  // namespace ifilt

#endif  // IFILT_COEFF_HPP
