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

#include "ifilt/coeff.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <string>
#include <utility>

namespace ifilt {

Integer binom(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  Integer r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

namespace {

std::uint64_t powmod(std::uint64_t a, std::uint64_t n, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (n > 0) {
    if (n & 1) r = static_cast<std::uint64_t>((static_cast<unsigned __int128>(r) * a) % p);
    a = static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * a) % p);
    n >>= 1;
  }
  return r;
}

// C(n, k) mod p for 0 <= k <= n < p.
std::uint64_t small_binom_mod(std::uint64_t n, std::uint64_t k, std::uint64_t p) {
  k = std::min(k, n - k);
  std::uint64_t num = 1, den = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    num = static_cast<std::uint64_t>((static_cast<unsigned __int128>(num) * ((n - k + i) % p)) % p);
    den = static_cast<std::uint64_t>((static_cast<unsigned __int128>(den) * (i % p)) % p);
  }
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(num) * powmod(den, p - 2, p)) % p);
}

}  // namespace

std::uint32_t binom_mod_p(std::uint64_t i, std::uint64_t j, std::uint32_t p) {
  if (j > i) return 0;
  std::uint64_t r = 1 % p;
  while (j > 0 || i > 0) {
#ifdef IFILT_MUTATE_LUCAS
    // Deliberately wrong digit pairing; only built into the mutation-smoke
    // binary that checks `verify` catches a broken Lucas reduction.
    const std::uint64_t id = (i + 1) % p;
#else
    const std::uint64_t id = i % p;
#endif
    const std::uint64_t jd = j % p;
    if (jd > id) return 0;
    r = r * small_binom_mod(id, jd, p) % p;
    i /= p;
    j /= p;
  }
  return static_cast<std::uint32_t>(r);
}

Integer binom_multi(std::span<const std::uint32_t> upper, std::span<const std::uint32_t> lower) {
  if (upper.size() != lower.size())
    throw Error(ErrorCode::kInvalidArgument, "binom_multi: multi-index length mismatch");
  Integer r = 1;
  for (std::size_t a = 0; a < upper.size(); ++a) {
    if (lower[a] > upper[a]) return 0;
    r *= binom(upper[a], lower[a]);
  }
  return r;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t ipow(std::uint64_t p, unsigned e) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (p != 0 && r > (std::uint64_t{1} << 63) / p) throw Error(ErrorCode::kRangeViolation, "ipow overflow");
    r *= p;
  }
  return r;
}

// ---------------------------------------------------------------------------
// FiniteField

namespace {

// Remainder of a (low to high) modulo a monic b over F_p.
std::vector<std::uint32_t> poly_rem(std::vector<std::uint32_t> a, std::span<const std::uint32_t> b, std::uint32_t p) {
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const std::uint32_t lead = a.back();
    if (lead != 0) {
      const std::size_t shift = a.size() - 1 - db;
      for (std::size_t i = 0; i <= db; ++i) {
        const std::uint64_t t = (static_cast<std::uint64_t>(lead) * b[i]) % p;
        a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - t) % p);
      }
    }
    a.pop_back();
  }
  return a;
}

const std::map<std::pair<std::uint32_t, unsigned>, std::vector<std::uint32_t>>& builtin_moduli() {
  static const std::map<std::pair<std::uint32_t, unsigned>, std::vector<std::uint32_t>> table = {
      {{2, 2}, {1, 1, 1}},     // t^2 + t + 1
      {{2, 3}, {1, 1, 0, 1}},  // t^3 + t + 1
      {{3, 2}, {2, 2, 1}},     // t^2 + 2t + 2
      {{2, 4}, {1, 1, 0, 0, 1}},
      {{5, 2}, {2, 4, 1}},     // t^2 + 4t + 2
      {{3, 3}, {1, 2, 0, 1}},  // t^3 + 2t + 1
  };
  return table;
}

}  // namespace

bool is_irreducible_mod_p(std::span<const std::uint32_t> monic, std::uint32_t p) {
  const std::size_t m = monic.size() - 1;
  if (m == 0 || monic.back() != 1) return false;
  for (std::size_t k = 1; k <= m / 2; ++k) {
    // Enumerate monic polynomials of degree k.
    std::vector<std::uint32_t> f(k + 1, 0);
    f[k] = 1;
    while (true) {
      const auto r = poly_rem(std::vector<std::uint32_t>(monic.begin(), monic.end()), f, p);
      if (std::all_of(r.begin(), r.end(), [](std::uint32_t c) { return c == 0; })) return false;
      std::size_t i = 0;
      while (i < k && ++f[i] == p) f[i++] = 0;
      if (i == k) break;
    }
  }
  return true;
}

FiniteField FiniteField::prime(std::uint32_t p) {
  if (!is_prime(p)) throw Error(ErrorCode::kNotPrimePower, std::to_string(p) + " is not a prime");
  if (p > (1u << 31)) throw Error(ErrorCode::kRangeViolation, "characteristic too large");
  FiniteField k;
  k.p_ = p;
  k.m_ = 1;
  k.q_ = p;
  k.modulus_ = {0, 1};
  k.pow_p_ = {1};
  return k;
}

FiniteField FiniteField::extension(std::uint32_t p, unsigned m) {
  if (m == 1) return prime(p);
  if (!is_prime(p)) throw Error(ErrorCode::kNotPrimePower, std::to_string(p) + " is not a prime");
  const auto& table = builtin_moduli();
  if (auto it = table.find({p, m}); it != table.end()) return extension(p, it->second);
  if (ipow(p, m) > kMaxOrder) throw Error(ErrorCode::kRangeViolation, "field order exceeds supported envelope");
  std::vector<std::uint32_t> f(m + 1, 0);
  f[m] = 1;
  while (true) {
    if (is_irreducible_mod_p(f, p)) return extension(p, f);
    std::size_t i = 0;
    while (i < m && ++f[i] == p) f[i++] = 0;
    if (i == m) break;
  }
  throw Error(ErrorCode::kInternal, "no irreducible polynomial found");
}

FiniteField FiniteField::extension(std::uint32_t p, std::vector<std::uint32_t> modulus) {
  if (!is_prime(p)) throw Error(ErrorCode::kNotPrimePower, std::to_string(p) + " is not a prime");
  for (auto& c : modulus) c %= p;
  while (!modulus.empty() && modulus.back() == 0) modulus.pop_back();
  if (modulus.size() < 2) throw Error(ErrorCode::kInvalidArgument, "modulus must have degree >= 1");
  if (modulus.back() != 1) throw Error(ErrorCode::kInvalidArgument, "modulus must be monic");
  if (modulus.size() == 2) return prime(p);
  if (!is_irreducible_mod_p(modulus, p))
    throw Error(ErrorCode::kInvalidArgument, "modulus is reducible over GF(" + std::to_string(p) + ")");
  const unsigned m = static_cast<unsigned>(modulus.size() - 1);
  if (ipow(p, m) > kMaxOrder) throw Error(ErrorCode::kRangeViolation, "field order exceeds supported envelope");
  FiniteField k;
  k.p_ = p;
  k.m_ = m;
  k.q_ = static_cast<std::uint32_t>(ipow(p, m));
  k.modulus_ = std::move(modulus);
  k.pow_p_.resize(m);
  for (unsigned i = 0; i < m; ++i) k.pow_p_[i] = static_cast<std::uint32_t>(ipow(p, i));
  k.build_tables();
  return k;
}

std::vector<std::uint32_t> FiniteField::digits(Element a) const {
  std::vector<std::uint32_t> d(m_, 0);
  for (unsigned i = 0; i < m_; ++i) {
    d[i] = a % p_;
    a /= p_;
  }
  return d;
}

FiniteField::Element FiniteField::from_digits(std::span<const std::uint32_t> digits) const {
  std::vector<std::uint32_t> d(digits.begin(), digits.end());
  for (auto& c : d) c %= p_;
  if (d.size() > m_) d = poly_rem(std::move(d), modulus_, p_);
  Element a = 0;
  for (std::size_t i = d.size(); i-- > 0;) a = a * p_ + d[i];
  return a;
}

FiniteField::Element FiniteField::generator() const {
  if (m_ == 1) return 1 % p_;
  return p_;
}

FiniteField::Element FiniteField::from_int(std::int64_t n) const noexcept {
  std::int64_t r = n % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Element>(r);
}

FiniteField::Element FiniteField::from_integer(const Integer& n) const {
  Integer r = n % p_;
  if (r < 0) r += p_;
  return r.convert_to<Element>();
}

FiniteField::Element FiniteField::add_ext(Element a, Element b) const noexcept {
  if (p_ == 2) return a ^ b;
  Element r = 0;
  for (unsigned i = 0; i < m_; ++i) {
    const std::uint32_t s = a % p_ + b % p_;
    r += (s >= p_ ? s - p_ : s) * pow_p_[i];
    a /= p_;
    b /= p_;
  }
  return r;
}

FiniteField::Element FiniteField::neg_ext(Element a) const noexcept {
  if (p_ == 2) return a;
  Element r = 0;
  for (unsigned i = 0; i < m_; ++i) {
    const std::uint32_t d = a % p_;
    r += (d == 0 ? 0 : p_ - d) * pow_p_[i];
    a /= p_;
  }
  return r;
}

FiniteField::Element FiniteField::mul_slow(Element a, Element b) const {
  const auto da = digits(a);
  const auto db = digits(b);
  std::vector<std::uint32_t> prod(2 * m_ - 1, 0);
  for (unsigned i = 0; i < m_; ++i)
    for (unsigned j = 0; j < m_; ++j)
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + static_cast<std::uint64_t>(da[i]) * db[j]) % p_);
  return from_digits(poly_rem(std::move(prod), modulus_, p_));
}

void FiniteField::build_tables() {
  const std::uint32_t n = q_ - 1;
  exp_.assign(2 * static_cast<std::size_t>(n), 0);
  log_.assign(q_, 0);
  for (Element g = 2; g < q_; ++g) {
    Element x = 1;
    std::uint32_t ord = 0;
    do {
      x = mul_slow(x, g);
      ++ord;
    } while (x != 1 && ord <= n);
    if (ord != n) continue;
    x = 1;
    for (std::uint32_t i = 0; i < n; ++i) {
      exp_[i] = x;
      exp_[i + n] = x;
      log_[x] = i;
      x = mul_slow(x, g);
    }
    return;
  }
  throw Error(ErrorCode::kInternal, "no primitive element found");
}

FiniteField::Element FiniteField::inv(Element a) const {
  if (a == 0) throw Error(ErrorCode::kInvalidArgument, "division by zero in " + name());
  if (m_ == 1) return static_cast<Element>(powmod(a, p_ - 2, p_));
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

FiniteField::Element FiniteField::pow(Element a, std::uint64_t n) const noexcept {
  if (n == 0) return 1;
  if (a == 0) return 0;
  if (m_ == 1) return static_cast<Element>(powmod(a, n, p_));
  const std::uint64_t l = (static_cast<std::uint64_t>(log_[a]) * (n % (q_ - 1))) % (q_ - 1);
  return exp_[l];
}

FiniteField::Element FiniteField::frobenius(Element a, unsigned e) const noexcept {
  e %= m_;
  if (e == 0) return a;
  return pow(a, ipow(p_, e));
}

FiniteField::Element FiniteField::frobenius_root(Element a, unsigned e) const noexcept {
  return frobenius(a, (m_ - e % m_) % m_);
}

std::string FiniteField::to_string(Element a) const {
  if (m_ == 1) return std::to_string(a);
  if (a == 0) return "0";
  const auto d = digits(a);
  std::string out;
  for (std::size_t i = d.size(); i-- > 0;) {
    if (d[i] == 0) continue;
    if (!out.empty()) out += " + ";
    if (i == 0) {
      out += std::to_string(d[i]);
      continue;
    }
    if (d[i] != 1) out += std::to_string(d[i]) + "*";
    out += symbol_;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

std::string FiniteField::name() const {
  if (m_ == 1) return "GF(" + std::to_string(p_) + ")";
  return "GF(" + std::to_string(p_) + "^" + std::to_string(m_) + ")";
}

// ---------------------------------------------------------------------------
// RationalField

RationalField::Element RationalField::inv(const Element& a) const {
  if (a == 0) throw Error(ErrorCode::kInvalidArgument, "division by zero in QQ");
  return Rational(1) / a;
}

RationalField::Element RationalField::pow(const Element& a, std::uint64_t n) const {
  Rational r = 1;
  Rational b = a;
  while (n > 0) {
    if (n & 1) r *= b;
    b *= b;
    n >>= 1;
  }
  return r;
}

RationalField::Element RationalField::frobenius_root(const Element& a, unsigned e) const {
  if (e > 0) throw Error(ErrorCode::kCharacteristicZero, "char-0 has no Frobenius");
  return a;
}

// ---------------------------------------------------------------------------
// FieldSpec

std::string FieldSpec::to_string() const {
  switch (kind) {
    case FieldKind::kRationals: return "QQ";
    case FieldKind::kPrime: return "GF(" + std::to_string(p) + ")";
    case FieldKind::kExtension: return "GF(" + std::to_string(p) + "^" + std::to_string(m) + ")";
  }
  return "?";
}

namespace {

std::string strip_spaces(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

std::uint64_t parse_natural(const std::string& s, std::string_view context) {
  if (s.empty() || s.size() > 12 || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw Error(ErrorCode::kSyntax, "bad field description '" + std::string(context) + "'");
  return std::stoull(s);
}

}  // namespace

FieldSpec parse_field_spec(std::string_view text) {
  const std::string s = strip_spaces(text);
  if (s == "QQ" || s == "Q") return FieldSpec{};
  if (s.size() < 5 || s.rfind("GF(", 0) != 0 || s.back() != ')')
    throw Error(ErrorCode::kSyntax, "bad field description '" + std::string(text) + "'");
  const std::string inner = s.substr(3, s.size() - 4);
  FieldSpec spec;
  if (const auto caret = inner.find('^'); caret != std::string::npos) {
    const std::uint64_t p = parse_natural(inner.substr(0, caret), text);
    const std::uint64_t m = parse_natural(inner.substr(caret + 1), text);
    if (!is_prime(p)) throw Error(ErrorCode::kNotPrimePower, std::to_string(p) + " is not a prime");
    if (m == 0) throw Error(ErrorCode::kSyntax, "extension degree must be positive");
    spec.p = static_cast<std::uint32_t>(p);
    spec.m = static_cast<unsigned>(m);
  } else {
    const std::uint64_t q = parse_natural(inner, text);
    std::uint64_t p = 0;
    for (std::uint64_t d = 2; d * d <= q; ++d)
      if (q % d == 0) {
        p = d;
        break;
      }
    if (p == 0) p = q;
    unsigned m = 0;
    std::uint64_t r = q;
    while (q >= 2 && r % p == 0) {
      r /= p;
      ++m;
    }
    if (q < 2 || r != 1) throw Error(ErrorCode::kNotPrimePower, std::to_string(q) + " is not a prime power");
    spec.p = static_cast<std::uint32_t>(p);
    spec.m = m;
  }
  spec.kind = spec.m == 1 ? FieldKind::kPrime : FieldKind::kExtension;
  if (ipow(spec.p, spec.m) > FiniteField::kMaxOrder)
    throw Error(ErrorCode::kRangeViolation, "field order exceeds supported envelope");
  return spec;
}

std::shared_ptr<const FiniteField> make_finite_field(const FieldSpec& spec) {
  switch (spec.kind) {
    case FieldKind::kPrime: return std::make_shared<const FiniteField>(FiniteField::prime(spec.p));
    case FieldKind::kExtension:
      if (!spec.modulus.empty()) return std::make_shared<const FiniteField>(FiniteField::extension(spec.p, spec.modulus));
      return std::make_shared<const FiniteField>(FiniteField::extension(spec.p, spec.m));
    case FieldKind::kRationals: break;
  }
  throw Error(ErrorCode::kInvalidArgument, "QQ is not a finite field");
}

}  // namespace ifilt
