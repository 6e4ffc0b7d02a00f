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

// Text form of polynomials: canonical printing and a small recursive-descent
// parser for the spec-file syntax (x^2 + y^3, 2*x*y, (a+1)*x over GF(4)).

#ifndef IFILT_POLY_IO_HPP
#define IFILT_POLY_IO_HPP

#include <cctype>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ifilt/gls.hpp"
#include "ifilt/poly.hpp"

namespace ifilt {

inline std::string monomial_to_string(const MultiIndex& m, std::span<const std::string> names) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += names[i];
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

/// Terms in GradedLex order; "0" for the zero polynomial.
template <FieldLike K>
std::string to_string(const Poly<K>& f, std::span<const std::string> names) {
  if (f.is_zero()) return "0";
  const K& k = f.field();
  std::string out;
  for (const auto& [m, c0] : f.terms()) {
    auto c = c0;
    bool negative = false;
    if constexpr (std::is_same_v<typename K::Element, Rational>) {
      if (c < 0) {
        negative = true;
        c = -c;
      }
    }
    if (out.empty())
      out = negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    const std::string cs = k.to_string(c);
    if (m.is_zero()) {
      out += cs;
    } else if (k.is_one(c)) {
      out += monomial_to_string(m, names);
    } else {
      const bool compound = cs.find_first_of(" +") != std::string::npos;
      out += compound ? "(" + cs + ")" : cs;
      out += '*' + monomial_to_string(m, names);
    }
  }
  return out;
}

/// Default variable names: x, y, z, w for d <= 4, else x1..xd.
inline std::vector<std::string> default_names(std::size_t nvars) {
  static const char* const kShort[] = {"x", "y", "z", "w"};
  std::vector<std::string> out;
  for (std::size_t i = 0; i < nvars; ++i)
    out.push_back(nvars <= 4 ? std::string(kShort[i]) : "x" + std::to_string(i + 1));
  return out;
}

template <FieldLike K>
std::string to_string(const Poly<K>& f) {
  const auto names = default_names(f.nvars());
  return to_string(f, std::span<const std::string>(names));
}

namespace detail {

template <FieldLike K>
class PolyParser {
 public:
  PolyParser(std::string_view text, std::shared_ptr<const K> field, std::span<const std::string> names)
      : text_(text), field_(std::move(field)), names_(names) {}

  Poly<K> parse() {
    skip_space();
    if (pos_ == text_.size()) fail("empty polynomial");
    Poly<K> f = expr();
    skip_space();
    if (pos_ != text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::kSyntax, msg + " at column " + std::to_string(pos_ + 1) + " in '" + std::string(text_) + "'");
  }
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  Poly<K> constant(const typename K::Element& c) const { return Poly<K>::constant(field_, names_.size(), c); }

  Poly<K> expr() {
    Poly<K> f(field_, names_.size());
    bool negate = false;
    if (accept('-'))
      negate = true;
    else
      accept('+');
    f = negate ? -term() : term();
    for (;;) {
      if (accept('+'))
        f += term();
      else if (accept('-'))
        f -= term();
      else
        return f;
    }
  }

  bool starts_factor() {
    skip_space();
    if (pos_ >= text_.size()) return false;
    const char c = text_[pos_];
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '(';
  }

  Poly<K> term() {
    Poly<K> f = power();
    for (;;) {
      if (accept('*')) {
        f = f * power();
      } else if (accept('/')) {
        Poly<K> g = power();
        if (g.is_zero() || g.degree() != 0) fail("division by a non-constant or zero");
        f = f.scaled(field_->inv(g.constant_term()));
      } else if (starts_factor()) {
        f = f * power();
      } else {
        return f;
      }
    }
  }

  Poly<K> power() {
    Poly<K> base = atom();
    if (!accept('^')) return base;
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected exponent");
    if (pos_ - start > 5) fail("exponent too large");
    return base.pow(static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start)))));
  }

  Poly<K> atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Poly<K> f = expr();
      if (!accept(')')) fail("expected ')'");
      return f;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return constant(field_->from_integer(Integer(std::string(text_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
      const std::string id(text_.substr(start, pos_ - start));
      for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == id) return Poly<K>::variable(field_, names_.size(), i);
      if constexpr (requires(const K& k) { k.generator(); k.symbol(); }) {
        if (field_->degree() > 1 && id == field_->symbol()) return constant(field_->generator());
      }
      pos_ = start;
      throw Error(ErrorCode::kUnknownVariable, "unknown variable '" + id + "' in '" + std::string(text_) + "'");
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  std::shared_ptr<const K> field_;
  std::span<const std::string> names_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses a polynomial in the given variables. Throws Error(kSyntax) or
/// Error(kUnknownVariable).
template <FieldLike K>
Poly<K> parse_poly(std::string_view text, std::shared_ptr<const K> field, std::span<const std::string> names) {
  return detail::PolyParser<K>(text, std::move(field), names).parse();
}

/// Debug dump of a subspace: one basis polynomial per line, canonical order.
template <FieldLike K>
std::string dump(const Subspace<K>& s, std::span<const std::string> names) {
  std::string out;
  for (const auto& f : s.basis_polys()) out += to_string(f, names) + '\n';
  return out;
}

}  // namespace ifilt

#endif  // IFILT_POLY_IO_HPP
