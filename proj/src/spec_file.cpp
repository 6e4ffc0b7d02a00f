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

#include "ifilt/spec_file.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace ifilt {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

[[noreturn]] void fail_at(std::size_t line, ErrorCode code, const std::string& msg) {
  throw Error(code, "line " + std::to_string(line) + ": " + msg);
}

/// Rethrows an Error from a sub-parser with the line prefixed.
template <class Fn>
auto at_line(std::size_t line, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const Error& e) {
    fail_at(line, e.code(), e.what());
  }
}

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : value) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

unsigned parse_count(std::size_t line, const std::string& key, const std::string& value) {
  if (value.empty() || value.size() > 6 || !std::all_of(value.begin(), value.end(), ::isdigit))
    fail_at(line, ErrorCode::kSyntax, key + " expects a natural number, got '" + value + "'");
  return static_cast<unsigned>(std::stoul(value));
}

struct Line {
  std::size_t number;
  std::string key;
  std::string value;
};

SpecEntry parse_entry(const Line& ln, const SpecFile& spec) {
  const auto at = ln.value.rfind('@');
  if (at == std::string::npos) fail_at(ln.number, ErrorCode::kSyntax, "expected '<poly> @ <level>'");
  const std::string poly_text = trim(std::string_view(ln.value).substr(0, at));
  const std::string level_text = trim(std::string_view(ln.value).substr(at + 1));
  SpecEntry e;
  e.level = at_line(ln.number, [&] { return parse_rational(level_text); });
  e.poly = at_line(ln.number, [&] {
    return with_field(spec, [&](auto k) {
      using K = std::remove_const_t<typename decltype(k)::element_type>;
      return to_string(parse_poly<K>(poly_text, k, spec.vars), spec.vars);
    });
  });
  return e;
}

}  // namespace

void check_envelope(std::size_t nvars, unsigned D) {
  if (nvars < 1 || nvars > kEnvelopeVars)
    throw Error(ErrorCode::kTruncationEnvelope, "number of variables " + std::to_string(nvars) + " outside 1.." + std::to_string(kEnvelopeVars));
  if (D < 1 || D > kEnvelopeTruncation)
    throw Error(ErrorCode::kTruncationEnvelope, "truncation " + std::to_string(D) + " outside 1.." + std::to_string(kEnvelopeTruncation));
}

SpecFile parse_spec(std::string_view text) {
  std::vector<Line> lines;
  {
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t number = 0;
    while (std::getline(in, raw)) {
      ++number;
      if (const auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
      const std::string s = trim(raw);
      if (s.empty()) continue;
      const auto colon = s.find(':');
      if (colon == std::string::npos) fail_at(number, ErrorCode::kSyntax, "expected 'key: value'");
      lines.push_back(Line{number, trim(std::string_view(s).substr(0, colon)), trim(std::string_view(s).substr(colon + 1))});
    }
  }

  SpecFile spec;
  std::set<std::string> seen;
  bool have_field = false, have_vars = false, have_trunc = false, have_symbol = false;
  std::size_t last_line = 0;
  // Header keys first, so gen lines may appear anywhere.
  for (const Line& ln : lines) {
    last_line = ln.number;
    if (ln.key == "gen" || ln.key == "candidate") continue;
    if (!seen.insert(ln.key).second) fail_at(ln.number, ErrorCode::kSyntax, "duplicate key '" + ln.key + "'");
    if (ln.key == "field") {
      spec.field = at_line(ln.number, [&] { return parse_field_spec(ln.value); });
      have_field = true;
    } else if (ln.key == "generator") {
      if (!is_identifier(ln.value)) fail_at(ln.number, ErrorCode::kSyntax, "bad generator symbol '" + ln.value + "'");
      spec.symbol = ln.value;
      have_symbol = true;
    } else if (ln.key == "vars") {
      spec.vars = split_list(ln.value);
      for (const auto& v : spec.vars)
        if (!is_identifier(v)) fail_at(ln.number, ErrorCode::kSyntax, "bad variable name '" + v + "'");
      if (std::set<std::string>(spec.vars.begin(), spec.vars.end()).size() != spec.vars.size())
        fail_at(ln.number, ErrorCode::kSyntax, "repeated variable name");
      have_vars = true;
    } else if (ln.key == "truncation") {
      spec.truncation = parse_count(ln.number, ln.key, ln.value);
      have_trunc = true;
    } else if (ln.key == "boundary") {
      spec.boundary = split_list(ln.value);
    } else if (ln.key == "emax") {
      spec.emax = parse_count(ln.number, ln.key, ln.value);
    } else if (ln.key == "radical-n-max") {
      spec.bounds.n_max = parse_count(ln.number, ln.key, ln.value);
      if (spec.bounds.n_max < 1) fail_at(ln.number, ErrorCode::kSyntax, "radical-n-max must be positive");
    } else if (ln.key == "radical-grid") {
      spec.bounds.grid = parse_count(ln.number, ln.key, ln.value);
      if (spec.bounds.grid < 1) fail_at(ln.number, ErrorCode::kSyntax, "radical-grid must be positive");
    } else {
      fail_at(ln.number, ErrorCode::kSyntax, "unknown key '" + ln.key + "'");
    }
  }
  const std::size_t end = last_line + 1;
  if (!have_field) fail_at(end, ErrorCode::kSyntax, "missing 'field'");
  if (!have_vars) fail_at(end, ErrorCode::kSyntax, "missing 'vars'");
  if (!have_trunc) fail_at(end, ErrorCode::kSyntax, "missing 'truncation'");
  for (const Line& ln : lines) {
    if (ln.key == "vars") at_line(ln.number, [&] { check_envelope(spec.vars.size(), std::max(spec.truncation, 1u)); });
    if (ln.key == "truncation") at_line(ln.number, [&] { check_envelope(std::max<std::size_t>(spec.vars.size(), 1), spec.truncation); });
    const bool names_symbol = ln.key == "generator" || (ln.key == "vars" && !have_symbol);
    if (names_symbol && spec.field.kind == FieldKind::kExtension &&
        std::find(spec.vars.begin(), spec.vars.end(), spec.symbol) != spec.vars.end())
      fail_at(ln.number, ErrorCode::kSyntax, "generator symbol '" + spec.symbol + "' clashes with a variable");
    if (ln.key == "boundary")
      for (const auto& b : spec.boundary)
        if (std::find(spec.vars.begin(), spec.vars.end(), b) == spec.vars.end())
          fail_at(ln.number, ErrorCode::kUnknownVariable, "unknown boundary variable '" + b + "'");
  }
  for (const Line& ln : lines) {
    if (ln.key == "gen") spec.gens.push_back(parse_entry(ln, spec));
    if (ln.key == "candidate") spec.candidates.push_back(parse_entry(ln, spec));
  }
  return spec;
}

void add_candidates(SpecFile& spec, std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    const std::string s = trim(raw);
    if (!s.empty()) spec.candidates.push_back(parse_entry(Line{number, "candidate", s}, spec));
  }
}

std::string print_spec(const SpecFile& spec) {
  std::ostringstream out;
  out << "field: " << spec.field.to_string() << '\n';
  if (spec.field.kind == FieldKind::kExtension) out << "generator: " << spec.symbol << '\n';
  out << "vars:";
  for (std::size_t i = 0; i < spec.vars.size(); ++i) out << (i ? ", " : " ") << spec.vars[i];
  out << "\ntruncation: " << spec.truncation << '\n';
  if (!spec.boundary.empty()) {
    out << "boundary:";
    for (std::size_t i = 0; i < spec.boundary.size(); ++i) out << (i ? ", " : " ") << spec.boundary[i];
    out << '\n';
  }
  if (spec.emax) out << "emax: " << *spec.emax << '\n';
  out << "radical-n-max: " << spec.bounds.n_max << '\n';
  out << "radical-grid: " << spec.bounds.grid << '\n';
  for (const auto& g : spec.gens) out << "gen: " << g.poly << " @ " << to_string(g.level) << '\n';
  for (const auto& c : spec.candidates) out << "candidate: " << c.poly << " @ " << to_string(c.level) << '\n';
  return out.str();
}

}  // namespace ifilt
