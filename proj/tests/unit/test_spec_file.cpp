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

#include "doctest.h"
#include "ifilt/spec_file.hpp"

using namespace ifilt;

namespace {

struct Failure {
  ErrorCode code;
  std::string what;
};

Failure failure(std::string_view text) {
  try {
    parse_spec(text);
  } catch (const Error& e) {
    return {e.code(), e.what()};
  }
  return {ErrorCode::kInternal, "accepted"};
}

constexpr const char* kShowcase =
    "# cusp\n"
    "field: GF(2)\n"
    "vars: x, y\n"
    "truncation: 10\n"
    "gen: x^2 + y^3 @ 2\n";

}  // namespace

TEST_CASE("a minimal spec parses") {
  const auto s = parse_spec(kShowcase);
  CHECK(s.field.kind == FieldKind::kPrime);
  CHECK(s.vars == std::vector<std::string>{"x", "y"});
  CHECK(s.truncation == 10);
  REQUIRE(s.gens.size() == 1);
  CHECK(s.gens[0].poly == "x^2 + y^3");
  CHECK(s.gens[0].level == Rational(2));
  CHECK(s.bounds.n_max == 8);
  CHECK(s.bounds.grid == 64);
  CHECK_FALSE(s.emax.has_value());
}

TEST_CASE("printing is canonical and round-trips") {
  const char* texts[] = {
      kShowcase,
      "gen: y^3+x^2@4/2\nvars: x,y\nfield: GF(2)\ntruncation: 10\n",
      "field: GF(4)\ngenerator: t\nvars: x, y\ntruncation: 8\ngen: x^2 + t*y^2 + y^3 @ 2\n",
      "field: QQ\nvars: x, y, z\ntruncation: 6\nboundary: z\nemax: 0\nradical-n-max: 4\nradical-grid: 16\n"
      "gen: x*z - y^2 @ 3/2\ncandidate: y @ 1\n",
      "field: GF(3)\nvars: x\ntruncation: 5\n",
  };
  for (const char* t : texts) {
    const auto s = parse_spec(t);
    const auto printed = print_spec(s);
    CHECK(parse_spec(printed) == s);
    CHECK(print_spec(parse_spec(printed)) == printed);
  }
  CHECK(print_spec(parse_spec(texts[1])) == print_spec(parse_spec(kShowcase)));
}

TEST_CASE("errors carry a code and a line") {
  const auto bad_level = failure("field: GF(2)\nvars: x, y\ntruncation: 10\ngen: x^2 @ two\n");
  CHECK(bad_level.code == ErrorCode::kSyntax);
  CHECK(bad_level.what.rfind("line 4:", 0) == 0);
  const auto bad_field = failure("field: GF(6)\nvars: x\ntruncation: 4\n");
  CHECK(bad_field.code == ErrorCode::kNotPrimePower);
  CHECK(bad_field.what.find("6 is not a prime power") != std::string::npos);
  CHECK(bad_field.what.rfind("line 1:", 0) == 0);
  CHECK(failure("field: GF(2)\nvars: x\ntruncation: 4\ngen: y @ 1\n").code == ErrorCode::kUnknownVariable);
  CHECK(failure("field: GF(2)\nvars: x\ntruncation: 4\nboundary: q\n").code == ErrorCode::kUnknownVariable);
  CHECK(failure("field: GF(2)\nvars: x\ntruncation: 4\ncolour: red\n").code == ErrorCode::kSyntax);
  CHECK(failure("field: GF(2)\nfield: GF(3)\nvars: x\ntruncation: 4\n").code == ErrorCode::kSyntax);
  CHECK(failure("field: GF(2)\nvars: x\n").code == ErrorCode::kSyntax);
  CHECK(failure("field: GF(2)\nvars: x\ntruncation: 4\ngen: x^2\n").code == ErrorCode::kSyntax);
  CHECK(failure("field: GF(4)\nvars: a, b\ntruncation: 4\n").code == ErrorCode::kSyntax);
}

TEST_CASE("truncation envelope") {
  CHECK(failure("field: GF(2)\nvars: x\ntruncation: 17\n").code == ErrorCode::kTruncationEnvelope);
  CHECK(failure("field: GF(2)\nvars: x\ntruncation: 0\n").code == ErrorCode::kTruncationEnvelope);
  CHECK(failure("field: GF(2)\nvars: a, b, c, d, e, f, g\ntruncation: 4\n").code == ErrorCode::kTruncationEnvelope);
  CHECK_NOTHROW(check_envelope(6, 16));
  CHECK_THROWS_AS(check_envelope(0, 4), Error);
}

TEST_CASE("candidate files") {
  auto s = parse_spec(kShowcase);
  add_candidates(s, "# extra\n\ny @ 1/2\nx + y @ 1\n");
  REQUIRE(s.candidates.size() == 2);
  CHECK(s.candidates[0].poly == "y");
  CHECK(s.candidates[0].level == Rational(1, 2));
  CHECK_THROWS_AS(add_candidates(s, "y\n"), Error);
}

TEST_CASE("building the filtration") {
  const auto s = parse_spec("field: GF(4)\ngenerator: t\nvars: x, y\ntruncation: 8\nboundary: y\ngen: x^2 + t*y^2 @ 2\n");
  with_field(s, [&](auto k) {
    using K = std::remove_const_t<typename decltype(k)::element_type>;
    const auto ctx = make_context<K>(s, k);
    CHECK(ctx->boundary() == std::vector<bool>{false, true});
    const auto F = to_filtration<K>(s, ctx);
    REQUIRE(F.size() == 1);
    CHECK(to_string(F.generators()[0].f, std::span<const std::string>(s.vars)) == "x^2 + t*y^2");
  });
}
