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

#include "ifilt/cli.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "ifilt/report.hpp"
#include "ifilt/spec_file.hpp"
#include "ifilt/verify.hpp"

namespace ifilt::cli {

namespace {

struct Flags {
  std::string spec_path;
  std::string candidates_path;
  bool json = false;
  std::optional<unsigned> trunc, emax, n_max, grid;
  std::uint64_t seed = 1;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kInvalidArgument, "cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

SpecFile load(const Flags& f) {
  SpecFile spec = parse_spec(slurp(f.spec_path));
  if (f.trunc) {
    check_envelope(spec.vars.size(), *f.trunc);
    spec.truncation = *f.trunc;
  }
  if (f.emax) spec.emax = *f.emax;
  if (f.n_max) spec.bounds.n_max = *f.n_max;
  if (f.grid) spec.bounds.grid = *f.grid;
  if (!f.candidates_path.empty()) add_candidates(spec, slurp(f.candidates_path));
  return spec;
}

void emit(const Json& j, bool json, std::ostream& out) {
  if (json)
    out << j.dump(2) << '\n';
  else
    out << render_text(j);
}

int verify(const Flags& f, std::ostream& out) {
  const VerifySummary s = run_verify(VerifyOptions{f.seed});
  if (f.json) {
    out << to_json(s).dump(2) << '\n';
  } else {
    for (const auto& r : s.suites) {
      out << (r.passed() ? "PASS " : "FAIL ") << r.name << " (" << r.instances << " instances): " << r.law << '\n';
      if (!r.passed()) out << "     first failure: " << (r.first_failure.empty() ? "no instances" : r.first_failure) << '\n';
    }
    out << s.suites.size() << " suites, seed " << s.seed << ": " << (s.passed() ? "all passed" : "FAILURES") << '\n';
  }
  return s.passed() ? kOk : kChecksFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Idealistic filtrations at the origin: saturation, leading invariants and checks", "ifilt"};
  app.require_subcommand(1);
  Flags f;
  auto spec_cmd = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("spec", f.spec_path, "filtration spec file")->required();
    sub->add_flag("--json", f.json, "machine-readable JSON");
    sub->add_option("--trunc", f.trunc, "override the truncation degree D");
    sub->add_option("--emax", f.emax, "largest e for pure parts");
    sub->add_option("--radical-n-max", f.n_max, "largest power tried by the radical probe");
    sub->add_option("--radical-grid", f.grid, "level grid for the continuity test");
    sub->add_option("--candidates", f.candidates_path, "extra radical-probe candidates, one '<poly> @ <level>' per line");
    return sub;
  };
  CLI::App* analyze = spec_cmd("analyze", "full report");
  CLI::App* saturate = spec_cmd("saturate", "D-saturation and probe B-saturation");
  CLI::App* sigma = spec_cmd("sigma", "leading algebra and the sigma sequence");
  CLI::App* mu = spec_cmd("mu", "leading generator system and mu_tilde");
  CLI::App* ver = app.add_subcommand("verify", "run the property corpus");
  ver->add_option("--seed", f.seed, "corpus seed");
  ver->add_flag("--json", f.json, "machine-readable JSON");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (ver->parsed()) return verify(f, out);
    Stage stage = Stage::kAnalyze;
    if (saturate->parsed()) stage = Stage::kSaturate;
    if (sigma->parsed()) stage = Stage::kSigma;
    if (mu->parsed()) stage = Stage::kMu;
    (void)analyze;
    emit(build_report(load(f), stage), f.json, out);
    return kOk;
  } catch (const Error& e) {
    err << "error [" << error_code_name(e.code()) << "]: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "error [internal]: " << e.what() << '\n';
    return kInputError;
  }
}

}  // namespace ifilt::cli
