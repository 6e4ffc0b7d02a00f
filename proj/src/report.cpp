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

#include "ifilt/report.hpp"

#include <algorithm>
#include <sstream>

#include "ifilt/invariants.hpp"
#include "ifilt/leading.hpp"
#include "ifilt/saturation.hpp"

namespace ifilt {

Json to_json(const SatOrd& o) {
  if (o.is_infinite()) return "infinity";
  if (o.is_finite()) return Json{{"value", o.value()}};
  return Json{{"at_least", o.value()}};
}

Json to_json(const MuValue& m, unsigned D) {
  switch (m.kind()) {
    case MuValue::Kind::kFinite: return Json{{"value", to_string(m.value())}};
    case MuValue::Kind::kAtLeast: return Json{{"at_least", to_string(m.value())}};
    case MuValue::Kind::kInfiniteAtPrecision: return Json{{"infinity_at_precision", D}};
    case MuValue::Kind::kInfinite: return "infinity";
  }
  return nullptr;
}

namespace {

Json input_json(const SpecFile& spec) {
  Json in;
  in["field"] = spec.field.to_string();
  in["vars"] = spec.vars;
  in["truncation"] = spec.truncation;
  in["boundary"] = spec.boundary;
  Json gens = Json::array();
  for (const auto& g : spec.gens) gens.push_back(Json{{"poly", g.poly}, {"level", to_string(g.level)}});
  in["generators"] = gens;
  Json cands = Json::array();
  for (const auto& c : spec.candidates) cands.push_back(Json{{"poly", c.poly}, {"level", to_string(c.level)}});
  in["candidates"] = cands;
  in["radical_n_max"] = spec.bounds.n_max;
  in["radical_grid"] = spec.bounds.grid;
  return in;
}

template <FieldLike K>
class Reporter {
 public:
  Reporter(const SpecFile& spec, std::shared_ptr<const K> k)
      : spec_(spec), names_(spec.vars), ctx_(make_context(spec, k)), F_(to_filtration<K>(spec, ctx_)), D_(spec.truncation) {}

  Json run(Stage stage) {
    Json r;
    r["input"] = input_json(spec_);
    if (F_.normalized().empty())
      r["conventions"] = "G(empty): I_a = R for a <= 0 and I_a = 0 for a > 0; mu_tilde is the empty infimum";
    r["precision"] = Json{{"truncation", D_}, {"arithmetic", "exact in R/m^(D+1)"}};

    const bool log = ctx_->has_boundary();
    const FiltrationSpec<K> Fd = log ? d_saturate_log(F_) : d_saturate(F_);
    std::optional<BSaturation<K>> B;
    if (stage == Stage::kSaturate || stage == Stage::kAnalyze) {
      const auto cands = to_generators<K>(spec_.candidates, ctx_, names_);
      B = b_saturate_probe<K>(F_, spec_.bounds, cands);
      Json s;
      s["d"] = gens(Fd);
      s["operators"] = log ? "logarithmic" : "hasse";
      Json pb;
      pb["generators"] = gens(B->result);
      pb["added"] = probe_log(B->added);
      pb["rejected"] = probe_log(B->rejected);
      s["probe_b"] = pb;
      r["saturation"] = s;
    }
    if (stage == Stage::kSaturate) return r;

    const LevelIdeals<K> Ld(Fd);
    const unsigned emax = spec_.emax.value_or(default_emax(ctx_->field().characteristic(), D_));
    const LeadingAnalysis<K> A = analyze_leading(Ld, emax);
    Json dims = Json::array();
    for (unsigned n = 0; n <= D_; ++n) dims.push_back(A.algebra.dim(n));
    r["leading"] = Json{{"dims", dims}};
    r["sigma"] = Json{{"values", A.sigma.reported()},
                      {"full", A.sigma.values},
                      {"pure_dims", A.sigma.pure_dims},
                      {"stabilized", A.sigma.stabilized},
                      {"emax", emax}};
    if (stage == Stage::kSigma) return r;

    r["lgs"] = lgs_json(A.lgs);
    const HSystem<K> H = HSystem<K>::from_lgs(ctx_, A.lgs);
    const MuValue mt = mu_tilde(Fd, H);
    r["mu_tilde"] = to_json(mt, D_);
    r["precision"]["mu_tilde_at_precision"] = mt.kind() == MuValue::Kind::kInfiniteAtPrecision || mt.kind() == MuValue::Kind::kAtLeast;
    {
      const OrdH<K> ord(H);
      Json table = Json::array();
      const FiltrationSpec<K> N = Fd.normalized();
      for (const auto& g : N.generators())
        table.push_back(Json{{"poly", to_string(g.f, names_)}, {"level", to_string(g.level)}, {"ord", to_json(ord(g.f))}});
      r["ord_H"] = table;
    }
    if (stage == Stage::kMu) return r;

    r["checks"] = log ? Json("skipped: logarithmic saturation") : checks(Ld, A, H, mt, emax);
    r["nonsingularity"] = nonsingularity(B->result, emax);
    return r;
  }

 private:
  Json gens(const FiltrationSpec<K>& F) const {
    Json out = Json::array();
    for (const auto& g : F.generators()) out.push_back(Json{{"poly", to_string(g.f, names_)}, {"level", to_string(g.level)}});
    return out;
  }

  Json probe_log(const std::vector<ProbeLogEntry<K>>& log) const {
    Json out = Json::array();
    for (const auto& e : log)
      out.push_back(Json{{"poly", to_string(e.f, names_)},
                         {"level", to_string(e.level)},
                         {"source", e.source},
                         {"witness_n", e.witness_n}});
    return out;
  }

  Json lgs_json(const std::vector<LgsEntry<K>>& lgs) const {
    Json out = Json::array();
    for (const auto& e : lgs)
      out.push_back(Json{{"h", to_string(e.h, names_)},
                         {"e", e.e},
                         {"leading_form", to_string(e.leading_form, names_)},
                         {"root", to_string(e.root, names_)}});
    return out;
  }

  Json checks(const LevelIdeals<K>& Ld, const LeadingAnalysis<K>& A, const HSystem<K>& H, const MuValue& mt,
              unsigned emax) const {
    Json c;
    c["lgs_conditions"] = lgs_conditions_hold(A.algebra, A.lgs, emax);
    bool pure = true;
    for (unsigned n = 0; n <= D_ && pure; ++n) pure = generated_by_leading_forms(ctx_, A.lgs, n) == A.algebra.slice(n);
    c["pure_generation"] = pure;
    bool s3 = true;
    for (unsigned r = 0; r <= D_ && s3; ++r) s3 = supporting3_check(H, r);
    c["supporting3"] = s3;

    // Coefficient lemma on the level grid up to the top generator level.
    const FiltrationSpec<K> N = Ld.filtration().normalized();
    Rational top = 0;
    for (const auto& g : N.generators()) top = std::max(top, g.level);
    const std::int64_t delta = to_int64(N.level_denominator());
    Json levels = Json::array();
    bool all = true;
    for (std::int64_t k = 1; Rational(k, delta) <= top && k <= 12; ++k) {
      const Rational a(k, delta);
      const Rational mu = default_coefficient_mu(mt, a, D_, spec_.bounds.grid);
      const bool ok = coefficient_decompose_check(Ld, H, a, mu);
      all = all && ok;
      levels.push_back(Json{{"level", to_string(a)}, {"mu", to_string(mu)}, {"holds", ok}});
    }
    c["coefficient_lemma"] = Json{{"holds", all}, {"levels", levels}};
    return c;
  }

  Json nonsingularity(const FiltrationSpec<K>& Fb, unsigned emax) const {
    const LevelIdeals<K> Lb(Fb);
    const LeadingAnalysis<K> A = analyze_leading(Lb, emax);
    const HSystem<K> H = HSystem<K>::from_lgs(ctx_, A.lgs);
    const MuValue mt = mu_tilde(Fb, H);
    Json ns;
    ns["lgs"] = lgs_json(A.lgs);
    ns["mu_tilde"] = to_json(mt, D_);
    if (!mt.is_infinite()) {
      ns["status"] = "hypotheses not met";
      ns["reason"] = "mu_tilde of the probe-saturated filtration is finite";
      return ns;
    }
    const NonsingularityReport rep = nonsingularity_check(Lb, H);
    ns["status"] = rep.passed() ? "passed" : "failed";
    ns["generated_by_H"] = rep.generated_by_H;
    ns["failing_level"] = rep.failing_level ? Json(to_string(*rep.failing_level)) : Json(nullptr);
    ns["all_level_one"] = rep.all_level_one;
    ns["failing_entry"] = rep.failing_entry ? Json(*rep.failing_entry + 1) : Json(nullptr);
    ns["support"] = Json{{"origin_in_support", rep.in_support},
                         {"origin_in_V_H", rep.origin_in_V_H},
                         {"matches", rep.support_matches},
                         {"linear_rank", rep.linear_rank},
                         {"nonsingular", rep.nonsingular_V_H}};
    ns["diagnosis"] = rep.diagnosis;
    return ns;
  }

  const SpecFile& spec_;
  std::span<const std::string> names_;
  ContextPtr<K> ctx_;
  FiltrationSpec<K> F_;
  unsigned D_;
};

bool is_scalar_list(const Json& j) {
  return j.is_array() && std::all_of(j.begin(), j.end(), [](const Json& x) { return x.is_primitive(); });
}

std::string scalar(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

void render(const Json& j, int indent, std::ostringstream& out) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    for (const auto& [key, v] : j.items()) {
      if (v.is_primitive()) {
        out << pad << key << ": " << scalar(v) << '\n';
      } else if (is_scalar_list(v)) {
        out << pad << key << ": [";
        for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << scalar(v[i]);
        out << "]\n";
      } else if (v.is_object() && v.size() == 1 && v.begin()->is_primitive()) {
        out << pad << key << ": " << v.begin().key() << ' ' << scalar(*v.begin()) << '\n';
      } else {
        out << pad << key << ":\n";
        render(v, indent + 2, out);
      }
    }
  } else if (j.is_array()) {
    if (j.empty()) out << pad << "(none)\n";
    for (const auto& v : j) {
      if (v.is_object()) {
        std::ostringstream item;
        render(v, indent + 2, item);
        std::string s = item.str();
        s.replace(static_cast<std::size_t>(indent), 2, "- ");
        out << s;
      } else {
        out << pad << "- " << scalar(v) << '\n';
      }
    }
  } else {
    out << pad << scalar(j) << '\n';
  }
}

}  // namespace

Json build_report(const SpecFile& spec, Stage stage) {
  check_envelope(spec.vars.size(), spec.truncation);
  return with_field(spec, [&](auto k) {
    using K = std::remove_const_t<typename decltype(k)::element_type>;
    return Reporter<K>(spec, k).run(stage);
  });
}

std::string render_text(const Json& j) {
  std::ostringstream out;
  render(j, 0, out);
  return out.str();
}

}  // namespace ifilt
