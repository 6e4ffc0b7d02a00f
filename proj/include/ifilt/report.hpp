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

// The analysis pipeline behind the command-line tool, producing a JSON
// report with sorted keys and canonical polynomial printing.

#ifndef IFILT_REPORT_HPP
#define IFILT_REPORT_HPP

#include <string>

#include "json.hpp"

#include "ifilt/extended.hpp"
#include "ifilt/spec_file.hpp"

namespace ifilt {

using Json = nlohmann::json;

enum class Stage { kSaturate, kSigma, kMu, kAnalyze };

/// {"value": n}, {"at_least": n} or "infinity".
Json to_json(const SatOrd& o);
/// {"value": "p/q"}, {"at_least": "p/q"}, {"infinity_at_precision": D} or "infinity".
Json to_json(const MuValue& m, unsigned D);

/// Runs the pipeline up to `stage`. Throws Error on envelope violations.
Json build_report(const SpecFile& spec, Stage stage);

/// Plain-text rendering of a report, one field per line.
std::string render_text(const Json& j);

}  // namespace ifilt

#endif  // IFILT_REPORT_HPP
