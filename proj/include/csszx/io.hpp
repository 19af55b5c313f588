// Copyright 2026 The csszx Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

#include "csszx/code.hpp"
#include "csszx/xform.hpp"
#include "csszx/zx.hpp"
#include "json.hpp"

namespace csszx {

class FormatError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

using Json = nlohmann::ordered_json;

/// {"name", "n", "x_stabilizers", "z_stabilizers", "x_logicals", "z_logicals"}
/// with bitstrings, qubit 1 leftmost. Subsystem codes add "x_gauges" and "z_gauges".
Json code_to_json(const CssCode &code);
Json code_to_json(const SubsystemCssCode &code);
/// Reads either kind; a document with gauge rows yields a subsystem code.
CatalogEntry code_from_json(const Json &j);

/// {"spiders": [{"id", "kind", "phase"}], "edges": [[a, b]], "inputs", "outputs"}.
/// Spiders are renumbered 0.. in id order; "inputs"/"outputs" name the spider
/// carrying each boundary leg, in wire order. A bare wire is written through a
/// phase-free Z spider.
Json diagram_to_json(const ZxDiagram &d);
ZxDiagram diagram_from_json(const Json &j);

/// Graphviz text: Z spiders green circles, X spiders red circles, boundaries squares.
std::string diagram_to_dot(const ZxDiagram &d, const std::string &title = "diagram");

Json trace_to_json(const std::vector<RewriteStep> &trace);
Json morph_to_json(const MorphResult &m);
Json gauge_fix_to_json(const GaugeFixResult &g);
Json switch_to_json(const SwitchResult &s);

/// Parses a JSON document, rethrowing parse errors as FormatError.
Json parse_json(const std::string &text);

}  // namespace csszx
