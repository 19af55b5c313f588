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

#include "csszx/io.hpp"

#include <map>
#include <sstream>

namespace csszx {

namespace {

Json rows_json(const BinaryMatrix &m) {
    Json out = Json::array();
    for (const auto &row : m.to_strings()) out.push_back(row);
    return out;
}

BinaryMatrix rows_from(const Json &j, const char *key, std::size_t n) {
    if (!j.contains(key)) return BinaryMatrix(0, n);
    const auto &arr = j.at(key);
    if (!arr.is_array()) throw FormatError(std::string("code JSON: '") + key + "' must be an array of bitstrings");
    BinaryMatrix m(0, n);
    for (const auto &row : arr) {
        if (!row.is_string()) throw FormatError(std::string("code JSON: '") + key + "' entries must be strings");
        auto text = row.get<std::string>();
        if (text.size() != n || text.find_first_not_of("01") != std::string::npos) {
            throw FormatError(std::string("code JSON: '") + key + "' row '" + text + "' is not a length-" +
                              std::to_string(n) + " bitstring");
        }
        m.append_row(BitVec::from_string(text));
    }
    return m;
}

std::vector<std::size_t> one_based(const std::vector<std::size_t> &v) {
    std::vector<std::size_t> out;
    for (auto x : v) out.push_back(x + 1);
    return out;
}

}  // namespace

Json parse_json(const std::string &text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw FormatError(std::string("invalid JSON: ") + e.what());
    }
}

Json code_to_json(const CssCode &code) {
    Json j;
    j["name"] = code.name();
    j["n"] = code.n();
    j["x_stabilizers"] = rows_json(code.x_stabilizers());
    j["z_stabilizers"] = rows_json(code.z_stabilizers());
    j["x_logicals"] = rows_json(code.x_logicals());
    j["z_logicals"] = rows_json(code.z_logicals());
    return j;
}

Json code_to_json(const SubsystemCssCode &code) {
    Json j;
    j["name"] = code.name();
    j["n"] = code.n();
    j["x_stabilizers"] = rows_json(code.x_stabilizers());
    j["z_stabilizers"] = rows_json(code.z_stabilizers());
    j["x_logicals"] = rows_json(code.x_logicals());
    j["z_logicals"] = rows_json(code.z_logicals());
    j["x_gauges"] = rows_json(code.x_gauges());
    j["z_gauges"] = rows_json(code.z_gauges());
    return j;
}

CatalogEntry code_from_json(const Json &j) {
    if (!j.is_object()) throw FormatError("code JSON: expected an object");
    if (!j.contains("n") || !j.at("n").is_number_unsigned()) throw FormatError("code JSON: missing integer 'n'");
    const auto n = j.at("n").get<std::size_t>();
    const auto name = j.contains("name") && j.at("name").is_string() ? j.at("name").get<std::string>() : "";
    auto sx = rows_from(j, "x_stabilizers", n);
    auto sz = rows_from(j, "z_stabilizers", n);
    LogicalSeed seed;
    if (j.contains("x_logicals")) seed.x = rows_from(j, "x_logicals", n);
    if (j.contains("z_logicals")) seed.z = rows_from(j, "z_logicals", n);
    if (j.contains("x_gauges") || j.contains("z_gauges")) {
        return new_subsystem(n, sx, sz, rows_from(j, "x_gauges", n), rows_from(j, "z_gauges", n), seed, name);
    }
    return new_css(n, sx, sz, seed, name);
}

Json diagram_to_json(const ZxDiagram &d) {
    std::map<VertexId, int> id;
    Json spiders = Json::array();
    for (const auto &[v, vert] : d.vertices()) {
        if (vert.kind == VertexKind::Boundary) continue;
        int next = static_cast<int>(id.size());
        id[v] = next;
        spiders.push_back({{"id", next}, {"kind", std::string(1, to_char(vert.kind))}, {"phase", vert.phase ? 1 : 0}});
    }
    Json edges = Json::array();
    std::map<VertexId, int> wire_spider;
    for (const auto &[e, edge] : d.edges()) {
        bool a_port = d.is_boundary(edge.a);
        bool b_port = d.is_boundary(edge.b);
        if (a_port && b_port) {
            int next = static_cast<int>(id.size());
            id[-1 - e] = next;
            spiders.push_back({{"id", next}, {"kind", "Z"}, {"phase", 0}});
            wire_spider[edge.a] = next;
            wire_spider[edge.b] = next;
        } else if (a_port) {
            wire_spider[edge.a] = id.at(edge.b);
        } else if (b_port) {
            wire_spider[edge.b] = id.at(edge.a);
        } else {
            edges.push_back(Json::array({id.at(edge.a), id.at(edge.b)}));
        }
    }
    Json inputs = Json::array();
    Json outputs = Json::array();
    for (auto p : d.inputs()) inputs.push_back(wire_spider.at(p));
    for (auto p : d.outputs()) outputs.push_back(wire_spider.at(p));
    Json j;
    j["spiders"] = std::move(spiders);
    j["edges"] = std::move(edges);
    j["inputs"] = std::move(inputs);
    j["outputs"] = std::move(outputs);
    return j;
}

ZxDiagram diagram_from_json(const Json &j) {
    if (!j.is_object()) throw FormatError("diagram JSON: expected an object");
    for (const char *key : {"spiders", "edges", "inputs", "outputs"}) {
        if (!j.contains(key) || !j.at(key).is_array()) {
            throw FormatError(std::string("diagram JSON: missing array '") + key + "'");
        }
    }
    ZxDiagram d;
    std::map<long long, VertexId> id;
    for (const auto &s : j.at("spiders")) {
        if (!s.is_object() || !s.contains("id") || !s.contains("kind") || !s.at("id").is_number_integer()) {
            throw FormatError("diagram JSON: spider entries need 'id' and 'kind'");
        }
        auto kind_text = s.at("kind").get<std::string>();
        VertexKind kind;
        if (kind_text == "Z") {
            kind = VertexKind::Z;
        } else if (kind_text == "X") {
            kind = VertexKind::X;
        } else {
            throw FormatError("diagram JSON: spider kind must be \"Z\" or \"X\"");
        }
        int phase = s.contains("phase") ? s.at("phase").get<int>() : 0;
        if (phase != 0 && phase != 1) throw FormatError("diagram JSON: phase must be 0 or 1");
        auto key = s.at("id").get<long long>();
        if (!id.emplace(key, d.add_spider(kind, phase == 1)).second) {
            throw FormatError("diagram JSON: duplicate spider id " + std::to_string(key));
        }
    }
    auto lookup = [&](const Json &v) {
        if (!v.is_number_integer()) throw FormatError("diagram JSON: vertex references must be integers");
        auto it = id.find(v.get<long long>());
        if (it == id.end()) throw FormatError("diagram JSON: unknown spider " + v.dump());
        return it->second;
    };
    for (const auto &e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw FormatError("diagram JSON: edges are [id, id] pairs");
        d.add_edge(lookup(e[0]), lookup(e[1]));
    }
    for (const auto &v : j.at("inputs")) d.add_edge(d.add_input(), lookup(v));
    for (const auto &v : j.at("outputs")) d.add_edge(d.add_output(), lookup(v));
    return d;
}

std::string diagram_to_dot(const ZxDiagram &d, const std::string &title) {
    std::ostringstream out;
    out << "graph \"" << title << "\" {\n  rankdir=LR;\n";
    std::map<VertexId, std::string> label;
    for (std::size_t i = 0; i < d.inputs().size(); ++i) label[d.inputs()[i]] = "in" + std::to_string(i + 1);
    for (std::size_t i = 0; i < d.outputs().size(); ++i) label[d.outputs()[i]] = "out" + std::to_string(i + 1);
    for (const auto &[v, vert] : d.vertices()) {
        out << "  v" << v;
        switch (vert.kind) {
            case VertexKind::Boundary:
                out << " [shape=square, label=\"" << label[v] << "\"];\n";
                break;
            case VertexKind::Z:
                out << " [shape=circle, style=filled, fillcolor=green, label=\"" << (vert.phase ? "pi" : "") << "\"];\n";
                break;
            case VertexKind::X:
                out << " [shape=circle, style=filled, fillcolor=red, label=\"" << (vert.phase ? "pi" : "") << "\"];\n";
                break;
        }
    }
    for (const auto &[e, edge] : d.edges()) out << "  v" << edge.a << " -- v" << edge.b << ";\n";
    out << "}\n";
    return out.str();
}

Json trace_to_json(const std::vector<RewriteStep> &trace) {
    Json out = Json::array();
    for (const auto &step : trace) out.push_back(std::string(rule_name(step.rule)));
    return out;
}

Json morph_to_json(const MorphResult &m) {
    Json j;
    j["subset"] = one_based(m.subset);
    j["child"] = code_to_json(m.child);
    j["morphed"] = code_to_json(m.morphed);
    Json map = Json::object();
    for (const auto &[spider, qubit] : m.new_qubit_map) map[std::to_string(spider)] = qubit + 1;
    j["new_qubit_map"] = std::move(map);
    j["permutation"] = one_based(m.permutation);
    j["trace"] = trace_to_json(m.trace);
    j["child_is_encoder"] = m.child_is_encoder;
    j["verified"] = m.verified;
    return j;
}

Json gauge_fix_to_json(const GaugeFixResult &g) {
    Json j;
    j["basis"] = std::string(1, to_char(g.basis));
    j["outcomes"] = g.outcomes.to_string();
    j["fixed_code"] = code_to_json(g.fixed_code);
    j["recovery"] = g.recovery.str();
    j["trace"] = g.trace;
    j["verified"] = g.verified;
    return j;
}

Json switch_to_json(const SwitchResult &s) {
    Json j;
    j["from"] = s.from;
    j["to"] = s.to;
    Json steps = Json::array();
    for (const auto &step : s.steps) {
        steps.push_back({{"measured", step.measured.str()},
                         {"recovery", step.recovery.str()},
                         {"removed", step.removed.str()},
                         {"code", code_to_json(step.after)},
                         {"verified", step.verified}});
    }
    j["steps"] = std::move(steps);
    j["final_code"] = code_to_json(s.final_code);
    j["reached_target"] = s.reached_target;
    j["verified"] = s.verified;
    return j;
}

}  // namespace csszx
