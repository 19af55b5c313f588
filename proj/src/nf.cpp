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

#include "csszx/nf.hpp"

#include <map>
#include <optional>

#include "csszx/rewrite.hpp"

namespace csszx {

namespace {

struct Rows {
    const BinaryMatrix *stabilizers;
    const BinaryMatrix *logicals;
    const BinaryMatrix *gauges;
};

VertexId add_state_spider(ZxDiagram &d, BasisState s) {
    switch (s) {
        case BasisState::Zero:
            return d.add_spider(VertexKind::X, false);
        case BasisState::One:
            return d.add_spider(VertexKind::X, true);
        case BasisState::Plus:
            return d.add_spider(VertexKind::Z, false);
        case BasisState::Minus:
            break;
    }
    return d.add_spider(VertexKind::Z, true);
}

NormalForm build(std::size_t n, const Rows &rows, NormalFormSide side, const GaugeBoundary &gauge) {
    const auto qubit_kind = side == NormalFormSide::Zx ? VertexKind::X : VertexKind::Z;
    const auto row_kind = swap_color(qubit_kind);
    const std::size_t k = rows.logicals->rows();
    const std::size_t r = rows.gauges ? rows.gauges->rows() : 0;
    const bool open_gauges = gauge.mode == GaugeMode::OpenWires;
    if (!open_gauges && !gauge.states.empty() && gauge.states.size() != r) {
        throw std::invalid_argument("gauge states: expected one state per gauge qubit");
    }

    NormalForm nf;
    auto &d = nf.diagram;
    std::vector<VertexId> ins, outs;
    for (std::size_t i = 0; i < k + (open_gauges ? r : 0); ++i) ins.push_back(d.add_input());
    for (std::size_t q = 0; q < n; ++q) outs.push_back(d.add_output());
    for (std::size_t q = 0; q < n; ++q) {
        auto s = d.add_spider(qubit_kind, false);
        d.add_edge(s, outs[q]);
        nf.layout.qubits.push_back(s);
    }
    auto attach = [&](const BitVec &row, VertexId s) {
        for (auto q : row.support()) d.add_edge(s, nf.layout.qubits[q]);
    };
    for (std::size_t i = 0; i < rows.stabilizers->rows(); ++i) {
        auto s = d.add_spider(row_kind, false);
        attach(rows.stabilizers->row(i), s);
        nf.layout.stabilizers.push_back(s);
    }
    for (std::size_t i = 0; i < k; ++i) {
        auto s = d.add_spider(row_kind, false);
        d.add_edge(ins[i], s);
        attach(rows.logicals->row(i), s);
        nf.layout.logicals.push_back(s);
    }
    for (std::size_t i = 0; i < r; ++i) {
        auto s = d.add_spider(row_kind, false);
        if (open_gauges) {
            d.add_edge(ins[k + i], s);
        } else {
            auto state = add_state_spider(d, gauge.states.empty() ? BasisState::Plus : gauge.states[i]);
            d.add_edge(state, s);
        }
        attach(rows.gauges->row(i), s);
        nf.layout.gauges.push_back(s);
    }
    return nf;
}

/// Collapses input - row spider - qubit spider - output chains into bare wires.
ZxDiagram collapse_chains(NormalForm nf) {
    auto d = std::move(nf.diagram);
    for (auto l : nf.layout.logicals) {
        if (d.degree(l) != 2) continue;
        auto nbrs = d.neighbors(l);
        for (auto q : nbrs) {
            if (d.is_spider(q) && d.degree(q) == 2) {
                d = remove_identity(d, l);
                d = remove_identity(d, q);
                break;
            }
        }
    }
    return d;
}

Rows css_rows(const CssCode &code, NormalFormSide side) {
    if (side == NormalFormSide::Zx) return {&code.x_stabilizers(), &code.x_logicals(), nullptr};
    return {&code.z_stabilizers(), &code.z_logicals(), nullptr};
}

}  // namespace

NormalForm build_normal_form(const CssCode &code, NormalFormSide side) {
    return build(code.n(), css_rows(code, side), side, {});
}

ZxDiagram zx_normal_form(const CssCode &code) { return collapse_chains(build_normal_form(code, NormalFormSide::Zx)); }

ZxDiagram xz_normal_form(const CssCode &code) { return collapse_chains(build_normal_form(code, NormalFormSide::Xz)); }

NormalForm build_subsystem_normal_form(const SubsystemCssCode &code, NormalFormSide side,
                                       const GaugeBoundary &gauge) {
    Rows rows = side == NormalFormSide::Zx
                    ? Rows{&code.x_stabilizers(), &code.x_logicals(), &code.x_gauges()}
                    : Rows{&code.z_stabilizers(), &code.z_logicals(), &code.z_gauges()};
    return build(code.n(), rows, side, gauge);
}

ZxDiagram subsystem_zx_normal_form(const SubsystemCssCode &code, const GaugeBoundary &gauge) {
    auto nf = build_subsystem_normal_form(code, NormalFormSide::Zx, gauge);
    if (code.r() == 0) return collapse_chains(std::move(nf));
    return std::move(nf.diagram);
}

ZxDiagram subsystem_xz_normal_form(const SubsystemCssCode &code, const GaugeBoundary &gauge) {
    auto nf = build_subsystem_normal_form(code, NormalFormSide::Xz, gauge);
    if (code.r() == 0) return collapse_chains(std::move(nf));
    return std::move(nf.diagram);
}

NormalFormRows read_normal_form_rows(const ZxDiagram &d) {
    d.validate();
    const auto &outs = d.outputs();
    const auto &ins = d.inputs();
    const std::size_t n = outs.size();
    std::map<VertexId, std::size_t> input_index;
    for (std::size_t i = 0; i < ins.size(); ++i) input_index[ins[i]] = i;

    // Qubit spiders and bare wires, indexed by output position.
    std::map<VertexId, std::size_t> qubit_of;
    std::optional<VertexKind> qubit_kind;
    std::vector<std::optional<BitVec>> logical_rows(ins.size());
    for (std::size_t q = 0; q < n; ++q) {
        auto e = d.incident_edges(outs[q]).front();
        auto s = d.edge(e).other(outs[q]);
        if (d.is_boundary(s)) {
            auto it = input_index.find(s);
            if (it == input_index.end()) throw DiagramError("code_from_normal_form: output wired to output");
            logical_rows[it->second] = BitVec::from_support(n, {q});
            continue;
        }
        const auto &v = d.vertex(s);
        if (qubit_kind && *qubit_kind != v.kind) {
            throw DiagramError("code_from_normal_form: outputs attach to spiders of both colors");
        }
        qubit_kind = v.kind;
        if (v.phase) throw DiagramError("code_from_normal_form: qubit spider carries a phase");
        if (!qubit_of.emplace(s, q).second) {
            throw DiagramError("code_from_normal_form: spider " + std::to_string(s) + " has two outputs");
        }
    }
    const auto kind = qubit_kind.value_or(VertexKind::X);

    BinaryMatrix stabilizers(0, n);
    for (const auto &[id, v] : d.vertices()) {
        if (v.kind == VertexKind::Boundary) continue;
        if (v.kind == kind) {
            if (!qubit_of.count(id)) {
                throw DiagramError("code_from_normal_form: spider " + std::to_string(id) + " has no output");
            }
            for (auto e : d.incident_edges(id)) {
                auto w = d.edge(e).other(id);
                if (w == id) throw DiagramError("code_from_normal_form: self-loop on a qubit spider");
                if (d.is_boundary(w) && w != outs[qubit_of.at(id)]) {
                    throw DiagramError("code_from_normal_form: qubit spider " + std::to_string(id) + " has an input");
                }
                if (d.is_spider(w) && d.vertex(w).kind == kind) {
                    throw DiagramError("code_from_normal_form: diagram is not bipartite");
                }
            }
            continue;
        }
        if (v.phase) throw DiagramError("code_from_normal_form: row spider carries a phase");
        BitVec row(n);
        std::optional<std::size_t> input;
        for (auto e : d.incident_edges(id)) {
            auto w = d.edge(e).other(id);
            if (w == id) throw DiagramError("code_from_normal_form: self-loop on a row spider");
            if (d.is_boundary(w)) {
                auto it = input_index.find(w);
                if (it == input_index.end() || input) {
                    throw DiagramError("code_from_normal_form: row spider " + std::to_string(id) +
                                       " must carry at most one input and no output");
                }
                input = it->second;
                continue;
            }
            if (d.vertex(w).kind != kind) throw DiagramError("code_from_normal_form: diagram is not bipartite");
            auto q = qubit_of.at(w);
            if (row.get(q)) throw DiagramError("code_from_normal_form: parallel edges between row and qubit spiders");
            row.set(q, true);
        }
        if (input) {
            logical_rows[*input] = std::move(row);
        } else if (!row.is_zero()) {
            stabilizers.append_row(std::move(row));
        }
    }

    BinaryMatrix logicals(0, n);
    for (auto &row : logical_rows) {
        if (!row) throw DiagramError("code_from_normal_form: an input is not attached to a row spider");
        logicals.append_row(*row);
    }
    return NormalFormRows{kind, n, std::move(stabilizers), std::move(logicals)};
}

CssCode code_from_normal_form(const ZxDiagram &d, std::string name, bool *is_encoder) {
    auto rows = read_normal_form_rows(d);
    const auto n = rows.n;
    const auto target = rank(rows.stabilizers) + rows.logicals.rows();
    auto span = independent_rows(vstack(rows.stabilizers, rows.logicals));
    const bool encoder = span.rows() == target;
    if (is_encoder) *is_encoder = encoder;
    if (encoder) {
        auto completed = kernel(span);
        if (rows.kind == VertexKind::X) {
            return new_css(n, rows.stabilizers, completed, LogicalSeed{rows.logicals, std::nullopt}, std::move(name));
        }
        return new_css(n, completed, rows.stabilizers, LogicalSeed{std::nullopt, rows.logicals}, std::move(name));
    }
    if (target > n) throw DiagramError("code_from_normal_form: more inputs than free qubits");
    for (std::size_t q = 0; q < n && span.rows() < target; ++q) {
        auto e = BitVec::from_support(n, {q});
        if (!in_row_space(span, e)) span.append_row(e);
    }
    auto completed = kernel(span);
    if (rows.kind == VertexKind::X) return new_css(n, rows.stabilizers, completed, {}, std::move(name));
    return new_css(n, completed, rows.stabilizers, {}, std::move(name));
}

}  // namespace csszx
