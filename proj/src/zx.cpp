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

#include "csszx/zx.hpp"

#include <algorithm>
#include <cstdio>
#include <set>

namespace csszx {

VertexKind swap_color(VertexKind kind) {
    switch (kind) {
        case VertexKind::Z:
            return VertexKind::X;
        case VertexKind::X:
            return VertexKind::Z;
        default:
            return kind;
    }
}

char to_char(VertexKind kind) {
    switch (kind) {
        case VertexKind::Z:
            return 'Z';
        case VertexKind::X:
            return 'X';
        default:
            return 'B';
    }
}

VertexId ZxDiagram::add_spider(VertexKind kind, bool phase) {
    if (kind == VertexKind::Boundary) {
        throw DiagramError("add_spider: use add_input/add_output for boundary ports");
    }
    auto id = next_vertex_++;
    vertices_.emplace(id, Vertex{kind, phase});
    return id;
}

VertexId ZxDiagram::add_boundary() {
    auto id = next_vertex_++;
    vertices_.emplace(id, Vertex{VertexKind::Boundary, false});
    return id;
}

VertexId ZxDiagram::add_input() {
    auto id = add_boundary();
    inputs_.push_back(id);
    return id;
}

VertexId ZxDiagram::add_output() {
    auto id = add_boundary();
    outputs_.push_back(id);
    return id;
}

EdgeId ZxDiagram::add_edge(VertexId a, VertexId b) {
    if (!has_vertex(a) || !has_vertex(b)) {
        throw DiagramError("add_edge: endpoint " + std::to_string(has_vertex(a) ? b : a) + " does not exist");
    }
    auto id = next_edge_++;
    edges_.emplace(id, Edge{a, b});
    incidence_.emplace(a, id);
    if (a != b) incidence_.emplace(b, id);
    return id;
}

void ZxDiagram::remove_edge(EdgeId e) {
    auto it = edges_.find(e);
    if (it == edges_.end()) throw DiagramError("remove_edge: no edge " + std::to_string(e));
    auto erase_incidence = [this, e](VertexId v) {
        auto [lo, hi] = incidence_.equal_range(v);
        for (auto i = lo; i != hi; ++i) {
            if (i->second == e) {
                incidence_.erase(i);
                return;
            }
        }
    };
    erase_incidence(it->second.a);
    if (!it->second.is_self_loop()) erase_incidence(it->second.b);
    edges_.erase(it);
}

void ZxDiagram::remove_spider(VertexId v) {
    if (!is_spider(v)) throw DiagramError("remove_spider: " + std::to_string(v) + " is not a spider");
    for (auto e : incident_edges(v)) remove_edge(e);
    vertices_.erase(v);
}

void ZxDiagram::remove_boundary(VertexId v) {
    if (!is_boundary(v)) throw DiagramError("remove_boundary: " + std::to_string(v) + " is not a boundary");
    for (auto e : incident_edges(v)) remove_edge(e);
    vertices_.erase(v);
    std::erase(inputs_, v);
    std::erase(outputs_, v);
}

void ZxDiagram::set_phase(VertexId v, bool phase) {
    if (!is_spider(v)) throw DiagramError("set_phase: " + std::to_string(v) + " is not a spider");
    vertices_[v].phase = phase;
}

void ZxDiagram::set_boundary_order(std::vector<VertexId> inputs, std::vector<VertexId> outputs) {
    std::set<VertexId> seen;
    for (auto v : inputs) seen.insert(v);
    for (auto v : outputs) seen.insert(v);
    std::size_t boundaries = 0;
    for (const auto &[id, vert] : vertices_) {
        if (vert.kind == VertexKind::Boundary) ++boundaries;
    }
    if (seen.size() != inputs.size() + outputs.size() || seen.size() != boundaries ||
        !std::all_of(seen.begin(), seen.end(), [this](VertexId v) { return is_boundary(v); })) {
        throw DiagramError("set_boundary_order: lists must name every boundary vertex exactly once");
    }
    inputs_ = std::move(inputs);
    outputs_ = std::move(outputs);
}

const Vertex &ZxDiagram::vertex(VertexId v) const {
    auto it = vertices_.find(v);
    if (it == vertices_.end()) throw DiagramError("no vertex " + std::to_string(v));
    return it->second;
}

const Edge &ZxDiagram::edge(EdgeId e) const {
    auto it = edges_.find(e);
    if (it == edges_.end()) throw DiagramError("no edge " + std::to_string(e));
    return it->second;
}

bool ZxDiagram::is_spider(VertexId v) const {
    auto it = vertices_.find(v);
    return it != vertices_.end() && it->second.kind != VertexKind::Boundary;
}

bool ZxDiagram::is_boundary(VertexId v) const {
    auto it = vertices_.find(v);
    return it != vertices_.end() && it->second.kind == VertexKind::Boundary;
}

std::vector<EdgeId> ZxDiagram::incident_edges(VertexId v) const {
    std::vector<EdgeId> out;
    auto [lo, hi] = incidence_.equal_range(v);
    for (auto i = lo; i != hi; ++i) out.push_back(i->second);
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t ZxDiagram::degree(VertexId v) const {
    std::size_t d = 0;
    auto [lo, hi] = incidence_.equal_range(v);
    for (auto i = lo; i != hi; ++i) d += edges_.at(i->second).is_self_loop() ? 2 : 1;
    return d;
}

std::vector<EdgeId> ZxDiagram::edges_between(VertexId u, VertexId v) const {
    std::vector<EdgeId> out;
    if (u == v) return out;
    for (auto e : incident_edges(u)) {
        if (edges_.at(e).other(u) == v) out.push_back(e);
    }
    return out;
}

std::vector<VertexId> ZxDiagram::neighbors(VertexId v) const {
    std::set<VertexId> out;
    for (auto e : incident_edges(v)) {
        auto w = edges_.at(e).other(v);
        if (w != v) out.insert(w);
    }
    return {out.begin(), out.end()};
}

std::size_t ZxDiagram::num_spiders() const {
    return count_spiders(VertexKind::Z) + count_spiders(VertexKind::X);
}

std::size_t ZxDiagram::count_spiders(VertexKind kind) const {
    return static_cast<std::size_t>(std::count_if(vertices_.begin(), vertices_.end(),
                                                  [kind](const auto &kv) { return kv.second.kind == kind; }));
}

void ZxDiagram::validate() const {
    std::set<VertexId> ports(inputs_.begin(), inputs_.end());
    ports.insert(outputs_.begin(), outputs_.end());
    if (ports.size() != inputs_.size() + outputs_.size()) {
        throw DiagramError("a boundary vertex is listed twice");
    }
    for (const auto &[id, v] : vertices_) {
        if (v.kind != VertexKind::Boundary) continue;
        if (!ports.count(id)) throw DiagramError("boundary " + std::to_string(id) + " is not an input or output");
        if (degree(id) != 1) {
            throw DiagramError("boundary " + std::to_string(id) + " has degree " + std::to_string(degree(id)));
        }
    }
    for (auto p : ports) {
        if (!is_boundary(p)) throw DiagramError("port " + std::to_string(p) + " is not a boundary vertex");
    }
    for (const auto &[id, e] : edges_) {
        if (!has_vertex(e.a) || !has_vertex(e.b)) throw DiagramError("edge " + std::to_string(id) + " dangles");
    }
}

std::string ZxDiagram::digest() const {
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&h](long long value) {
        for (int i = 0; i < 8; ++i) {
            h ^= static_cast<std::uint64_t>(value >> (8 * i)) & 0xff;
            h *= 1099511628211ULL;
        }
    };
    for (const auto &[id, v] : vertices_) {
        mix(id);
        mix(static_cast<int>(v.kind));
        mix(v.phase);
    }
    mix(-1);
    for (const auto &[id, e] : edges_) {
        mix(id);
        mix(std::min(e.a, e.b));
        mix(std::max(e.a, e.b));
    }
    mix(-2);
    for (auto v : inputs_) mix(v);
    mix(-3);
    for (auto v : outputs_) mix(v);
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

namespace {

// Copies every vertex and edge of `src` into `dst`; returns the id map.
std::map<VertexId, VertexId> absorb(ZxDiagram &dst, const ZxDiagram &src) {
    std::map<VertexId, VertexId> remap;
    for (const auto &[id, v] : src.vertices()) {
        remap[id] = v.kind == VertexKind::Boundary ? dst.add_input() : dst.add_spider(v.kind, v.phase);
    }
    for (const auto &[id, e] : src.edges()) dst.add_edge(remap.at(e.a), remap.at(e.b));
    dst.add_scalar_exponent(src.scalar_exponent());
    return remap;
}

std::vector<VertexId> mapped(const std::vector<VertexId> &ids, const std::map<VertexId, VertexId> &remap) {
    std::vector<VertexId> out;
    out.reserve(ids.size());
    for (auto v : ids) out.push_back(remap.at(v));
    return out;
}

}  // namespace

ZxDiagram compose(const ZxDiagram &first, const ZxDiagram &second) {
    if (first.outputs().size() != second.inputs().size()) {
        throw DiagramError("compose: " + std::to_string(first.outputs().size()) + " outputs vs " +
                           std::to_string(second.inputs().size()) + " inputs");
    }
    ZxDiagram out = first;
    const auto first_inputs = first.inputs();
    const auto first_outputs = first.outputs();
    auto remap = absorb(out, second);
    auto second_outputs = mapped(second.outputs(), remap);
    auto second_inputs = mapped(second.inputs(), remap);
    for (std::size_t i = 0; i < first_outputs.size(); ++i) {
        auto a = first_outputs[i];
        auto b = second_inputs[i];
        auto ea = out.incident_edges(a).front();
        auto eb = out.incident_edges(b).front();
        auto x = out.edge(ea).other(a);
        auto y = out.edge(eb).other(b);
        out.remove_boundary(a);
        out.remove_boundary(b);
        if (x == b) {
            // Closed loop: a circle evaluates to the scalar 2.
            out.add_scalar_exponent(2);
            continue;
        }
        out.add_edge(x, y);
    }
    out.set_boundary_order(first_inputs, second_outputs);
    return out;
}

ZxDiagram tensor(const ZxDiagram &a, const ZxDiagram &b) {
    ZxDiagram out = a;
    auto remap = absorb(out, b);
    auto inputs = a.inputs();
    auto outputs = a.outputs();
    for (auto v : mapped(b.inputs(), remap)) inputs.push_back(v);
    for (auto v : mapped(b.outputs(), remap)) outputs.push_back(v);
    out.set_boundary_order(std::move(inputs), std::move(outputs));
    return out;
}

ZxDiagram identity_diagram(std::size_t n) {
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    return permutation_diagram(perm);
}

ZxDiagram permutation_diagram(const std::vector<std::size_t> &perm) {
    const auto n = perm.size();
    std::vector<bool> hit(n, false);
    for (auto p : perm) {
        if (p >= n || hit[p]) throw DiagramError("permutation_diagram: not a permutation");
        hit[p] = true;
    }
    ZxDiagram d;
    std::vector<VertexId> ins, outs;
    for (std::size_t i = 0; i < n; ++i) ins.push_back(d.add_input());
    for (std::size_t i = 0; i < n; ++i) outs.push_back(d.add_output());
    for (std::size_t i = 0; i < n; ++i) d.add_edge(ins[i], outs[perm[i]]);
    return d;
}

ZxDiagram spider_diagram(VertexKind kind, bool phase, std::size_t num_inputs, std::size_t num_outputs) {
    ZxDiagram d;
    auto s = d.add_spider(kind, phase);
    for (std::size_t i = 0; i < num_inputs; ++i) d.add_edge(d.add_input(), s);
    for (std::size_t i = 0; i < num_outputs; ++i) d.add_edge(s, d.add_output());
    return d;
}

ZxDiagram basis_state_diagram(BasisState s) {
    switch (s) {
        case BasisState::Zero:
            return spider_diagram(VertexKind::X, false, 0, 1);
        case BasisState::One:
            return spider_diagram(VertexKind::X, true, 0, 1);
        case BasisState::Plus:
            return spider_diagram(VertexKind::Z, false, 0, 1);
        case BasisState::Minus:
            return spider_diagram(VertexKind::Z, true, 0, 1);
    }
    throw DiagramError("unknown basis state");
}

ZxDiagram plug_inputs(const ZxDiagram &d, const std::vector<std::size_t> &inputs,
                      const std::vector<BasisState> &states) {
    if (inputs.size() != states.size()) throw DiagramError("plug_inputs: size mismatch");
    const auto n = d.inputs().size();
    std::vector<int> state_at(n, -1);
    for (std::size_t j = 0; j < inputs.size(); ++j) {
        if (inputs[j] >= n || state_at[inputs[j]] != -1) throw DiagramError("plug_inputs: bad input index");
        state_at[inputs[j]] = static_cast<int>(j);
    }
    ZxDiagram prep;
    for (std::size_t i = 0; i < n; ++i) {
        if (state_at[i] >= 0) {
            auto s = states[static_cast<std::size_t>(state_at[i])];
            auto kind = (s == BasisState::Zero || s == BasisState::One) ? VertexKind::X : VertexKind::Z;
            bool phase = s == BasisState::One || s == BasisState::Minus;
            auto sp = prep.add_spider(kind, phase);
            auto o = prep.add_output();
            prep.add_edge(sp, o);
        } else {
            auto in = prep.add_input();
            auto o = prep.add_output();
            prep.add_edge(in, o);
        }
    }
    return compose(prep, d);
}

ZxDiagram inputs_to_outputs(const ZxDiagram &d) {
    ZxDiagram out = d;
    std::vector<VertexId> outputs = d.inputs();
    for (auto v : d.outputs()) outputs.push_back(v);
    out.set_boundary_order({}, std::move(outputs));
    return out;
}

ZxDiagram pauli_projector_diagram(const PauliOperator &p, bool k) {
    if (!p.is_x_type() && !p.is_z_type()) throw DiagramError("pauli_projector_diagram: operator must be pure X or Z");
    const auto n = p.num_qubits();
    const auto &support = p.is_x_type() ? p.x() : p.z();
    const auto leg_kind = p.is_x_type() && !p.is_identity() ? VertexKind::X : VertexKind::Z;
    ZxDiagram d;
    std::vector<VertexId> ins, outs;
    for (std::size_t q = 0; q < n; ++q) ins.push_back(d.add_input());
    for (std::size_t q = 0; q < n; ++q) outs.push_back(d.add_output());
    auto hub = d.add_spider(swap_color(leg_kind), k);
    for (std::size_t q = 0; q < n; ++q) {
        if (!support.get(q)) {
            d.add_edge(ins[q], outs[q]);
            continue;
        }
        auto s = d.add_spider(leg_kind, false);
        d.add_edge(ins[q], s);
        d.add_edge(s, outs[q]);
        d.add_edge(s, hub);
    }
    return d;
}

}  // namespace csszx
