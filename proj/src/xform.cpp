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

#include "csszx/xform.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

namespace csszx {

namespace {

/// Builds a diagram wire by wire: each wire remembers its last vertex.
class WireChain {
   public:
    explicit WireChain(std::size_t wires) {
        for (std::size_t i = 0; i < wires; ++i) ends_.push_back(d_.add_input());
    }

    VertexId append(std::size_t wire, VertexKind kind, bool phase) {
        auto s = d_.add_spider(kind, phase);
        d_.add_edge(ends_.at(wire), s);
        ends_[wire] = s;
        return s;
    }

    /// Routes `wire` through an existing spider.
    void pass_through(std::size_t wire, VertexId s) {
        d_.add_edge(ends_.at(wire), s);
        ends_[wire] = s;
    }

    ZxDiagram &diagram() { return d_; }

    ZxDiagram finish() {
        for (auto end : ends_) d_.add_edge(end, d_.add_output());
        return std::move(d_);
    }

   private:
    ZxDiagram d_;
    std::vector<VertexId> ends_;
};

void add_external_legs(ZxDiagram &d, VertexId hub, std::size_t count) {
    for (std::size_t i = 0; i < count; ++i) d.add_edge(d.add_input(), hub);
}

std::string join_indices(const std::vector<std::size_t> &v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

}  // namespace

// Push-through --------------------------------------------------------------

PauliOperator transversal_pauli(const CssCode &code, PauliKind which, std::size_t i) {
    if (i < 1 || i > code.k()) throw std::out_of_range("transversal_pauli: logical index out of range");
    const auto &rows = which == PauliKind::X ? code.x_logicals() : code.z_logicals();
    return PauliOperator::from_bits(which, rows.row(i - 1));
}

LogicalLayer LogicalLayer::parse(std::string_view text) {
    LogicalLayer layer;
    std::string s(text);
    std::stringstream ops(s);
    std::string item;
    while (std::getline(ops, item, ';')) {
        item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }),
                   item.end());
        if (item.empty()) continue;
        auto colon = item.find(':');
        if (colon == std::string::npos) throw std::invalid_argument("layer: expected KIND:wires in '" + item + "'");
        auto kind = item.substr(0, colon);
        auto rest = item.substr(colon + 1);
        LayerPrimitive op;
        if (kind == "X") {
            op.type = PrimitiveType::PauliX;
        } else if (kind == "Z") {
            op.type = PrimitiveType::PauliZ;
        } else if (kind == "ZS") {
            op.type = PrimitiveType::ZSpiderGadget;
        } else if (kind == "XS") {
            op.type = PrimitiveType::XSpiderGadget;
        } else {
            throw std::invalid_argument("layer: unknown primitive '" + kind + "'");
        }
        if (auto hash = rest.find('#'); hash != std::string::npos) {
            if (op.type == PrimitiveType::PauliX || op.type == PrimitiveType::PauliZ) {
                throw std::invalid_argument("layer: only gadgets take external legs");
            }
            op.external_legs = std::stoul(rest.substr(hash + 1));
            rest = rest.substr(0, hash);
        }
        std::stringstream wires(rest);
        std::string w;
        while (std::getline(wires, w, ',')) {
            if (w.empty() || !std::all_of(w.begin(), w.end(), [](unsigned char c) { return std::isdigit(c); })) {
                throw std::invalid_argument("layer: bad wire index '" + w + "'");
            }
            op.wires.push_back(std::stoul(w));
        }
        if (op.wires.empty()) throw std::invalid_argument("layer: primitive without wires");
        layer.ops.push_back(std::move(op));
    }
    return layer;
}

std::string LogicalLayer::str() const {
    std::string out;
    for (const auto &op : ops) {
        if (!out.empty()) out += ';';
        switch (op.type) {
            case PrimitiveType::PauliX:
                out += "X:";
                break;
            case PrimitiveType::PauliZ:
                out += "Z:";
                break;
            case PrimitiveType::ZSpiderGadget:
                out += "ZS:";
                break;
            case PrimitiveType::XSpiderGadget:
                out += "XS:";
                break;
        }
        out += join_indices(op.wires);
        bool gadget = op.type == PrimitiveType::ZSpiderGadget || op.type == PrimitiveType::XSpiderGadget;
        if (gadget && op.external_legs != 1) out += "#" + std::to_string(op.external_legs);
    }
    return out;
}

std::size_t LogicalLayer::external_legs() const {
    std::size_t total = 0;
    for (const auto &op : ops) {
        if (op.type == PrimitiveType::ZSpiderGadget || op.type == PrimitiveType::XSpiderGadget) {
            total += op.external_legs;
        }
    }
    return total;
}

void LogicalLayer::validate(std::size_t k) const {
    for (const auto &op : ops) {
        std::set<std::size_t> seen;
        for (auto w : op.wires) {
            if (w < 1 || w > k) throw std::out_of_range("layer: wire " + std::to_string(w) + " outside 1.." + std::to_string(k));
            if (!seen.insert(w).second) throw std::invalid_argument("layer: wire listed twice in one primitive");
        }
    }
}

ZxDiagram logical_layer_diagram(const LogicalLayer &layer, std::size_t k) {
    layer.validate(k);
    WireChain chain(k);
    for (const auto &op : layer.ops) {
        switch (op.type) {
            case PrimitiveType::PauliX:
            case PrimitiveType::PauliZ: {
                auto kind = op.type == PrimitiveType::PauliX ? VertexKind::X : VertexKind::Z;
                for (auto w : op.wires) chain.append(w - 1, kind, true);
                break;
            }
            case PrimitiveType::ZSpiderGadget:
            case PrimitiveType::XSpiderGadget: {
                auto kind = op.type == PrimitiveType::ZSpiderGadget ? VertexKind::Z : VertexKind::X;
                auto hub = chain.diagram().add_spider(kind, false);
                for (auto w : op.wires) chain.pass_through(w - 1, hub);
                add_external_legs(chain.diagram(), hub, op.external_legs);
                break;
            }
        }
    }
    return chain.finish();
}

namespace {

/// One spider per touched qubit, one opposite-colored parity hub per logical
/// row, and a common spider holding the external legs.
void physical_gadget(WireChain &chain, const BinaryMatrix &rows, const std::vector<std::size_t> &wires,
                     VertexKind qubit_kind, std::size_t external_legs) {
    auto &d = chain.diagram();
    std::map<std::size_t, VertexId> on_qubit;
    for (auto w : wires) {
        for (auto q : rows.row(w - 1).support()) on_qubit.emplace(q, -1);
    }
    for (auto &[q, s] : on_qubit) s = chain.append(q, qubit_kind, false);
    auto common = d.add_spider(qubit_kind, false);
    for (auto w : wires) {
        auto hub = d.add_spider(swap_color(qubit_kind), false);
        d.add_edge(common, hub);
        for (auto q : rows.row(w - 1).support()) d.add_edge(hub, on_qubit.at(q));
    }
    add_external_legs(d, common, external_legs);
}

}  // namespace

ZxDiagram push_through(const CssCode &code, const LogicalLayer &layer, double tol) {
    layer.validate(code.k());
    WireChain chain(code.n());
    for (const auto &op : layer.ops) {
        switch (op.type) {
            case PrimitiveType::PauliX:
                for (auto w : op.wires) {
                    for (auto q : code.x_logicals().row(w - 1).support()) chain.append(q, VertexKind::X, true);
                }
                break;
            case PrimitiveType::PauliZ:
                for (auto w : op.wires) {
                    for (auto q : code.z_logicals().row(w - 1).support()) chain.append(q, VertexKind::Z, true);
                }
                break;
            case PrimitiveType::ZSpiderGadget:
                physical_gadget(chain, code.z_logicals(), op.wires, VertexKind::Z, op.external_legs);
                break;
            case PrimitiveType::XSpiderGadget:
                physical_gadget(chain, code.x_logicals(), op.wires, VertexKind::X, op.external_legs);
                break;
        }
    }
    auto physical = chain.finish();
    if (!verify_push_through(code, layer, physical, tol)) {
        throw VerificationError("push_through: E o L and P o E differ for layer '" + layer.str() + "'");
    }
    return physical;
}

bool verify_push_through(const CssCode &code, const LogicalLayer &layer, const ZxDiagram &physical, double tol) {
    const auto encoder = zx_normal_form(code);
    const auto logical = logical_layer_diagram(layer, code.k());
    const auto lhs = compose(logical, encoder);
    const auto rhs = compose(tensor(encoder, identity_diagram(layer.external_legs())), physical);
    return equal_up_to_scalar(evaluate(lhs), evaluate(rhs), tol);
}

// Morphing ------------------------------------------------------------------

namespace {

struct Split {
    ZxDiagram child;
    ZxDiagram rest;
};

/// Cuts `d` into the part spanned by `inside` and the rest. Each cut edge runs
/// from a vertex of the rest to a vertex inside and becomes an output of the
/// rest and an input of the child, in the listed order.
Split split_diagram(const ZxDiagram &d, const std::set<VertexId> &inside, const std::vector<EdgeId> &cuts) {
    auto is_inside = [&](VertexId v) {
        if (d.is_boundary(v)) {
            auto e = d.incident_edges(v).front();
            return inside.count(d.edge(e).other(v)) != 0;
        }
        return inside.count(v) != 0;
    };
    Split out;
    std::map<VertexId, VertexId> child_id, rest_id;
    for (auto v : d.inputs()) {
        if (is_inside(v)) throw MorphError("split: a logical input lies inside the subset");
        rest_id[v] = out.rest.add_input();
    }
    std::vector<VertexId> cut_inputs;
    for (std::size_t i = 0; i < cuts.size(); ++i) cut_inputs.push_back(out.child.add_input());
    for (auto v : d.outputs()) {
        if (is_inside(v)) {
            child_id[v] = out.child.add_output();
        } else {
            rest_id[v] = out.rest.add_output();
        }
    }
    std::vector<VertexId> cut_outputs;
    for (std::size_t i = 0; i < cuts.size(); ++i) cut_outputs.push_back(out.rest.add_output());
    for (const auto &[id, v] : d.vertices()) {
        if (v.kind == VertexKind::Boundary) continue;
        if (is_inside(id)) {
            child_id[id] = out.child.add_spider(v.kind, v.phase);
        } else {
            rest_id[id] = out.rest.add_spider(v.kind, v.phase);
        }
    }
    std::map<EdgeId, std::size_t> cut_index;
    for (std::size_t i = 0; i < cuts.size(); ++i) cut_index[cuts[i]] = i;
    for (const auto &[id, e] : d.edges()) {
        bool a_in = is_inside(e.a);
        bool b_in = is_inside(e.b);
        if (a_in && b_in) {
            out.child.add_edge(child_id.at(e.a), child_id.at(e.b));
        } else if (!a_in && !b_in) {
            out.rest.add_edge(rest_id.at(e.a), rest_id.at(e.b));
        } else {
            auto it = cut_index.find(id);
            if (it == cut_index.end()) throw MorphError("split: edge " + std::to_string(id) + " crosses the cut");
            auto in_vertex = a_in ? e.a : e.b;
            auto out_vertex = a_in ? e.b : e.a;
            out.child.add_edge(cut_inputs[it->second], child_id.at(in_vertex));
            out.rest.add_edge(rest_id.at(out_vertex), cut_outputs[it->second]);
        }
    }
    return out;
}

CssCode empty_code() { return new_css(0, BinaryMatrix(0, 0), BinaryMatrix(0, 0), {}, "empty"); }

ZxDiagram encoder_of(const CssCode &code) { return zx_normal_form(code); }

}  // namespace

MorphResult morph(const CssCode &code, const std::vector<std::size_t> &subset, const MorphOptions &options) {
    const auto n = code.n();
    std::vector<std::size_t> r = subset;
    std::sort(r.begin(), r.end());
    if (std::adjacent_find(r.begin(), r.end()) != r.end()) throw MorphError("morph: qubit listed twice");
    if (!r.empty() && r.back() >= n) throw MorphError("morph: qubit index out of range");
    std::vector<bool> in_r(n, false);
    for (auto q : r) in_r[q] = true;

    auto nf = build_normal_form(code, options.side);
    const auto qubit_kind = options.side == NormalFormSide::Zx ? VertexKind::X : VertexKind::Z;
    Derivation derivation(nf.diagram);
    std::set<VertexId> inside;
    std::set<VertexId> qubit_spiders(nf.layout.qubits.begin(), nf.layout.qubits.end());
    for (auto q : r) inside.insert(nf.layout.qubits[q]);

    MorphResult result;
    result.subset = r;
    std::vector<EdgeId> cuts;
    const std::size_t outside_qubits = n - r.size();

    auto handle = [&](VertexId s, bool logical) {
        const auto &d = derivation.current();
        std::vector<EdgeId> legs_in;
        std::size_t outside = logical ? 1 : 0;
        for (auto e : d.incident_edges(s)) {
            auto w = d.edge(e).other(s);
            if (!qubit_spiders.count(w)) continue;
            if (inside.count(w)) {
                legs_in.push_back(e);
            } else {
                ++outside;
            }
        }
        if (legs_in.empty()) return;
        if (outside == 0) {
            inside.insert(s);
            return;
        }
        auto half = d.next_vertex_id();
        auto joining = d.next_edge_id();
        derivation.apply(RuleName::Unfuse, RewriteSite{{s}, legs_in, VertexKind::Z, false});
        const auto &d2 = derivation.current();
        // insert_identity adds (s, new qubit) and then (new qubit, half).
        auto cut = d2.next_edge_id() + 1;
        derivation.apply(RuleName::InsertIdentity, RewriteSite{{}, {joining}, qubit_kind, false});
        inside.insert(half);
        result.new_qubit_map[s] = outside_qubits + cuts.size();
        cuts.push_back(cut);
    };
    for (auto s : nf.layout.stabilizers) handle(s, false);
    for (auto s : nf.layout.logicals) handle(s, true);
    result.trace = derivation.steps();

    auto split = split_diagram(derivation.current(), inside, cuts);
    result.child_diagram = std::move(split.child);
    result.morphed_diagram = std::move(split.rest);
    try {
        result.child = r.empty() ? empty_code() : code_from_normal_form(result.child_diagram, code.name() + "_child",
                                                                        &result.child_is_encoder);
        result.morphed = code_from_normal_form(result.morphed_diagram, code.name() + "_morphed");
    } catch (const CodeError &e) {
        throw MorphError(std::string("morph: split halves do not form codes: ") + e.what());
    } catch (const DiagramError &e) {
        throw MorphError(std::string("morph: split halves do not form codes: ") + e.what());
    }

    for (std::size_t q = 0; q < n; ++q) {
        if (!in_r[q]) result.permutation.push_back(q);
    }
    for (auto q : r) result.permutation.push_back(q);

    if (options.verify) result.verified = verify_morph(code, result, options.tol);
    return result;
}

bool verify_morph(const CssCode &code, const MorphResult &result, double tol) {
    const auto outside = code.n() - result.subset.size();
    const auto parent = evaluate(encoder_of(code));
    auto split = compose(result.morphed_diagram, tensor(identity_diagram(outside), result.child_diagram));
    if (!equal_up_to_scalar(parent, evaluate(compose(split, permutation_diagram(result.permutation))), tol)) {
        return false;
    }
    if (!result.child_is_encoder) return true;
    auto stacked = compose(encoder_of(result.morphed), tensor(identity_diagram(outside), encoder_of(result.child)));
    auto full = compose(stacked, permutation_diagram(result.permutation));
    return equal_up_to_scalar(parent, evaluate(full), tol);
}

std::optional<MorphResult> find_morph_subset(const CssCode &code, const MorphTarget &target, double tol) {
    const auto n = code.n();
    const auto size = target.subset_size;
    if (size > n) return std::nullopt;
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    MorphOptions quick;
    quick.verify = false;
    while (true) {
        try {
            auto m = morph(code, idx, quick);
            if (m.child.k() == target.child_k && m.morphed.n() == target.morphed_n &&
                m.morphed.k() == target.morphed_k && distance(m.child) == target.child_d &&
                distance(m.morphed) == target.morphed_d) {
                m.verified = m.child_is_encoder && verify_morph(code, m, tol);
                if (m.verified) return m;
            }
        } catch (const MorphError &) {
        }
        // Next combination in lexicographic order.
        std::size_t i = size;
        while (i > 0 && idx[i - 1] == n - size + i - 1) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
    return std::nullopt;
}

// Gauge fixing ---------------------------------------------------------------

std::size_t worker_count() {
    if (const char *env = std::getenv("CSSZX_WORKERS")) {
        char *end = nullptr;
        auto v = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return std::min<std::size_t>(v, 64);
    }
    return 1;
}

namespace {

template <typename Fn>
void parallel_for(std::size_t count, Fn fn) {
    const auto workers = std::min(worker_count(), std::max<std::size_t>(count, 1));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr error;
    std::mutex error_mutex;
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) {
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) error = std::current_exception();
                }
            }
        });
    }
    for (auto &t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

const BinaryMatrix &gauge_rows(const SubsystemCssCode &code, PauliKind kind) {
    return kind == PauliKind::X ? code.x_gauges() : code.z_gauges();
}

std::vector<BasisState> computational_states(std::size_t g, std::size_t r) {
    std::vector<BasisState> states;
    for (std::size_t i = 0; i < r; ++i) {
        states.push_back(((g >> (r - 1 - i)) & 1) ? BasisState::One : BasisState::Zero);
    }
    return states;
}

BitVec bits_of(std::size_t value, std::size_t r) {
    BitVec b(r);
    for (std::size_t i = 0; i < r; ++i) b.set(i, (value >> (r - 1 - i)) & 1);
    return b;
}

enum class Branch { Zero, Match, Mismatch };

Branch classify(const DenseMap &got, const DenseMap &want, double tol) {
    if (got.is_zero()) return Branch::Zero;
    return equal_up_to_scalar(got, want, tol) ? Branch::Match : Branch::Mismatch;
}

}  // namespace

ZxDiagram pauli_diagram(const PauliOperator &p) {
    WireChain chain(p.num_qubits());
    for (std::size_t q = 0; q < p.num_qubits(); ++q) {
        if (p.z().get(q)) chain.append(q, VertexKind::Z, true);
        if (p.x().get(q)) chain.append(q, VertexKind::X, true);
    }
    return chain.finish();
}

PauliOperator gauge_recovery(const SubsystemCssCode &code, PauliKind basis, const BitVec &outcomes) {
    if (outcomes.size() != code.r()) throw std::invalid_argument("gauge_recovery: expected one outcome per gauge pair");
    const auto partner = opposite(basis);
    const auto &rows = gauge_rows(code, partner);
    BitVec support(code.n());
    for (auto i : outcomes.support()) support ^= rows.row(i);
    return PauliOperator::from_bits(partner, support);
}

ZxDiagram gauge_correction_diagram(const SubsystemCssCode &code, PauliKind basis, const BitVec &outcomes) {
    const auto &rows = gauge_rows(code, basis);
    auto d = identity_diagram(code.n());
    for (std::size_t i = 0; i < code.r(); ++i) {
        d = compose(d, pauli_projector_diagram(PauliOperator::from_bits(basis, rows.row(i)), outcomes.get(i)));
    }
    return compose(d, pauli_diagram(gauge_recovery(code, basis, outcomes)));
}

namespace {

struct GaugeContext {
    const SubsystemCssCode &code;
    PauliKind basis;
    ZxDiagram open;
    DenseMap fixed;

    GaugeContext(const SubsystemCssCode &c, PauliKind b)
        : code(c),
          basis(b),
          open(subsystem_zx_normal_form(c)),
          fixed(evaluate(zx_normal_form(c.gauge_fixed(b)))) {}

    ZxDiagram prepared(std::size_t g) const {
        std::vector<std::size_t> gauge_inputs;
        for (std::size_t i = 0; i < code.r(); ++i) gauge_inputs.push_back(code.k() + i);
        return plug_inputs(open, gauge_inputs, computational_states(g, code.r()));
    }

    Branch run(std::size_t g, const BitVec &outcomes, double tol) const {
        auto full = compose(prepared(g), gauge_correction_diagram(code, basis, outcomes));
        return classify(evaluate(full), fixed, tol);
    }

    /// Same check with the projectors and recovery applied to a cached state.
    Branch run_dense(const DenseMap &state, const BitVec &outcomes, double tol) const {
        const auto &rows = gauge_rows(code, basis);
        DenseMap m = state;
        for (std::size_t i = 0; i < code.r(); ++i) {
            auto pm = apply_pauli(PauliOperator::from_bits(basis, rows.row(i)), m);
            const double sign = outcomes.get(i) ? -1.0 : 1.0;
            for (std::size_t a = 0; a < m.rows(); ++a) {
                for (std::size_t b = 0; b < m.cols(); ++b) m.at(a, b) += sign * pm.at(a, b);
            }
        }
        return classify(apply_pauli(gauge_recovery(code, basis, outcomes), m), fixed, tol);
    }
};

}  // namespace

GaugeFixResult gauge_fix(const SubsystemCssCode &code, PauliKind basis, const BitVec &outcomes, double tol) {
    if (outcomes.size() != code.r()) {
        throw std::invalid_argument("gauge_fix: expected " + std::to_string(code.r()) + " outcomes, got " +
                                    std::to_string(outcomes.size()));
    }
    GaugeFixResult result;
    result.basis = basis;
    result.outcomes = outcomes;
    result.fixed_code = code.gauge_fixed(basis);
    result.recovery = gauge_recovery(code, basis, outcomes);
    const auto &rows = gauge_rows(code, basis);
    for (std::size_t i = 0; i < code.r(); ++i) {
        result.trace.push_back("measure " + PauliOperator::from_bits(basis, rows.row(i)).str() + " -> " +
                               (outcomes.get(i) ? "1" : "0"));
    }
    result.trace.push_back("recover " + result.recovery.str());

    GaugeContext ctx(code, basis);
    const std::size_t inputs = std::size_t{1} << code.r();
    std::vector<Branch> branches(inputs);
    parallel_for(inputs, [&](std::size_t g) { branches[g] = ctx.run(g, outcomes, tol); });
    result.verified = true;
    for (std::size_t g = 0; g < inputs; ++g) {
        if (branches[g] == Branch::Mismatch) result.verified = false;
        if (branches[g] == Branch::Match) result.nonzero_inputs.push_back(g);
    }
    return result;
}

GaugeGridReport gauge_fix_grid(const SubsystemCssCode &code, PauliKind basis, double tol) {
    GaugeGridReport report;
    report.basis = basis;
    GaugeContext ctx(code, basis);
    const std::size_t count = std::size_t{1} << code.r();
    std::vector<DenseMap> states(count);
    parallel_for(count, [&](std::size_t g) { states[g] = evaluate(ctx.prepared(g)); });
    std::vector<Branch> branches(count * count);
    parallel_for(count * count, [&](std::size_t idx) {
        branches[idx] = ctx.run_dense(states[idx / count], bits_of(idx % count, code.r()), tol);
    });
    report.nonzero_per_input.assign(count, 0);
    for (std::size_t idx = 0; idx < branches.size(); ++idx) {
        ++report.checked;
        auto g = idx / count;
        if (branches[idx] == Branch::Zero) continue;
        ++report.nonzero;
        ++report.nonzero_per_input[g];
        if (branches[idx] == Branch::Mismatch) {
            report.all_verified = false;
            report.failures.push_back("gauge input " + bits_of(g, code.r()).to_string() + ", outcomes " +
                                      bits_of(idx % count, code.r()).to_string());
        }
    }
    for (std::size_t g = 0; g < count; ++g) {
        if (report.nonzero_per_input[g] == 0) {
            report.all_verified = false;
            report.failures.push_back("gauge input " + bits_of(g, code.r()).to_string() + " has no nonzero outcome");
        }
    }
    return report;
}

// Switching -----------------------------------------------------------------

namespace {

BinaryMatrix rows_range(const BinaryMatrix &m, std::size_t begin, std::size_t end) {
    std::vector<std::size_t> idx;
    for (std::size_t i = begin; i < end; ++i) idx.push_back(i);
    return m.select_rows(idx);
}

/// Stabilizer code with X gauges [0, x_fixed) and Z gauges [z_from, r) promoted.
CssCode partially_fixed(const SubsystemCssCode &sub, std::size_t x_fixed, std::size_t z_from, std::string name) {
    const auto r = sub.r();
    return new_css(sub.n(), vstack(sub.x_stabilizers(), rows_range(sub.x_gauges(), 0, x_fixed)),
                   vstack(sub.z_stabilizers(), rows_range(sub.z_gauges(), z_from, r)),
                   LogicalSeed{sub.x_logicals(), sub.z_logicals()}, std::move(name));
}

/// E_after up to scalar for both outcomes of measuring `measured` on E_before.
bool verify_switch_step(const CssCode &before, const CssCode &after, const PauliOperator &measured,
                        const PauliOperator &recovery, double tol) {
    const auto start = zx_normal_form(before);
    const auto want = evaluate(zx_normal_form(after));
    for (bool k : {false, true}) {
        auto d = compose(start, pauli_projector_diagram(measured, k));
        if (k) d = compose(d, pauli_diagram(recovery));
        if (classify(evaluate(d), want, tol) != Branch::Match) return false;
    }
    return true;
}

bool same_stabilizers(const CssCode &a, const CssCode &b) {
    return row_space_equal(a.x_stabilizers(), b.x_stabilizers()) &&
           row_space_equal(a.z_stabilizers(), b.z_stabilizers());
}

}  // namespace

SwitchResult switch_code(std::string_view from, std::string_view to, double tol) {
    auto known = [](std::string_view s) { return s == "qrm15" || s == "ext_steane"; };
    if (!known(from) || !known(to)) throw std::invalid_argument("switch: codes must be qrm15 or ext_steane");
    SwitchResult result;
    result.from = from;
    result.to = to;
    const auto sub = catalog_subsystem("sub15");
    const auto r = sub.r();
    const auto target = catalog_css(to);
    result.verified = true;
    if (from == to) {
        result.final_code = catalog_css(from);
        result.reached_target = true;
        return result;
    }
    const bool to_x = to == "ext_steane";
    const auto measured_kind = to_x ? PauliKind::X : PauliKind::Z;
    const auto &measured_rows = gauge_rows(sub, measured_kind);
    const auto &partner_rows = gauge_rows(sub, opposite(measured_kind));

    std::vector<CssCode> codes;
    for (std::size_t step = 0; step <= r; ++step) {
        auto name = step == 0 ? std::string(from) : std::string(from) + "_step" + std::to_string(step);
        if (to_x) {
            codes.push_back(partially_fixed(sub, step, step, name));
        } else {
            // X gauges [step, r) remain stabilizers; Z gauges [0, step) have been measured.
            codes.push_back(new_css(sub.n(), vstack(sub.x_stabilizers(), rows_range(sub.x_gauges(), step, r)),
                                    vstack(sub.z_stabilizers(), rows_range(sub.z_gauges(), 0, step)),
                                    LogicalSeed{sub.x_logicals(), sub.z_logicals()}, name));
        }
    }
    if (!same_stabilizers(codes.front(), catalog_css(from))) {
        throw VerificationError("switch: sub15 gauge fixing does not reproduce " + std::string(from));
    }
    for (std::size_t i = 0; i < r; ++i) {
        SwitchStep step;
        step.measured = PauliOperator::from_bits(measured_kind, measured_rows.row(i));
        step.recovery = PauliOperator::from_bits(opposite(measured_kind), partner_rows.row(i));
        step.removed = step.recovery;
        step.before = codes[i];
        step.after = codes[i + 1];
        step.verified = verify_switch_step(step.before, step.after, step.measured, step.recovery, tol);
        result.verified = result.verified && step.verified;
        result.steps.push_back(std::move(step));
    }
    result.final_code = codes.back();
    result.final_code.set_name(std::string(to));
    result.reached_target = same_stabilizers(result.final_code, target);
    return result;
}

// Factorization -------------------------------------------------------------

ZxDiagram eta_state_diagram(const CssCode &small) { return inputs_to_outputs(zx_normal_form(small)); }

namespace {

bool check_partition(const CssCode &ext, const CssCode &small, const std::vector<std::size_t> &code_part,
                     const std::vector<std::size_t> &eta_part, const DenseMap &target, double tol) {
    std::vector<std::size_t> perm = code_part;
    perm.insert(perm.end(), eta_part.begin(), eta_part.end());
    auto rhs = compose(tensor(zx_normal_form(small), eta_state_diagram(small)), permutation_diagram(perm));
    (void)ext;
    return equal_up_to_scalar(target, evaluate(rhs), tol);
}

}  // namespace

EtaResult eta_factorization(const CssCode &ext, const CssCode &small, double tol) {
    if (small.k() != 1 || ext.k() != 1 || ext.n() != 2 * small.n() + 1) {
        throw std::invalid_argument("eta_factorization: expected codes of sizes 2m+1 and m with one logical qubit");
    }
    EtaResult result;
    result.eta = evaluate(eta_state_diagram(small));
    result.eta_nonzero = result.eta.nonzero_count();
    const double top = result.eta.max_abs();
    result.equal_magnitudes = std::all_of(result.eta.data().begin(), result.eta.data().end(), [&](const Amplitude &a) {
        return std::abs(a) == 0.0 || std::abs(std::abs(a) - top) <= tol * top;
    });

    const auto target = evaluate(zx_normal_form(ext));
    const auto n = ext.n();
    const auto m = small.n();
    auto try_split = [&](const std::vector<std::size_t> &code_part) {
        std::vector<std::size_t> eta_part;
        for (std::size_t q = 0; q < n; ++q) {
            if (!std::binary_search(code_part.begin(), code_part.end(), q)) eta_part.push_back(q);
        }
        if (!check_partition(ext, small, code_part, eta_part, target, tol)) return false;
        result.code_part = code_part;
        result.eta_part = eta_part;
        result.verified = true;
        return true;
    };

    std::vector<std::size_t> idx(m);
    for (std::size_t i = 0; i < m; ++i) idx[i] = i;
    if (try_split(idx)) return result;
    while (true) {
        std::size_t i = m;
        while (i > 0 && idx[i - 1] == n - m + i - 1) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < m; ++j) idx[j] = idx[j - 1] + 1;
        if (try_split(idx)) return result;
    }
    return result;
}

}  // namespace csszx
