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

#include "csszx/rewrite.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "csszx/sem.hpp"

namespace csszx {

namespace {

constexpr std::array<std::pair<RuleName, std::string_view>, 9> kRuleNames = {{
    {RuleName::Fuse, "fuse"},
    {RuleName::Unfuse, "unfuse"},
    {RuleName::RemoveIdentity, "remove_identity"},
    {RuleName::InsertIdentity, "insert_identity"},
    {RuleName::Bialgebra, "bialgebra"},
    {RuleName::PiCopy, "pi_copy"},
    {RuleName::StateCopy, "state_copy"},
    {RuleName::Hopf, "hopf"},
    {RuleName::RemoveSelfLoop, "remove_self_loop"},
}};

void require(bool ok, std::string_view rule, const std::string &why) {
    if (!ok) throw RewriteError(std::string(rule) + ": " + why);
}

bool has_self_loop(const ZxDiagram &d, VertexId v) {
    for (auto e : d.incident_edges(v)) {
        if (d.edge(e).is_self_loop()) return true;
    }
    return false;
}

bool opposite_spiders(const ZxDiagram &d, VertexId u, VertexId v) {
    return d.is_spider(u) && d.is_spider(v) && d.vertex(u).kind == swap_color(d.vertex(v).kind);
}

/// Far endpoints of v's edges other than `skip`, one entry per edge.
std::vector<VertexId> other_legs(const ZxDiagram &d, VertexId v, EdgeId skip) {
    std::vector<VertexId> out;
    for (auto e : d.incident_edges(v)) {
        if (e != skip) out.push_back(d.edge(e).other(v));
    }
    return out;
}

const std::vector<VertexId> &need_vertices(const RewriteSite &site, std::size_t count, std::string_view rule) {
    require(site.vertices.size() == count, rule, "expected " + std::to_string(count) + " site vertices");
    return site.vertices;
}

}  // namespace

std::string_view rule_name(RuleName rule) {
    for (const auto &[r, name] : kRuleNames) {
        if (r == rule) return name;
    }
    return "unknown";
}

std::optional<RuleName> parse_rule_name(std::string_view text) {
    for (const auto &[r, name] : kRuleNames) {
        if (name == text) return r;
    }
    return std::nullopt;
}

std::vector<RuleName> all_rules() {
    std::vector<RuleName> out;
    for (const auto &[r, name] : kRuleNames) out.push_back(r);
    return out;
}

ZxDiagram fuse(const ZxDiagram &d, VertexId keep, VertexId absorbed) {
    constexpr std::string_view rule = "fuse";
    require(keep != absorbed, rule, "spiders must differ");
    require(d.is_spider(keep) && d.is_spider(absorbed), rule, "both vertices must be spiders");
    require(d.vertex(keep).kind == d.vertex(absorbed).kind, rule, "spiders must share a color");
    auto joining = d.edges_between(keep, absorbed);
    require(!joining.empty(), rule, "spiders are not adjacent");

    ZxDiagram out = d;
    for (auto e : d.incident_edges(absorbed)) {
        if (e == joining.front()) continue;
        auto w = d.edge(e).other(absorbed);
        out.add_edge(keep, w == absorbed ? keep : w);
    }
    out.set_phase(keep, d.vertex(keep).phase != d.vertex(absorbed).phase);
    out.remove_spider(absorbed);
    return out;
}

ZxDiagram unfuse(const ZxDiagram &d, VertexId v, const std::vector<EdgeId> &legs, bool moved_phase) {
    constexpr std::string_view rule = "unfuse";
    require(d.is_spider(v), rule, "vertex must be a spider");
    auto incident = d.incident_edges(v);
    std::set<EdgeId> moved(legs.begin(), legs.end());
    require(moved.size() == legs.size(), rule, "legs listed twice");
    for (auto e : moved) {
        require(std::binary_search(incident.begin(), incident.end(), e), rule,
                "edge " + std::to_string(e) + " is not a leg of the spider");
    }

    ZxDiagram out = d;
    const auto &vert = d.vertex(v);
    auto w = out.add_spider(vert.kind, moved_phase);
    out.add_edge(v, w);
    out.set_phase(v, vert.phase != moved_phase);
    for (auto e : legs) {
        const auto &edge = d.edge(e);
        auto far = edge.other(v);
        out.add_edge(w, far == v ? w : far);
        out.remove_edge(e);
    }
    return out;
}

ZxDiagram remove_identity(const ZxDiagram &d, VertexId v) {
    constexpr std::string_view rule = "remove_identity";
    require(d.is_spider(v), rule, "vertex must be a spider");
    require(!d.vertex(v).phase, rule, "spider must be phase-free");
    require(d.degree(v) == 2 && !has_self_loop(d, v), rule, "spider must have two distinct legs");
    auto ends = other_legs(d, v, -1);
    ZxDiagram out = d;
    out.remove_spider(v);
    out.add_edge(ends[0], ends[1]);
    return out;
}

ZxDiagram insert_identity(const ZxDiagram &d, EdgeId e, VertexKind kind) {
    constexpr std::string_view rule = "insert_identity";
    require(d.has_edge(e), rule, "no such edge");
    require(kind != VertexKind::Boundary, rule, "inserted vertex must be a spider");
    auto edge = d.edge(e);
    ZxDiagram out = d;
    out.remove_edge(e);
    auto s = out.add_spider(kind, false);
    out.add_edge(edge.a, s);
    out.add_edge(s, edge.b);
    return out;
}

ZxDiagram bialgebra(const ZxDiagram &d, VertexId u, VertexId v) {
    constexpr std::string_view rule = "bialgebra";
    require(opposite_spiders(d, u, v), rule, "vertices must be opposite-colored spiders");
    require(!d.vertex(u).phase && !d.vertex(v).phase, rule, "spiders must be phase-free");
    require(!has_self_loop(d, u) && !has_self_loop(d, v), rule, "spiders must not carry self-loops");
    auto joining = d.edges_between(u, v);
    require(joining.size() == 1, rule, "spiders must be joined by exactly one edge");
    auto u_legs = other_legs(d, u, joining.front());
    auto v_legs = other_legs(d, v, joining.front());
    require(!u_legs.empty() && !v_legs.empty(), rule, "both spiders need a further leg");

    ZxDiagram out = d;
    auto u_kind = d.vertex(u).kind;
    auto v_kind = d.vertex(v).kind;
    out.remove_spider(u);
    out.remove_spider(v);
    std::vector<VertexId> from_u, from_v;
    for (auto far : u_legs) {
        auto s = out.add_spider(v_kind, false);
        out.add_edge(s, far);
        from_u.push_back(s);
    }
    for (auto far : v_legs) {
        auto s = out.add_spider(u_kind, false);
        out.add_edge(s, far);
        from_v.push_back(s);
    }
    for (auto a : from_u) {
        for (auto b : from_v) out.add_edge(a, b);
    }
    return out;
}

ZxDiagram pi_copy(const ZxDiagram &d, VertexId pi_spider, VertexId target) {
    constexpr std::string_view rule = "pi_copy";
    require(opposite_spiders(d, pi_spider, target), rule, "vertices must be opposite-colored spiders");
    require(d.vertex(pi_spider).phase, rule, "first spider must carry phase pi");
    require(d.degree(pi_spider) == 2 && !has_self_loop(d, pi_spider), rule, "pi spider must have two distinct legs");
    require(!has_self_loop(d, target), rule, "target must not carry self-loops");
    auto joining = d.edges_between(pi_spider, target);
    require(joining.size() == 1, rule, "spiders must be joined by exactly one edge");
    auto far = other_legs(d, pi_spider, joining.front()).front();

    ZxDiagram out = d;
    auto pi_kind = d.vertex(pi_spider).kind;
    auto legs = d.incident_edges(target);
    out.remove_spider(pi_spider);
    for (auto e : legs) {
        if (e == joining.front()) continue;
        auto y = d.edge(e).other(target);
        out.remove_edge(e);
        auto s = out.add_spider(pi_kind, true);
        out.add_edge(target, s);
        out.add_edge(s, y);
    }
    out.add_edge(far, target);
    return out;
}

ZxDiagram state_copy(const ZxDiagram &d, VertexId state, VertexId target) {
    constexpr std::string_view rule = "state_copy";
    require(opposite_spiders(d, state, target), rule, "vertices must be opposite-colored spiders");
    require(d.degree(state) == 1, rule, "state spider must have one leg");
    require(!has_self_loop(d, target), rule, "target must not carry self-loops");
    auto joining = d.edges_between(state, target);
    require(joining.size() == 1, rule, "state must attach to the target");

    ZxDiagram out = d;
    const auto &st = d.vertex(state);
    auto legs = other_legs(d, target, joining.front());
    out.remove_spider(state);
    out.remove_spider(target);
    for (auto y : legs) {
        auto s = out.add_spider(st.kind, st.phase);
        out.add_edge(s, y);
    }
    return out;
}

ZxDiagram hopf(const ZxDiagram &d, VertexId u, VertexId v) {
    constexpr std::string_view rule = "hopf";
    require(opposite_spiders(d, u, v), rule, "vertices must be opposite-colored spiders");
    auto joining = d.edges_between(u, v);
    require(joining.size() >= 2, rule, "spiders must share at least two edges");
    ZxDiagram out = d;
    out.remove_edge(joining[0]);
    out.remove_edge(joining[1]);
    return out;
}

ZxDiagram remove_self_loop(const ZxDiagram &d, VertexId v) {
    constexpr std::string_view rule = "remove_self_loop";
    require(d.is_spider(v), rule, "vertex must be a spider");
    for (auto e : d.incident_edges(v)) {
        if (d.edge(e).is_self_loop()) {
            ZxDiagram out = d;
            out.remove_edge(e);
            return out;
        }
    }
    throw RewriteError("remove_self_loop: spider has no self-loop");
}

ZxDiagram apply_rule(const ZxDiagram &d, RuleName rule, const RewriteSite &site) {
    auto name = rule_name(rule);
    switch (rule) {
        case RuleName::Fuse: {
            const auto &v = need_vertices(site, 2, name);
            return fuse(d, v[0], v[1]);
        }
        case RuleName::Unfuse:
            return unfuse(d, need_vertices(site, 1, name)[0], site.edges, site.phase);
        case RuleName::RemoveIdentity:
            return remove_identity(d, need_vertices(site, 1, name)[0]);
        case RuleName::InsertIdentity:
            require(site.edges.size() == 1, name, "expected one site edge");
            return insert_identity(d, site.edges[0], site.kind);
        case RuleName::Bialgebra: {
            const auto &v = need_vertices(site, 2, name);
            return bialgebra(d, v[0], v[1]);
        }
        case RuleName::PiCopy: {
            const auto &v = need_vertices(site, 2, name);
            return pi_copy(d, v[0], v[1]);
        }
        case RuleName::StateCopy: {
            const auto &v = need_vertices(site, 2, name);
            return state_copy(d, v[0], v[1]);
        }
        case RuleName::Hopf: {
            const auto &v = need_vertices(site, 2, name);
            return hopf(d, v[0], v[1]);
        }
        case RuleName::RemoveSelfLoop:
            return remove_self_loop(d, need_vertices(site, 1, name)[0]);
    }
    throw RewriteError("unknown rule");
}

Derivation::Derivation(ZxDiagram start, bool checked, double tol)
    : initial_(start), current_(std::move(start)), checked_(checked), tol_(tol) {}

const ZxDiagram &Derivation::apply(RuleName rule, const RewriteSite &site) {
    auto next = apply_rule(current_, rule, site);
    if (checked_ && !equal_up_to_scalar(evaluate(current_), evaluate(next), tol_)) {
        throw RewriteError(std::string(rule_name(rule)) + ": semantics changed");
    }
    steps_.push_back(RewriteStep{rule, site, current_.digest(), next.digest()});
    current_ = std::move(next);
    return current_;
}

bool replay(const ZxDiagram &start, const std::vector<RewriteStep> &steps) {
    ZxDiagram d = start;
    for (const auto &step : steps) {
        if (d.digest() != step.before) return false;
        try {
            d = apply_rule(d, step.rule, step.site);
        } catch (const DiagramError &) {
            return false;
        }
        if (d.digest() != step.after) return false;
    }
    return true;
}

}  // namespace csszx
