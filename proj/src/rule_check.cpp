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

#include <algorithm>

#include "csszx/rewrite.hpp"
#include "csszx/sem.hpp"

namespace csszx {

namespace {

class Builder {
   public:
    Builder(std::mt19937_64 &rng, std::size_t max_boundary) : rng_(rng), max_boundary_(max_boundary) {
        const auto env = uniform(0, 2);
        for (std::size_t i = 0; i < env; ++i) {
            auto v = d.add_spider(color(), coin());
            boundary(v);
            env_.push_back(v);
        }
        if (env_.size() == 2 && coin()) d.add_edge(env_[0], env_[1]);
    }

    std::size_t uniform(std::size_t lo, std::size_t hi) {
        return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
    }
    bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }
    VertexKind color() { return coin() ? VertexKind::Z : VertexKind::X; }

    VertexId spider(VertexKind kind, bool phase) { return d.add_spider(kind, phase); }

    /// Connects v to a fresh boundary or to a context spider.
    EdgeId leg(VertexId v) {
        if (boundaries_ < max_boundary_ && (env_.empty() || coin(0.6))) return boundary(v);
        return d.add_edge(v, env_[uniform(0, env_.size() - 1)]);
    }
    void legs(VertexId v, std::size_t count) {
        for (std::size_t i = 0; i < count; ++i) leg(v);
    }

    ZxDiagram d;

   private:
    EdgeId boundary(VertexId v) {
        ++boundaries_;
        return d.add_edge(coin() ? d.add_input() : d.add_output(), v);
    }

    std::mt19937_64 &rng_;
    std::size_t max_boundary_;
    std::size_t boundaries_ = 0;
    std::vector<VertexId> env_;
};

}  // namespace

RuleInstance random_rule_instance(RuleName rule, std::mt19937_64 &rng, std::size_t max_boundary) {
    Builder b(rng, max_boundary);
    RewriteSite site;
    switch (rule) {
        case RuleName::Fuse: {
            auto kind = b.color();
            auto u = b.spider(kind, b.coin());
            auto v = b.spider(kind, b.coin());
            const auto joins = b.uniform(1, 2);
            for (std::size_t i = 0; i < joins; ++i) b.d.add_edge(u, v);
            if (b.coin(0.2)) b.d.add_edge(u, u);
            b.legs(u, b.uniform(0, 3));
            b.legs(v, b.uniform(0, 3));
            site.vertices = {u, v};
            break;
        }
        case RuleName::Unfuse: {
            auto v = b.spider(b.color(), b.coin());
            b.legs(v, b.uniform(1, 5));
            if (b.coin(0.3)) b.d.add_edge(v, v);
            for (auto e : b.d.incident_edges(v)) {
                if (b.coin()) site.edges.push_back(e);
            }
            site.vertices = {v};
            site.phase = b.coin();
            break;
        }
        case RuleName::RemoveIdentity: {
            auto v = b.spider(b.color(), false);
            b.legs(v, 2);
            site.vertices = {v};
            break;
        }
        case RuleName::InsertIdentity: {
            auto u = b.spider(b.color(), b.coin());
            auto v = b.spider(b.color(), b.coin());
            b.d.add_edge(u, v);
            if (b.coin(0.2)) b.d.add_edge(v, v);
            b.legs(u, b.uniform(0, 3));
            b.legs(v, b.uniform(0, 3));
            std::vector<EdgeId> all;
            for (const auto &[e, edge] : b.d.edges()) all.push_back(e);
            site.edges = {all[b.uniform(0, all.size() - 1)]};
            site.kind = b.color();
            break;
        }
        case RuleName::Bialgebra: {
            auto kind = b.color();
            auto u = b.spider(kind, false);
            auto v = b.spider(swap_color(kind), false);
            b.d.add_edge(u, v);
            b.legs(u, b.uniform(1, 3));
            b.legs(v, b.uniform(1, 3));
            site.vertices = {u, v};
            break;
        }
        case RuleName::PiCopy: {
            auto kind = b.color();
            auto pi = b.spider(kind, true);
            auto target = b.spider(swap_color(kind), b.coin());
            b.d.add_edge(pi, target);
            b.leg(pi);
            b.legs(target, b.uniform(0, 3));
            site.vertices = {pi, target};
            break;
        }
        case RuleName::StateCopy: {
            auto kind = b.color();
            auto state = b.spider(kind, b.coin());
            auto target = b.spider(swap_color(kind), b.coin());
            b.d.add_edge(state, target);
            b.legs(target, b.uniform(0, 3));
            site.vertices = {state, target};
            break;
        }
        case RuleName::Hopf: {
            auto kind = b.color();
            auto u = b.spider(kind, b.coin());
            auto v = b.spider(swap_color(kind), b.coin());
            const auto joins = b.uniform(2, 3);
            for (std::size_t i = 0; i < joins; ++i) b.d.add_edge(u, v);
            b.legs(u, b.uniform(0, 2));
            b.legs(v, b.uniform(0, 2));
            site.vertices = {u, v};
            break;
        }
        case RuleName::RemoveSelfLoop: {
            auto v = b.spider(b.color(), b.coin());
            const auto loops = b.uniform(1, 2);
            for (std::size_t i = 0; i < loops; ++i) b.d.add_edge(v, v);
            b.legs(v, b.uniform(0, 3));
            site.vertices = {v};
            break;
        }
    }
    return RuleInstance{std::move(b.d), std::move(site)};
}

std::vector<RuleCheck> check_rules(std::size_t samples, std::uint64_t seed, double tol) {
    std::vector<RuleCheck> out;
    std::mt19937_64 rng(seed);
    for (auto rule : all_rules()) {
        RuleCheck check;
        check.rule = rule;
        for (std::size_t i = 0; i < samples; ++i) {
            auto instance = random_rule_instance(rule, rng);
            ++check.samples;
            try {
                auto before = evaluate(instance.diagram);
                auto after = evaluate(apply_rule(instance.diagram, rule, instance.site));
                if (!before.is_zero()) ++check.nonzero;
                if (equal_up_to_scalar(before, after, tol)) {
                    ++check.passed;
                } else {
                    check.failures.push_back("sample " + std::to_string(i) + ": semantics changed");
                }
            } catch (const std::exception &e) {
                check.failures.push_back("sample " + std::to_string(i) + ": " + e.what());
            }
        }
        out.push_back(std::move(check));
    }
    return out;
}

}  // namespace csszx
