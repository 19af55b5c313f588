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

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "csszx/zx.hpp"

namespace csszx {

enum class RuleName : std::uint8_t {
    Fuse,
    Unfuse,
    RemoveIdentity,
    InsertIdentity,
    Bialgebra,
    PiCopy,
    StateCopy,
    Hopf,
    RemoveSelfLoop,
};

std::string_view rule_name(RuleName rule);
std::optional<RuleName> parse_rule_name(std::string_view text);
std::vector<RuleName> all_rules();

/// Raised when a rule's left-hand side does not match at the given site.
class RewriteError : public DiagramError {
   public:
    using DiagramError::DiagramError;
};

/// Where a rule applies.
///
/// vertices: Fuse {keep, absorbed}; Unfuse {v}; RemoveIdentity {v};
/// Bialgebra {u, v}; PiCopy {pi spider, target}; StateCopy {state, target};
/// Hopf {u, v}; RemoveSelfLoop {v}.
/// edges: Unfuse moves these legs to the new spider; InsertIdentity splits edges[0].
/// kind: color of the spider created by InsertIdentity.
/// phase: phase moved to the new spider by Unfuse.
struct RewriteSite {
    std::vector<VertexId> vertices;
    std::vector<EdgeId> edges;
    VertexKind kind = VertexKind::Z;
    bool phase = false;
};

/// Merges two adjacent same-colored spiders; one connecting edge is consumed and
/// any further connecting edges become self-loops on `keep`.
ZxDiagram fuse(const ZxDiagram &d, VertexId keep, VertexId absorbed);

/// Splits `v`: a new spider of the same color (id d.next_vertex_id()) is joined
/// to v by one edge and receives the listed legs and `moved_phase`.
ZxDiagram unfuse(const ZxDiagram &d, VertexId v, const std::vector<EdgeId> &legs, bool moved_phase = false);

/// Deletes a phase-free spider of degree two, joining its neighbours.
ZxDiagram remove_identity(const ZxDiagram &d, VertexId v);
/// Places a phase-free degree-two spider of color `kind` on edge `e`.
ZxDiagram insert_identity(const ZxDiagram &d, EdgeId e, VertexKind kind);

/// Strong complementarity: a phase-free Z/X pair joined by a single edge, each
/// with at least one further leg and no self-loops, becomes a complete bipartite
/// graph of opposite-colored spiders.
ZxDiagram bialgebra(const ZxDiagram &d, VertexId u, VertexId v);

/// Pushes a degree-two pi spider through an opposite-colored spider: the pi is
/// copied onto every other leg of the target.
ZxDiagram pi_copy(const ZxDiagram &d, VertexId pi_spider, VertexId target);

/// A one-legged k*pi spider attached to an opposite-colored spider is copied to
/// every other leg of the target, which disappears.
ZxDiagram state_copy(const ZxDiagram &d, VertexId state, VertexId target);

/// Removes two parallel edges between opposite-colored spiders.
ZxDiagram hopf(const ZxDiagram &d, VertexId u, VertexId v);

/// Removes one self-loop of `v`.
ZxDiagram remove_self_loop(const ZxDiagram &d, VertexId v);

/// Dispatches on `rule`. Throws RewriteError on mismatch.
ZxDiagram apply_rule(const ZxDiagram &d, RuleName rule, const RewriteSite &site);

struct RewriteStep {
    RuleName rule = RuleName::Fuse;
    RewriteSite site;
    std::string before;
    std::string after;
};

/// A diagram together with the rewrites applied to it.
///
/// In checked mode every step is compared with the dense semantics of its
/// predecessor and a RewriteError is thrown on disagreement.
class Derivation {
   public:
    explicit Derivation(ZxDiagram start, bool checked = false, double tol = 1e-9);

    const ZxDiagram &initial() const { return initial_; }
    const ZxDiagram &current() const { return current_; }
    const std::vector<RewriteStep> &steps() const { return steps_; }
    bool checked() const { return checked_; }

    const ZxDiagram &apply(RuleName rule, const RewriteSite &site);

   private:
    ZxDiagram initial_;
    ZxDiagram current_;
    std::vector<RewriteStep> steps_;
    bool checked_;
    double tol_;
};

/// Re-applies `steps` to `start` and returns true when every digest matches.
bool replay(const ZxDiagram &start, const std::vector<RewriteStep> &steps);

/// A randomly generated diagram together with a site where `rule` applies.
struct RuleInstance {
    ZxDiagram diagram;
    RewriteSite site;
};

/// Random left-hand side of `rule` (random colors and phases) embedded in a
/// small random context with at most `max_boundary` boundary wires.
RuleInstance random_rule_instance(RuleName rule, std::mt19937_64 &rng, std::size_t max_boundary = 10);

struct RuleCheck {
    RuleName rule = RuleName::Fuse;
    std::size_t samples = 0;
    std::size_t passed = 0;
    /// Samples whose semantics is not the zero map.
    std::size_t nonzero = 0;
    std::vector<std::string> failures;
};

/// `samples` random instances per rule, each compared densely before and after.
std::vector<RuleCheck> check_rules(std::size_t samples, std::uint64_t seed, double tol = 1e-9);

}  // namespace csszx
