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

#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "csszx/pauli.hpp"

namespace csszx {

using VertexId = int;
using EdgeId = int;

enum class VertexKind : std::uint8_t { Boundary, Z, X };

/// Color of the opposite spider; boundaries map to themselves.
VertexKind swap_color(VertexKind kind);
char to_char(VertexKind kind);

/// A spider (or boundary port). Phases are multiples of pi; `phase` is k in k*pi.
struct Vertex {
    VertexKind kind = VertexKind::Z;
    bool phase = false;
};

struct Edge {
    VertexId a = 0;
    VertexId b = 0;
    bool is_self_loop() const { return a == b; }
    VertexId other(VertexId v) const { return a == v ? b : a; }
};

class DiagramError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Open graph of Z/X spiders with phases in {0, pi}.
///
/// Boundary ports are vertices of kind Boundary with exactly one incident edge;
/// `inputs()` and `outputs()` list them in wire order. Parallel edges and
/// self-loops between spiders are legal. Vertex and edge ids are never reused,
/// so ids handed out by one diagram remain meaningful in rewrites of it: the
/// next spider created gets `next_vertex_id()`.
class ZxDiagram {
   public:
    ZxDiagram() = default;

    VertexId add_spider(VertexKind kind, bool phase = false);
    /// Adds an input (resp. output) port at the end of the boundary list.
    VertexId add_input();
    VertexId add_output();
    EdgeId add_edge(VertexId a, VertexId b);

    void remove_edge(EdgeId e);
    /// Removes a spider together with its incident edges. Boundaries cannot be removed.
    void remove_spider(VertexId v);
    void set_phase(VertexId v, bool phase);
    /// Removes a boundary port and its edge from the diagram and the port lists.
    void remove_boundary(VertexId v);
    /// Reorders the ports; together the lists must name every boundary vertex once.
    void set_boundary_order(std::vector<VertexId> inputs, std::vector<VertexId> outputs);

    bool has_vertex(VertexId v) const { return vertices_.count(v) != 0; }
    bool has_edge(EdgeId e) const { return edges_.count(e) != 0; }
    const Vertex &vertex(VertexId v) const;
    const Edge &edge(EdgeId e) const;
    const std::map<VertexId, Vertex> &vertices() const { return vertices_; }
    const std::map<EdgeId, Edge> &edges() const { return edges_; }
    const std::vector<VertexId> &inputs() const { return inputs_; }
    const std::vector<VertexId> &outputs() const { return outputs_; }

    bool is_spider(VertexId v) const;
    bool is_boundary(VertexId v) const;
    /// Incident edge ids in increasing order; a self-loop is listed once.
    std::vector<EdgeId> incident_edges(VertexId v) const;
    /// Number of edge endpoints at v (self-loops count twice).
    std::size_t degree(VertexId v) const;
    /// Edges joining u and v (u != v).
    std::vector<EdgeId> edges_between(VertexId u, VertexId v) const;
    /// Distinct neighbours in increasing id order (excluding v itself).
    std::vector<VertexId> neighbors(VertexId v) const;
    std::size_t num_spiders() const;
    std::size_t count_spiders(VertexKind kind) const;

    VertexId next_vertex_id() const { return next_vertex_; }
    EdgeId next_edge_id() const { return next_edge_; }

    /// Informational count of dropped sqrt(2) factors; rewrites do not maintain it.
    int scalar_exponent() const { return scalar_exponent_; }
    void add_scalar_exponent(int delta) { scalar_exponent_ += delta; }

    /// Throws DiagramError if a structural invariant is violated.
    void validate() const;

    /// 16-hex-digit FNV-1a digest of the canonical serialization.
    std::string digest() const;

   private:
    std::map<VertexId, Vertex> vertices_;
    std::map<EdgeId, Edge> edges_;
    std::vector<VertexId> inputs_;
    std::vector<VertexId> outputs_;
    std::multimap<VertexId, EdgeId> incidence_;
    int scalar_exponent_ = 0;
    VertexId next_vertex_ = 0;
    EdgeId next_edge_ = 0;

    VertexId add_boundary();
};

/// `first` followed by `second`: outputs of `first` plugged into inputs of `second`.
ZxDiagram compose(const ZxDiagram &first, const ZxDiagram &second);
/// Disjoint union; inputs and outputs of `a` come first.
ZxDiagram tensor(const ZxDiagram &a, const ZxDiagram &b);

/// n bare wires.
ZxDiagram identity_diagram(std::size_t n);
/// Wire permutation: input i is routed to output perm[i].
ZxDiagram permutation_diagram(const std::vector<std::size_t> &perm);
/// Single spider with the given numbers of input and output legs.
ZxDiagram spider_diagram(VertexKind kind, bool phase, std::size_t num_inputs, std::size_t num_outputs);

/// Single-qubit basis states used for capping wires.
enum class BasisState { Zero, One, Plus, Minus };
/// The state as a 0 -> 1 diagram.
ZxDiagram basis_state_diagram(BasisState s);
/// Plugs `states[j]` into input `inputs[j]`; remaining inputs keep their order.
ZxDiagram plug_inputs(const ZxDiagram &d, const std::vector<std::size_t> &inputs,
                      const std::vector<BasisState> &states);

/// The measurement projector (I + (-1)^k P) / 2 (up to scalar) on n wires for a
/// pure X- or Z-type P: one degree-3 spider per support qubit, all joined to a
/// hub of the opposite color carrying phase k*pi. Throws DiagramError for mixed P.
ZxDiagram pauli_projector_diagram(const PauliOperator &p, bool k);

/// `d` with every input bent into an output placed before the existing outputs.
ZxDiagram inputs_to_outputs(const ZxDiagram &d);

}  // namespace csszx
