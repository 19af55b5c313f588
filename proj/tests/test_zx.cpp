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

#include <gtest/gtest.h>

#include "csszx/nf.hpp"
#include "csszx/rewrite.hpp"
#include "csszx/sem.hpp"
#include "csszx/zx.hpp"

namespace csszx {
namespace {

DenseMap projector(const PauliOperator &p, bool k) {
    auto id = DenseMap::identity(p.num_qubits());
    auto pm = DenseMap::from_pauli(p);
    DenseMap out(p.num_qubits(), p.num_qubits());
    const double sign = k ? -1.0 : 1.0;
    for (std::size_t r = 0; r < out.rows(); ++r) {
        for (std::size_t c = 0; c < out.cols(); ++c) out.at(r, c) = (id.at(r, c) + sign * pm.at(r, c)) / 2.0;
    }
    return out;
}

TEST(Diagram, BoundaryBookkeeping) {
    ZxDiagram d;
    auto in = d.add_input();
    auto out = d.add_output();
    auto s = d.add_spider(VertexKind::Z, true);
    d.add_edge(in, s);
    d.add_edge(s, out);
    d.add_edge(s, s);
    EXPECT_EQ(d.degree(s), 4u);
    EXPECT_EQ(d.incident_edges(s).size(), 3u);
    EXPECT_TRUE(d.is_boundary(in));
    EXPECT_TRUE(d.is_spider(s));
    EXPECT_EQ(d.num_spiders(), 1u);
    EXPECT_NO_THROW(d.validate());
    EXPECT_EQ(d.next_vertex_id(), 3);
}

TEST(Diagram, ValidateRejectsDanglingBoundary) {
    ZxDiagram d;
    d.add_input();
    EXPECT_THROW(d.validate(), DiagramError);
}

TEST(Diagram, ValidateRejectsBoundaryWithTwoEdges) {
    ZxDiagram d;
    auto in = d.add_input();
    auto s = d.add_spider(VertexKind::X);
    d.add_edge(in, s);
    d.add_edge(in, s);
    EXPECT_THROW(d.validate(), DiagramError);
}

TEST(Diagram, DigestIsDeterministic) {
    auto a = zx_normal_form(catalog_css("steane"));
    auto b = zx_normal_form(catalog_css("steane"));
    EXPECT_EQ(a.digest(), b.digest());
    EXPECT_EQ(a.digest().size(), 16u);
    b.set_phase(b.vertices().rbegin()->first, true);
    EXPECT_NE(a.digest(), b.digest());
}

TEST(Compose, IdentityIsNeutral) {
    auto e = zx_normal_form(catalog_css("steane"));
    auto m = evaluate(e);
    EXPECT_TRUE(equal_up_to_scalar(evaluate(compose(identity_diagram(1), e)), m));
    EXPECT_TRUE(equal_up_to_scalar(evaluate(compose(e, identity_diagram(7))), m));
}

TEST(Compose, PiPhasesCancel) {
    auto z = spider_diagram(VertexKind::Z, true, 1, 1);
    EXPECT_TRUE(equal_up_to_scalar(evaluate(compose(z, z)), DenseMap::identity(1)));
}

TEST(Compose, LogicalXOnSteaneIsTransversal) {
    auto e = zx_normal_form(catalog_css("steane"));
    auto lhs = evaluate(compose(spider_diagram(VertexKind::X, true, 1, 1), e));
    auto rhs = apply_pauli(PauliOperator::parse("X:1,4,5", 7), evaluate(e));
    EXPECT_TRUE(equal_up_to_scalar(lhs, rhs));
}

TEST(Compose, ArityMismatchThrows) {
    EXPECT_THROW(compose(identity_diagram(2), identity_diagram(3)), DiagramError);
}

TEST(Compose, IsFunctorial) {
    std::mt19937_64 rng(31);
    int checked = 0;
    for (int trial = 0; trial < 60 && checked < 25; ++trial) {
        auto a = random_rule_instance(RuleName::Bialgebra, rng, 6).diagram;
        auto b = random_rule_instance(RuleName::Hopf, rng, 6).diagram;
        if (a.outputs().size() != b.inputs().size()) continue;
        ++checked;
        auto lhs = evaluate(compose(a, b));
        auto rhs = evaluate(b) * evaluate(a);
        EXPECT_TRUE(equal_up_to_scalar(lhs, rhs));
    }
    EXPECT_GE(checked, 5);
}

TEST(Tensor, IdentitiesAndEmpty) {
    auto two = tensor(identity_diagram(1), identity_diagram(1));
    EXPECT_TRUE(equal_up_to_scalar(evaluate(two), DenseMap::identity(2)));
    auto e = zx_normal_form(catalog_css("c422"));
    EXPECT_TRUE(equal_up_to_scalar(evaluate(tensor(ZxDiagram{}, e)), evaluate(e)));
}

TEST(Tensor, MatchesKroneckerOrder) {
    auto x = spider_diagram(VertexKind::X, true, 1, 1);
    auto z = spider_diagram(VertexKind::Z, true, 1, 1);
    auto got = evaluate(tensor(x, z));
    auto want = DenseMap::from_pauli(PauliOperator(BitVec::from_string("10"), BitVec::from_string("01")));
    EXPECT_TRUE(equal_up_to_scalar(got, want));
    EXPECT_TRUE(equal_up_to_scalar(got, kron(evaluate(x), evaluate(z))));
}

TEST(Permutation, RoutesWires) {
    auto swap = evaluate(permutation_diagram({1, 0}));
    EXPECT_EQ(swap.at(0b01, 0b10), Amplitude(1));
    EXPECT_EQ(swap.at(0b10, 0b01), Amplitude(1));
    EXPECT_EQ(swap.at(0b01, 0b01), Amplitude(0));
    auto cyc = evaluate(permutation_diagram({2, 0, 1}));
    EXPECT_EQ(cyc.at(0b001, 0b100), Amplitude(1));
    EXPECT_EQ(cyc.at(0b100, 0b010), Amplitude(1));
    EXPECT_EQ(cyc.at(0b010, 0b001), Amplitude(1));
}

TEST(BasisStates, Values) {
    auto zero = evaluate(basis_state_diagram(BasisState::Zero));
    EXPECT_TRUE(equal_up_to_scalar(zero, DenseMap::column({1, 0})));
    EXPECT_TRUE(equal_up_to_scalar(evaluate(basis_state_diagram(BasisState::One)), DenseMap::column({0, 1})));
    EXPECT_TRUE(equal_up_to_scalar(evaluate(basis_state_diagram(BasisState::Plus)), DenseMap::column({1, 1})));
    EXPECT_TRUE(equal_up_to_scalar(evaluate(basis_state_diagram(BasisState::Minus)), DenseMap::column({1, -1})));
}

TEST(PlugInputs, CapsSelectedWires) {
    auto copy = spider_diagram(VertexKind::Z, false, 2, 1);
    auto capped = plug_inputs(copy, {1}, {BasisState::One});
    ASSERT_EQ(capped.inputs().size(), 1u);
    auto m = evaluate(capped);
    EXPECT_EQ(std::abs(m.at(0, 0)), 0.0);
    EXPECT_EQ(std::abs(m.at(0, 1)), 0.0);
    EXPECT_EQ(std::abs(m.at(1, 0)), 0.0);
    EXPECT_NE(std::abs(m.at(1, 1)), 0.0);
}

TEST(InputsToOutputs, BendsWires) {
    auto bent = inputs_to_outputs(identity_diagram(1));
    EXPECT_EQ(bent.inputs().size(), 0u);
    EXPECT_EQ(bent.outputs().size(), 2u);
    EXPECT_TRUE(equal_up_to_scalar(evaluate(bent), DenseMap::column({1, 0, 0, 1})));
}

TEST(Projector, SingleQubitCases) {
    auto plus = evaluate(pauli_projector_diagram(PauliOperator::parse("X:1", 1), false));
    EXPECT_TRUE(equal_up_to_scalar(plus, projector(PauliOperator::parse("X:1", 1), false)));
    auto one = evaluate(pauli_projector_diagram(PauliOperator::parse("Z:1", 1), true));
    DenseMap want(1, 1);
    want.at(1, 1) = 1;
    EXPECT_TRUE(equal_up_to_scalar(one, want));
}

TEST(Projector, WeightFourOnEightQubits) {
    for (bool k : {false, true}) {
        for (const char *text : {"X:1,3,5,7", "Z:2,3,6,7"}) {
            auto p = PauliOperator::parse(text, 8);
            EXPECT_TRUE(equal_up_to_scalar(evaluate(pauli_projector_diagram(p, k)), projector(p, k))) << text << k;
        }
    }
}

TEST(Projector, IdentityAndMixedOperators) {
    auto id = pauli_projector_diagram(PauliOperator(3), false);
    EXPECT_TRUE(equal_up_to_scalar(evaluate(id), DenseMap::identity(3)));
    EXPECT_TRUE(evaluate(pauli_projector_diagram(PauliOperator(3), true)).is_zero());
    PauliOperator mixed(BitVec::from_string("10"), BitVec::from_string("01"));
    EXPECT_THROW(pauli_projector_diagram(mixed, false), DiagramError);
}

}  // namespace
}  // namespace csszx
