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

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>

#include "csszx/rewrite.hpp"
#include "csszx/sem.hpp"
#include "oracles.hpp"

namespace csszx {
namespace {

using testing::pauli_matrix;
using testing::random_pauli;

DenseMap from_rows(std::size_t out, std::size_t in, const std::vector<std::vector<Amplitude>> &rows) {
    DenseMap m(out, in);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c) m.at(r, c) = rows[r][c];
    return m;
}

DenseMap random_map(std::mt19937_64 &rng, std::size_t out, std::size_t in) {
    std::normal_distribution<double> g;
    DenseMap m(out, in);
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) m.at(r, c) = {g(rng), g(rng)};
    return m;
}

double true_scale(const DenseMap &m) { return m.max_abs() * std::pow(2.0, m.sqrt2_exponent() / 2.0); }

TEST(Evaluate, ZSpiderCopiesTheComputationalBasis) {
    auto m = evaluate(spider_diagram(VertexKind::Z, false, 1, 2));
    EXPECT_TRUE(equal_up_to_scalar(m, from_rows(2, 1, {{1, 0}, {0, 0}, {0, 0}, {0, 1}})));
}

TEST(Evaluate, PiSpidersArePaulis) {
    auto x = evaluate(spider_diagram(VertexKind::X, true, 1, 1));
    auto z = evaluate(spider_diagram(VertexKind::Z, true, 1, 1));
    EXPECT_TRUE(equal_up_to_scalar(x, from_rows(1, 1, {{0, 1}, {1, 0}})));
    EXPECT_TRUE(equal_up_to_scalar(z, from_rows(1, 1, {{1, 0}, {0, -1}})));
}

TEST(Evaluate, XSpiderStateIsEvenParity) {
    auto m = evaluate(spider_diagram(VertexKind::X, false, 0, 3));
    auto pi = evaluate(spider_diagram(VertexKind::X, true, 0, 3));
    for (std::size_t r = 0; r < 8; ++r) {
        bool even = std::popcount(r) % 2 == 0;
        EXPECT_EQ(std::abs(m.at(r, 0)) > 0, even) << r;
        EXPECT_EQ(std::abs(pi.at(r, 0)) > 0, !even) << r;
    }
    EXPECT_NEAR(std::abs(m.at(0, 0)), std::abs(m.at(3, 0)), 1e-12);
}

TEST(Evaluate, TrueScaleOfSimpleDiagrams) {
    EXPECT_NEAR(true_scale(evaluate(identity_diagram(2))), 1.0, 1e-12);
    EXPECT_NEAR(true_scale(evaluate(spider_diagram(VertexKind::Z, false, 1, 1))), 1.0, 1e-12);
    // X(0) with legs 1+1 is the identity with the plus/minus normalization.
    auto x = evaluate(spider_diagram(VertexKind::X, false, 1, 1));
    EXPECT_TRUE(equal_up_to_scalar(x, DenseMap::identity(1)));
}

TEST(Evaluate, ZeroScalar) {
    EXPECT_TRUE(evaluate(spider_diagram(VertexKind::X, true, 0, 0)).is_zero());
    EXPECT_TRUE(evaluate(spider_diagram(VertexKind::Z, true, 0, 0)).is_zero());
    EXPECT_FALSE(evaluate(spider_diagram(VertexKind::Z, false, 0, 0)).is_zero());
}

TEST(Evaluate, SelfLoopsAndParallelEdges) {
    ZxDiagram d;
    auto z = d.add_spider(VertexKind::Z);
    d.add_edge(d.add_input(), z);
    d.add_edge(z, z);
    d.add_edge(z, d.add_output());
    EXPECT_TRUE(equal_up_to_scalar(evaluate(d), DenseMap::identity(1)));

    ZxDiagram h;
    auto a = h.add_spider(VertexKind::Z);
    auto b = h.add_spider(VertexKind::X);
    h.add_edge(h.add_input(), a);
    h.add_edge(a, b);
    h.add_edge(a, b);
    h.add_edge(b, h.add_output());
    // |0><0| + |0><1| pattern: the input is discarded and the output is |0>.
    EXPECT_TRUE(equal_up_to_scalar(evaluate(h), from_rows(1, 1, {{1, 1}, {0, 0}})));
}

TEST(Evaluate, ContractionOrderDoesNotMatter) {
    std::mt19937_64 rng(21);
    for (auto rule : all_rules()) {
        for (int i = 0; i < 20; ++i) {
            auto d = random_rule_instance(rule, rng).diagram;
            std::vector<VertexId> order;
            for (const auto &[v, vert] : d.vertices()) {
                if (vert.kind != VertexKind::Boundary) order.push_back(v);
            }
            std::shuffle(order.begin(), order.end(), rng);
            auto greedy = evaluate(d);
            auto shuffled = evaluate(d, order);
            ASSERT_TRUE(equal_up_to_scalar(greedy, shuffled)) << rule_name(rule);
            EXPECT_NEAR(true_scale(greedy), true_scale(shuffled), 1e-9 * std::max(1.0, true_scale(greedy)));
        }
    }
}

TEST(Evaluate, CompositionIsMatrixProduct) {
    auto a = spider_diagram(VertexKind::Z, true, 1, 2);
    auto b = spider_diagram(VertexKind::X, false, 2, 1);
    EXPECT_TRUE(equal_up_to_scalar(evaluate(compose(a, b)), evaluate(b) * evaluate(a)));
    EXPECT_TRUE(equal_up_to_scalar(evaluate(tensor(a, b)), kron(evaluate(a), evaluate(b))));
}

TEST(Evaluate, BoundaryBudget) {
    EXPECT_THROW(evaluate(identity_diagram(kMaxBoundaryWires / 2 + 1)), std::length_error);
    EXPECT_NO_THROW(evaluate(identity_diagram(4)));
}

TEST(EncoderOracle, TrivialCodeIsTheIdentity) {
    auto code = new_css(1, BinaryMatrix(0, 1), BinaryMatrix(0, 1));
    EXPECT_TRUE(equal_up_to_scalar(encoder_oracle(code), DenseMap::identity(1)));
}

TEST(EncoderOracle, SteaneColumnsAreEvenAndOddCodewords) {
    auto e = encoder_oracle(catalog_css("steane"));
    ASSERT_EQ(e.num_outputs(), 7u);
    ASSERT_EQ(e.num_inputs(), 1u);
    std::size_t zero = 0, one = 0;
    for (std::size_t r = 0; r < e.rows(); ++r) {
        if (std::abs(e.at(r, 0)) > 0) {
            ++zero;
            EXPECT_EQ(e.at(r, 0), Amplitude(1));
            EXPECT_EQ(std::popcount(r) % 2, 0);
        }
        if (std::abs(e.at(r, 1)) > 0) {
            ++one;
            EXPECT_EQ(std::popcount(r) % 2, 1);
        }
    }
    EXPECT_EQ(zero, 8u);
    EXPECT_EQ(one, 8u);
    EXPECT_TRUE(is_isometry(e));
}

TEST(EncoderOracle, StabilizersFixTheImage) {
    for (auto name : {"steane", "c422", "qrm15", "int15", "ext_steane"}) {
        auto code = catalog_css(name);
        auto e = encoder_oracle(code);
        for (const auto &s : code.stabilizer_generators()) EXPECT_TRUE(stabilizes(s, e)) << name << " " << s.str();
        EXPECT_TRUE(is_isometry(e)) << name;
    }
}

TEST(EqualUpToScalar, Examples) {
    auto a = from_rows(1, 1, {{1, 2}, {3, 4}});
    auto b = from_rows(1, 1, {{{0, 2}, {0, 4}}, {{0, 6}, {0, 8}}});
    auto c = from_rows(1, 1, {{1, 2}, {3, 5}});
    EXPECT_TRUE(equal_up_to_scalar(a, b));
    EXPECT_FALSE(equal_up_to_scalar(a, c));
    EXPECT_TRUE(equal_up_to_scalar(DenseMap(1, 1), DenseMap(1, 1)));
    EXPECT_FALSE(equal_up_to_scalar(a, DenseMap(1, 1)));
    EXPECT_THROW(equal_up_to_scalar(DenseMap(1, 0), DenseMap(1, 1)), std::invalid_argument);
}

TEST(IsIsometry, Examples) {
    EXPECT_TRUE(is_isometry(DenseMap::identity(3)));
    EXPECT_TRUE(is_isometry(from_rows(1, 1, {{1, 1}, {1, -1}})));
    EXPECT_TRUE(is_isometry(DenseMap::column({5, 0})));
    EXPECT_FALSE(is_isometry(from_rows(1, 1, {{1, 0}, {0, 0}})));
    EXPECT_FALSE(is_isometry(from_rows(1, 1, {{1, 0}, {0, 2}})));
    EXPECT_FALSE(is_isometry(DenseMap(1, 1)));
}

TEST(ApplyPauli, MatchesDenseProduct) {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 50; ++t) {
        auto p = random_pauli(rng, 3);
        auto m = random_map(rng, 3, 1);
        auto fast = apply_pauli(p, m);
        auto slow = DenseMap::from_pauli(p) * m;
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c) EXPECT_NEAR(std::abs(fast.at(r, c) - slow.at(r, c)), 0, 1e-12);
    }
}

TEST(FromPauli, MatchesSiteBySiteOracle) {
    std::mt19937_64 rng(4);
    for (int t = 0; t < 30; ++t) {
        auto p = random_pauli(rng, 3);
        auto oracle = pauli_matrix(p);
        auto m = DenseMap::from_pauli(p);
        for (std::size_t r = 0; r < 8; ++r)
            for (std::size_t c = 0; c < 8; ++c) EXPECT_NEAR(std::abs(m.at(r, c) - oracle[r][c]), 0, 1e-12);
    }
}

TEST(Kron, FirstFactorHoldsTheHighWires) {
    auto x = DenseMap::from_pauli(PauliOperator::parse("X:1", 1));
    auto m = kron(x, DenseMap::identity(1));
    EXPECT_EQ(m.at(2, 0), Amplitude(1));
    EXPECT_EQ(m.at(0, 2), Amplitude(1));
    EXPECT_EQ(m.at(1, 0), Amplitude(0));
}

TEST(Stabilizes, Examples) {
    auto plus = DenseMap::column({1, 1});
    EXPECT_TRUE(stabilizes(PauliOperator::parse("X:1", 1), plus));
    EXPECT_FALSE(stabilizes(PauliOperator::parse("Z:1", 1), plus));
    EXPECT_TRUE(stabilizes(PauliOperator::parse("-X:1", 1), DenseMap::column({1, -1})));
}

TEST(Adjoint, ConjugateTranspose) {
    auto a = from_rows(1, 1, {{{1, 1}, 2}, {3, {0, -4}}});
    auto h = a.adjoint();
    EXPECT_EQ(h.at(0, 0), Amplitude(1, -1));
    EXPECT_EQ(h.at(0, 1), Amplitude(3));
    EXPECT_EQ(h.at(1, 0), Amplitude(2));
    EXPECT_EQ(h.at(1, 1), Amplitude(0, 4));
}

}  // namespace
}  // namespace csszx
