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

#include <set>

#include "csszx/nf.hpp"
#include "csszx/sem.hpp"
#include "oracles.hpp"

namespace csszx {
namespace {

const char *const kCssCodes[] = {"steane", "c422", "qrm15", "int15", "ext_steane"};

std::set<VertexId> neighbor_set(const ZxDiagram &d, VertexId v) {
    auto n = d.neighbors(v);
    return {n.begin(), n.end()};
}

void expect_layout_matches_rows(const NormalForm &nf, const BinaryMatrix &stab, const BinaryMatrix &logi,
                                VertexKind qubit_kind) {
    const auto &d = nf.diagram;
    const auto &lay = nf.layout;
    ASSERT_EQ(lay.stabilizers.size(), stab.rows());
    ASSERT_EQ(lay.logicals.size(), logi.rows());
    ASSERT_EQ(d.inputs().size(), logi.rows());
    ASSERT_EQ(d.outputs().size(), lay.qubits.size());
    for (std::size_t q = 0; q < lay.qubits.size(); ++q) {
        auto s = lay.qubits[q];
        EXPECT_EQ(d.vertex(s).kind, qubit_kind);
        EXPECT_EQ(d.neighbors(d.outputs()[q]), std::vector<VertexId>{s});
    }
    auto check_row = [&](VertexId s, const BitVec &row, bool has_input) {
        EXPECT_EQ(d.vertex(s).kind, swap_color(qubit_kind));
        EXPECT_FALSE(d.vertex(s).phase);
        std::set<VertexId> want;
        for (auto q : row.support()) want.insert(lay.qubits[q]);
        auto got = neighbor_set(d, s);
        std::size_t boundary = 0;
        for (auto w : std::set<VertexId>(got)) {
            if (d.is_boundary(w)) {
                got.erase(w);
                ++boundary;
            }
        }
        EXPECT_EQ(got, want);
        EXPECT_EQ(boundary, has_input ? 1u : 0u);
        EXPECT_EQ(d.degree(s), row.weight() + (has_input ? 1 : 0));
    };
    for (std::size_t i = 0; i < stab.rows(); ++i) check_row(lay.stabilizers[i], stab.row(i), false);
    for (std::size_t i = 0; i < logi.rows(); ++i) {
        check_row(lay.logicals[i], logi.row(i), true);
        EXPECT_EQ(d.neighbors(d.inputs()[i]), std::vector<VertexId>{lay.logicals[i]});
    }
    EXPECT_EQ(d.num_spiders(), lay.qubits.size() + stab.rows() + logi.rows());
}

TEST(BuildNormalForm, SteaneTopology) {
    auto code = catalog_css("steane");
    auto nf = build_normal_form(code, NormalFormSide::Zx);
    expect_layout_matches_rows(nf, code.x_stabilizers(), code.x_logicals(), VertexKind::X);
    EXPECT_EQ(nf.diagram.count_spiders(VertexKind::X), 7u);
    EXPECT_EQ(nf.diagram.count_spiders(VertexKind::Z), 4u);
    std::multiset<std::size_t> stab_degrees;
    for (auto s : nf.layout.stabilizers) stab_degrees.insert(nf.diagram.degree(s));
    EXPECT_EQ(stab_degrees, (std::multiset<std::size_t>{4, 4, 4}));
}

TEST(BuildNormalForm, BothSidesMatchTheRows) {
    for (auto name : kCssCodes) {
        SCOPED_TRACE(name);
        auto code = catalog_css(name);
        expect_layout_matches_rows(build_normal_form(code, NormalFormSide::Zx), code.x_stabilizers(),
                                   code.x_logicals(), VertexKind::X);
        expect_layout_matches_rows(build_normal_form(code, NormalFormSide::Xz), code.z_stabilizers(),
                                   code.z_logicals(), VertexKind::Z);
    }
}

TEST(NormalForm, EncodesTheCode) {
    for (auto name : kCssCodes) {
        SCOPED_TRACE(name);
        auto code = catalog_css(name);
        auto oracle = encoder_oracle(code);
        EXPECT_TRUE(equal_up_to_scalar(evaluate(zx_normal_form(code)), oracle));
        EXPECT_TRUE(equal_up_to_scalar(evaluate(xz_normal_form(code)), oracle));
    }
}

TEST(NormalForm, C422Counts) {
    auto d = zx_normal_form(catalog_css("c422"));
    EXPECT_EQ(d.inputs().size(), 2u);
    EXPECT_EQ(d.outputs().size(), 4u);
    EXPECT_EQ(d.count_spiders(VertexKind::X), 4u);
    EXPECT_EQ(d.count_spiders(VertexKind::Z), 3u);
}

TEST(NormalForm, Qrm15XzSide) {
    auto code = catalog_css("qrm15");
    auto d = xz_normal_form(code);
    EXPECT_EQ(d.count_spiders(VertexKind::Z), 15u);
    EXPECT_EQ(d.count_spiders(VertexKind::X), 11u);
    EXPECT_EQ(code.z_stabilizers().rows(), 10u);
}

TEST(NormalForm, TrivialCodeIsABareWire) {
    auto code = new_css(1, BinaryMatrix(0, 1), BinaryMatrix(0, 1));
    auto d = zx_normal_form(code);
    EXPECT_EQ(d.num_spiders(), 0u);
    ASSERT_EQ(d.edges().size(), 1u);
    EXPECT_TRUE(equal_up_to_scalar(evaluate(d), DenseMap::identity(1)));
    EXPECT_EQ(build_normal_form(code, NormalFormSide::Zx).diagram.num_spiders(), 2u);
}

TEST(NormalForm, WeightOneLogicalCollapsesOnlyThatWire) {
    BinaryMatrix g(0, 3);
    g.append_row(BitVec::from_string("011"));
    BinaryMatrix h(0, 3);
    h.append_row(BitVec::from_string("011"));
    auto code = new_css(3, g, h);
    auto d = zx_normal_form(code);
    auto full = build_normal_form(code, NormalFormSide::Zx).diagram;
    EXPECT_LT(d.num_spiders(), full.num_spiders());
    EXPECT_TRUE(equal_up_to_scalar(evaluate(d), evaluate(full)));
    EXPECT_TRUE(equal_up_to_scalar(evaluate(d), encoder_oracle(code)));
}

TEST(CodeFromNormalForm, RoundTrips) {
    for (auto name : kCssCodes) {
        SCOPED_TRACE(name);
        auto code = catalog_css(name);
        for (const auto &d : {zx_normal_form(code), xz_normal_form(code)}) {
            bool encoder = false;
            auto back = code_from_normal_form(d, "back", &encoder);
            EXPECT_TRUE(encoder);
            EXPECT_EQ(back.n(), code.n());
            EXPECT_EQ(back.k(), code.k());
            EXPECT_EQ(rank(back.x_stabilizers()), rank(code.x_stabilizers()));
            EXPECT_EQ(rank(back.z_stabilizers()), rank(code.z_stabilizers()));
            EXPECT_TRUE(equal_up_to_scalar(encoder_oracle(back), encoder_oracle(code)));
        }
    }
}

TEST(CodeFromNormalForm, DependentInputsKeepOneQubitEach) {
    ZxDiagram d;
    auto in1 = d.add_input();
    auto in2 = d.add_input();
    std::vector<VertexId> qubits;
    for (int q = 0; q < 2; ++q) {
        auto s = d.add_spider(VertexKind::X);
        d.add_edge(s, d.add_output());
        qubits.push_back(s);
    }
    for (auto in : {in1, in2}) {
        auto l = d.add_spider(VertexKind::Z);
        d.add_edge(in, l);
        for (auto q : qubits) d.add_edge(l, q);
    }
    bool encoder = true;
    auto code = code_from_normal_form(d, "", &encoder);
    EXPECT_FALSE(encoder);
    EXPECT_EQ(code.n(), 2u);
    EXPECT_EQ(code.k(), 2u);
    EXPECT_EQ(code.z_stabilizers().rows(), 0u);
    EXPECT_FALSE(is_isometry(evaluate(d)));
}

TEST(CodeFromNormalForm, TooManyInputsThrows) {
    ZxDiagram d;
    auto q = d.add_spider(VertexKind::X);
    d.add_edge(q, d.add_output());
    for (int i = 0; i < 2; ++i) {
        auto l = d.add_spider(VertexKind::Z);
        d.add_edge(d.add_input(), l);
        d.add_edge(l, q);
    }
    EXPECT_THROW(code_from_normal_form(d), DiagramError);
}

TEST(CodeFromNormalForm, ShapeViolationsThrow) {
    EXPECT_THROW(code_from_normal_form(spider_diagram(VertexKind::X, true, 0, 1)), DiagramError);

    auto two_outputs = spider_diagram(VertexKind::X, false, 0, 2);
    EXPECT_THROW(code_from_normal_form(two_outputs), DiagramError);

    ZxDiagram mixed;
    auto a = mixed.add_spider(VertexKind::X);
    auto b = mixed.add_spider(VertexKind::Z);
    mixed.add_edge(a, mixed.add_output());
    mixed.add_edge(b, mixed.add_output());
    EXPECT_THROW(code_from_normal_form(mixed), DiagramError);

    ZxDiagram parallel;
    auto q = parallel.add_spider(VertexKind::X);
    auto s = parallel.add_spider(VertexKind::Z);
    parallel.add_edge(q, parallel.add_output());
    parallel.add_edge(q, s);
    parallel.add_edge(q, s);
    EXPECT_THROW(code_from_normal_form(parallel), DiagramError);

    ZxDiagram nonbipartite;
    auto q1 = nonbipartite.add_spider(VertexKind::X);
    auto q2 = nonbipartite.add_spider(VertexKind::X);
    nonbipartite.add_edge(q1, nonbipartite.add_output());
    nonbipartite.add_edge(q2, nonbipartite.add_output());
    nonbipartite.add_edge(q1, q2);
    EXPECT_THROW(code_from_normal_form(nonbipartite), DiagramError);
}

TEST(ReadNormalFormRows, ReportsTheRows) {
    auto code = catalog_css("steane");
    auto rows = read_normal_form_rows(build_normal_form(code, NormalFormSide::Zx).diagram);
    EXPECT_EQ(rows.kind, VertexKind::X);
    EXPECT_EQ(rows.n, 7u);
    EXPECT_EQ(rows.stabilizers, code.x_stabilizers());
    EXPECT_EQ(rows.logicals, code.x_logicals());
}

TEST(SubsystemNormalForm, OpenGaugeShape) {
    auto sub = catalog_subsystem("sub15");
    auto nf = build_subsystem_normal_form(sub, NormalFormSide::Zx);
    const auto &d = nf.diagram;
    EXPECT_EQ(d.count_spiders(VertexKind::X), 15u);
    EXPECT_EQ(d.count_spiders(VertexKind::Z), sub.x_stabilizers().rows() + sub.k() + sub.r());
    EXPECT_EQ(d.count_spiders(VertexKind::Z), 8u);
    EXPECT_EQ(d.inputs().size(), 4u);
    EXPECT_EQ(nf.layout.gauges.size(), sub.r());
    for (std::size_t i = 0; i < sub.r(); ++i) {
        EXPECT_EQ(d.neighbors(d.inputs()[sub.k() + i]), std::vector<VertexId>{nf.layout.gauges[i]});
    }
}

TEST(SubsystemNormalForm, OpenGaugesEncodeTheStabilizerView) {
    auto sub = catalog_subsystem("sub15");
    auto oracle = encoder_oracle(sub.as_stabilizer_code());
    EXPECT_TRUE(equal_up_to_scalar(evaluate(subsystem_zx_normal_form(sub)), oracle));
    EXPECT_TRUE(equal_up_to_scalar(evaluate(subsystem_xz_normal_form(sub)), oracle));
    EXPECT_TRUE(equal_up_to_scalar(evaluate(subsystem_zx_normal_form(sub)), evaluate(zx_normal_form(catalog_css("int15")))));
}

TEST(SubsystemNormalForm, PlusCapsFixTheXGauges) {
    auto sub = catalog_subsystem("sub15");
    auto capped = subsystem_zx_normal_form(sub, GaugeBoundary{GaugeMode::State, {}});
    EXPECT_EQ(capped.inputs().size(), sub.k());
    EXPECT_TRUE(equal_up_to_scalar(evaluate(capped), encoder_oracle(sub.gauge_fixed(PauliKind::X))));
}

TEST(SubsystemNormalForm, ZeroCapsFixTheZGauges) {
    auto sub = catalog_subsystem("sub15");
    GaugeBoundary zero{GaugeMode::State, std::vector<BasisState>(sub.r(), BasisState::Zero)};
    auto capped = subsystem_zx_normal_form(sub, zero);
    EXPECT_TRUE(equal_up_to_scalar(evaluate(capped), encoder_oracle(sub.gauge_fixed(PauliKind::Z))));
}

TEST(SubsystemNormalForm, CapsMatchPluggedOpenForm) {
    auto sub = catalog_subsystem("sub15");
    std::mt19937_64 rng(8);
    const BasisState choices[] = {BasisState::Zero, BasisState::One, BasisState::Plus, BasisState::Minus};
    for (int t = 0; t < 6; ++t) {
        std::vector<BasisState> states;
        std::vector<std::size_t> wires;
        for (std::size_t i = 0; i < sub.r(); ++i) {
            states.push_back(choices[rng() % 4]);
            wires.push_back(sub.k() + i);
        }
        auto capped = subsystem_zx_normal_form(sub, GaugeBoundary{GaugeMode::State, states});
        auto plugged = plug_inputs(subsystem_zx_normal_form(sub), wires, states);
        EXPECT_TRUE(equal_up_to_scalar(evaluate(capped), evaluate(plugged)));
    }
}

TEST(SubsystemNormalForm, WrongStateCountThrows) {
    auto sub = catalog_subsystem("sub15");
    GaugeBoundary bad{GaugeMode::State, {BasisState::Plus}};
    EXPECT_THROW(subsystem_zx_normal_form(sub, bad), std::invalid_argument);
}

TEST(SubsystemNormalForm, NoGaugesMatchesTheCssForm) {
    auto code = catalog_css("steane");
    auto sub = new_subsystem(7, code.x_stabilizers(), code.z_stabilizers(), BinaryMatrix(0, 7), BinaryMatrix(0, 7),
                             LogicalSeed{code.x_logicals(), code.z_logicals()});
    EXPECT_EQ(sub.r(), 0u);
    EXPECT_EQ(subsystem_zx_normal_form(sub).digest(), zx_normal_form(code).digest());
}

}  // namespace
}  // namespace csszx
