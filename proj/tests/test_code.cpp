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

#include "csszx/code.hpp"
#include "oracles.hpp"

namespace csszx {
namespace {

using testing::span_of;

BinaryMatrix rows(std::initializer_list<const char *> text) {
    std::vector<std::string> v(text.begin(), text.end());
    return BinaryMatrix::from_strings(v);
}

bool equivalent_modulo(const BitVec &a, const BitVec &b, const BinaryMatrix &stabs) {
    return in_row_space(stabs, a ^ b);
}

void expect_css_invariants(const CssCode &c) {
    const auto n = c.n();
    EXPECT_EQ(mul_transpose(c.x_stabilizers(), c.z_stabilizers()),
              BinaryMatrix(c.x_stabilizers().rows(), c.z_stabilizers().rows()));
    EXPECT_EQ(rank(c.x_stabilizers()), c.x_stabilizers().rows());
    EXPECT_EQ(rank(c.z_stabilizers()), c.z_stabilizers().rows());
    EXPECT_EQ(c.k(), n - c.x_stabilizers().rows() - c.z_stabilizers().rows());
    EXPECT_EQ(mul_transpose(c.x_logicals(), c.z_stabilizers()), BinaryMatrix(c.k(), c.z_stabilizers().rows()));
    EXPECT_EQ(mul_transpose(c.z_logicals(), c.x_stabilizers()), BinaryMatrix(c.k(), c.x_stabilizers().rows()));
    EXPECT_EQ(mul_transpose(c.x_logicals(), c.z_logicals()), BinaryMatrix::identity(c.k()));
    EXPECT_EQ(rank(vstack(c.x_stabilizers(), c.x_logicals())), c.x_stabilizers().rows() + c.k());
    EXPECT_EQ(rank(vstack(c.z_stabilizers(), c.z_logicals())), c.z_stabilizers().rows() + c.k());
}

/// Minimum weight of a Pauli that commutes with every stabilizer and is not in
/// the stabilizer group, by enumerating all 4^n operators.
std::size_t exhaustive_distance(const CssCode &c) {
    const auto n = c.n();
    auto gens = c.stabilizer_generators();
    std::size_t best = n + 1;
    const std::uint64_t count = std::uint64_t{1} << (2 * n);
    for (std::uint64_t word = 1; word < count; ++word) {
        BitVec x(n), z(n);
        for (std::size_t q = 0; q < n; ++q) {
            x.set(q, (word >> q) & 1);
            z.set(q, (word >> (n + q)) & 1);
        }
        PauliOperator p(x, z);
        if (p.weight() >= best) continue;
        bool centralizes = true;
        for (const auto &g : gens) centralizes = centralizes && commutes(p, g);
        if (!centralizes) continue;
        if (in_group(p, gens)) continue;
        best = p.weight();
    }
    return best;
}

TEST(NewCss, SteaneFromGeneratorMatrices) {
    auto g = rows({"1010101", "0110011", "0001111"});
    auto c = new_css(7, g, g);
    EXPECT_EQ(c.k(), 1u);
    expect_css_invariants(c);
}

TEST(NewCss, TrivialCode) {
    auto c = new_css(1, BinaryMatrix(0, 1), BinaryMatrix(0, 1));
    EXPECT_EQ(c.k(), 1u);
    EXPECT_EQ(c.x_logicals().row(0).to_string(), "1");
    EXPECT_EQ(c.z_logicals().row(0).to_string(), "1");
}

TEST(NewCss, OrthogonalityViolationThrows) { EXPECT_THROW(new_css(1, rows({"1"}), rows({"1"})), CodeError); }

TEST(NewCss, RedundantRowsAreReduced) {
    auto g = rows({"1010101", "0110011", "1100110", "0001111"});
    auto c = new_css(7, g, rows({"1010101", "0110011", "0001111"}));
    EXPECT_EQ(c.x_stabilizers().rows(), 3u);
    EXPECT_TRUE(row_space_equal(c.x_stabilizers(), g));
}

TEST(NewCss, BadLogicalSeedThrows) {
    auto g = rows({"1010101", "0110011", "0001111"});
    LogicalSeed stabilizer_as_logical{rows({"1010101"}), std::nullopt};
    EXPECT_THROW(new_css(7, g, g, stabilizer_as_logical), CodeError);
    LogicalSeed anticommuting{rows({"1000000"}), std::nullopt};
    EXPECT_THROW(new_css(7, g, g, anticommuting), CodeError);
}

TEST(NewCss, SeededLogicalsAreKept) {
    auto g = rows({"1010101", "0110011", "0001111"});
    auto c = new_css(7, g, g, LogicalSeed{rows({"1110000"}), std::nullopt});
    EXPECT_EQ(c.x_logicals().row(0).to_string(), "1110000");
    expect_css_invariants(c);
}

TEST(ComputeLogicals, SteaneLogicalIsEquivalentToWeightThree) {
    auto c = catalog_css("steane");
    EXPECT_TRUE(equivalent_modulo(c.x_logicals().row(0), BitVec::from_string("1001100"), c.x_stabilizers()));
    EXPECT_TRUE(equivalent_modulo(c.z_logicals().row(0), BitVec::from_string("1001100"), c.z_stabilizers()));
}

TEST(ComputeLogicals, ReedMullerLogicals) {
    auto c = catalog_css("qrm15");
    EXPECT_TRUE(equivalent_modulo(c.x_logicals().row(0), BitVec::from_string("111111100000000"), c.x_stabilizers()));
    EXPECT_TRUE(equivalent_modulo(c.z_logicals().row(0), BitVec::from_string("100110000000000"), c.z_stabilizers()));
}

TEST(ComputeLogicals, DeterministicAndPaired) {
    auto c = catalog_css("int15");
    auto a = compute_logicals(c.x_stabilizers(), c.z_stabilizers());
    auto b = compute_logicals(c.x_stabilizers(), c.z_stabilizers());
    EXPECT_EQ(a.x, b.x);
    EXPECT_EQ(a.z, b.z);
    EXPECT_EQ(mul_transpose(a.x, a.z), BinaryMatrix::identity(4));
}

TEST(Distance, CatalogValues) {
    EXPECT_EQ(distance(catalog_css("steane")), 3u);
    EXPECT_EQ(distance(catalog_css("qrm15")), 3u);
    EXPECT_EQ(distance(catalog_css("ext_steane")), 3u);
    EXPECT_EQ(distance(catalog_css("int15")), 3u);
    EXPECT_EQ(distance(catalog_css("c422")), 2u);
}

TEST(Distance, QrmIsAsymmetric) {
    auto d = distance_breakdown(catalog_css("qrm15"));
    EXPECT_EQ(d.x, 7u);
    EXPECT_EQ(d.z, 3u);
}

TEST(Distance, AgreesWithExhaustivePauliSearch) {
    for (const char *name : {"steane", "c422"}) {
        auto c = catalog_css(name);
        EXPECT_EQ(distance(c), exhaustive_distance(c)) << name;
    }
    auto child = new_css(4, rows({"1111"}), BinaryMatrix(0, 4));
    EXPECT_EQ(child.k(), 3u);
    EXPECT_EQ(distance(child), 1u);
    EXPECT_EQ(exhaustive_distance(child), 1u);
}

TEST(Distance, NoLogicalQubitsGivesZero) {
    auto c = new_css(2, rows({"11"}), rows({"11"}));
    EXPECT_EQ(c.k(), 0u);
    EXPECT_EQ(distance(c), 0u);
}

TEST(Subsystem, Sub15Parameters) {
    auto s = catalog_subsystem("sub15");
    EXPECT_EQ(s.n(), 15u);
    EXPECT_EQ(s.k(), 1u);
    EXPECT_EQ(s.r(), 3u);
    EXPECT_EQ(s.n(), rank(s.x_stabilizers()) + rank(s.z_stabilizers()) + s.k() + s.r());
}

TEST(Subsystem, CanonicalPairing) {
    auto s = catalog_subsystem("sub15");
    EXPECT_EQ(mul_transpose(s.x_gauges(), s.z_gauges()), BinaryMatrix::identity(3));
    EXPECT_EQ(mul_transpose(s.x_logicals(), s.z_logicals()), BinaryMatrix::identity(1));
    EXPECT_EQ(mul_transpose(s.x_gauges(), s.z_logicals()), BinaryMatrix(3, 1));
    EXPECT_EQ(mul_transpose(s.x_logicals(), s.z_gauges()), BinaryMatrix(1, 3));
    auto sx = s.x_stabilizers();
    auto sz = s.z_stabilizers();
    EXPECT_EQ(mul_transpose(sx, vstack(s.z_gauges(), s.z_logicals())), BinaryMatrix(sx.rows(), 4));
    EXPECT_EQ(mul_transpose(sz, vstack(s.x_gauges(), s.x_logicals())), BinaryMatrix(sz.rows(), 4));
}

TEST(Subsystem, FirstPairMatchesTheSwitchingFigure) {
    auto s = catalog_subsystem("sub15");
    EXPECT_EQ(s.x_gauges().row(0).to_string(), "101010100000000");
    EXPECT_EQ(s.z_gauges().row(0).to_string(), "011000000110000");
}

TEST(Subsystem, GaugeFixingAddsRowsToTheStabilizerGroup) {
    auto s = catalog_subsystem("sub15");
    auto ext = catalog_css("ext_steane");
    auto qrm = catalog_css("qrm15");
    EXPECT_TRUE(row_space_equal(vstack(s.x_stabilizers(), s.x_gauges()), ext.x_stabilizers()));
    EXPECT_TRUE(row_space_equal(s.z_stabilizers(), ext.z_stabilizers()));
    EXPECT_TRUE(row_space_equal(vstack(s.z_stabilizers(), s.z_gauges()), qrm.z_stabilizers()));
    EXPECT_TRUE(row_space_equal(s.x_stabilizers(), qrm.x_stabilizers()));
    auto fx = s.gauge_fixed(PauliKind::X);
    EXPECT_TRUE(row_space_equal(fx.x_stabilizers(), ext.x_stabilizers()));
    expect_css_invariants(fx);
    expect_css_invariants(s.gauge_fixed(PauliKind::Z));
}

TEST(Subsystem, NoGaugeRowsBehavesAsStabilizerCode) {
    auto c = catalog_css("steane");
    auto s = new_subsystem(7, c.x_stabilizers(), c.z_stabilizers(), BinaryMatrix(0, 7), BinaryMatrix(0, 7));
    EXPECT_EQ(s.r(), 0u);
    EXPECT_EQ(s.k(), 1u);
    auto back = s.as_stabilizer_code();
    EXPECT_TRUE(row_space_equal(back.x_stabilizers(), c.x_stabilizers()));
    EXPECT_EQ(distance(back), 3u);
}

TEST(Subsystem, SingularPairingThrows) {
    auto c = catalog_css("c422");
    EXPECT_THROW(new_subsystem(4, c.x_stabilizers(), c.z_stabilizers(), rows({"1100"}), rows({"1100"})), CodeError);
}

TEST(SupportedStabilizers, MatchesEnumeration) {
    auto c = catalog_css("steane");
    for (auto subset : std::vector<std::vector<std::size_t>>{{1, 2, 5, 6}, {3, 4, 5, 6}, {}, {0, 1, 2}}) {
        auto got = stabilizers_supported_on(c, subset);
        std::set<BitVec> want_x, want_z;
        BitVec outside(7);
        for (std::size_t q = 0; q < 7; ++q) outside.set(q, true);
        for (auto q : subset) outside.set(q, false);
        for (const auto &v : span_of(c.x_stabilizers())) {
            if ((v & outside).is_zero()) want_x.insert(v);
        }
        for (const auto &v : span_of(c.z_stabilizers())) {
            if ((v & outside).is_zero()) want_z.insert(v);
        }
        EXPECT_EQ(span_of(got.x), want_x);
        EXPECT_EQ(span_of(got.z), want_z);
    }
    auto r = stabilizers_supported_on(c, {3, 4, 5, 6});
    ASSERT_EQ(r.x.rows(), 1u);
    EXPECT_EQ(r.x.row(0).to_string(), "0001111");
    ASSERT_EQ(r.z.rows(), 1u);
    EXPECT_EQ(r.z.row(0).to_string(), "0001111");
}

TEST(Catalog, EveryEntrySatisfiesTheInvariants) {
    for (const auto &name : catalog_names()) {
        auto entry = catalog(name);
        if (auto *css = std::get_if<CssCode>(&entry)) {
            SCOPED_TRACE(name);
            expect_css_invariants(*css);
        }
    }
}

TEST(Catalog, Parameters) {
    auto qrm = catalog_css("qrm15");
    EXPECT_EQ(qrm.k(), 1u);
    EXPECT_EQ(qrm.x_stabilizers().rows(), 4u);
    EXPECT_EQ(qrm.z_stabilizers().rows(), 10u);
    auto ext = catalog_css("ext_steane");
    EXPECT_EQ(ext.n(), 15u);
    EXPECT_EQ(ext.k(), 1u);
    EXPECT_EQ(catalog_css("int15").k(), 4u);
    EXPECT_EQ(catalog_css("c422").x_logicals().row(0).to_string(), "1100");
    EXPECT_EQ(parameters_string(catalog_css("steane"), 3), "⟦7,1,3⟧");
}

TEST(Catalog, UnknownNameThrows) {
    EXPECT_THROW(catalog("golay"), std::out_of_range);
    EXPECT_THROW(catalog_css("sub15"), std::invalid_argument);
}

}  // namespace
}  // namespace csszx
