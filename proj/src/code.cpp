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

#include "csszx/code.hpp"

#include <bit>
#include <limits>

namespace csszx {

namespace {

BinaryMatrix coerce(const BinaryMatrix &m, std::size_t n, const char *what) {
    if (m.rows() == 0) return BinaryMatrix(0, n);
    if (m.cols() != n) {
        throw CodeError(std::string(what) + " has " + std::to_string(m.cols()) + " columns, expected n = " +
                        std::to_string(n));
    }
    return m;
}

bool is_zero(const BinaryMatrix &m) {
    for (const auto &r : m.row_vectors()) {
        if (!r.is_zero()) return false;
    }
    return true;
}

// One side of a logical basis: representatives must be orthogonal to
// `commute_with` and are taken modulo row-space(`modulo`).
struct Side {
    BinaryMatrix commute_with;
    BinaryMatrix modulo;
};

BinaryMatrix logical_basis(const Side &side, std::size_t k) {
    auto candidates = kernel(side.commute_with);
    auto stacked = independent_rows(vstack(side.modulo, candidates));
    BinaryMatrix out(0, candidates.cols());
    for (std::size_t i = side.modulo.rows(); i < stacked.rows(); ++i) out.append_row(stacked.row(i));
    if (out.rows() != k) {
        throw CodeError("logical basis has " + std::to_string(out.rows()) + " rows, expected k = " +
                        std::to_string(k));
    }
    return out;
}

// Rows z orthogonal to `other.commute_with` with [.. ; paired] z^T = (0, e_j),
// reduced modulo row-space(other.modulo).
BinaryMatrix dual_basis(const Side &other, const BinaryMatrix &paired) {
    const auto n = paired.cols();
    auto constraints = vstack(other.commute_with.rows() ? other.commute_with : BinaryMatrix(0, n), paired);
    auto ct = constraints.transpose();
    auto reducer = rref(other.modulo.rows() ? other.modulo : BinaryMatrix(0, n));
    BinaryMatrix out(0, n);
    const auto offset = constraints.rows() - paired.rows();
    for (std::size_t j = 0; j < paired.rows(); ++j) {
        BitVec target(constraints.rows());
        target.set(offset + j, true);
        auto z = solve(ct, target);
        if (!z) {
            throw CodeError("logical operators are not independent modulo stabilizers");
        }
        out.append_row(reduce_modulo(reducer, *z));
    }
    return out;
}

void validate_side(const BinaryMatrix &l, const Side &side, std::size_t k, char kind) {
    std::string label = std::string(1, kind) + " logicals";
    if (l.rows() != k) {
        throw CodeError(label + ": expected " + std::to_string(k) + " rows, got " + std::to_string(l.rows()));
    }
    if (side.commute_with.rows() && !is_zero(mul_transpose(l, side.commute_with))) {
        throw CodeError(label + " do not commute with the opposite-type stabilizers");
    }
    if (rank(vstack(side.modulo, l)) != rank(side.modulo) + k) {
        throw CodeError(label + " are not independent modulo the stabilizer group");
    }
}

LogicalPair resolve_logicals(std::size_t n, std::size_t k, const Side &xs, const Side &zs, const LogicalSeed &seed) {
    LogicalPair out;
    auto seed_x = seed.x ? std::optional(coerce(*seed.x, n, "x logicals")) : std::nullopt;
    auto seed_z = seed.z ? std::optional(coerce(*seed.z, n, "z logicals")) : std::nullopt;
    if (seed_x && seed_z) {
        validate_side(*seed_x, xs, k, 'X');
        validate_side(*seed_z, zs, k, 'Z');
        auto pairing = mul_transpose(*seed_x, *seed_z);
        auto inv = inverse(pairing);
        if (!inv) {
            throw CodeError("supplied logicals have a singular pairing matrix Lx * Lz^T");
        }
        out.x = *seed_x;
        out.z = pairing == BinaryMatrix::identity(k) ? *seed_z : inv->transpose() * *seed_z;
        return out;
    }
    if (seed_z) {
        validate_side(*seed_z, zs, k, 'Z');
        out.z = *seed_z;
        out.x = dual_basis(xs, out.z);
        return out;
    }
    if (seed_x) {
        validate_side(*seed_x, xs, k, 'X');
        out.x = *seed_x;
    } else {
        out.x = logical_basis(xs, k);
    }
    out.z = dual_basis(zs, out.x);
    return out;
}

Side css_x_side(const BinaryMatrix &g, const BinaryMatrix &h) { return Side{h, g}; }
Side css_z_side(const BinaryMatrix &g, const BinaryMatrix &h) { return Side{g, h}; }

std::size_t min_nontrivial_weight(const BinaryMatrix &stabilizers, const BinaryMatrix &logicals) {
    const auto k = logicals.rows();
    auto rows = vstack(logicals, stabilizers);
    const auto total = rows.rows();
    BitVec current(rows.cols());
    std::uint64_t logical_part = 0;
    std::size_t best = std::numeric_limits<std::size_t>::max();
    // Gray-code walk over all coefficient vectors.
    for (std::uint64_t i = 1; i < (std::uint64_t{1} << total); ++i) {
        auto bit = static_cast<std::size_t>(std::countr_zero(i));
        current ^= rows.row(bit);
        if (bit < k) logical_part ^= std::uint64_t{1} << bit;
        if (logical_part != 0) {
            auto w = current.weight();
            if (w < best) best = w;
        }
    }
    return best;
}

}  // namespace

std::vector<PauliOperator> CssCode::stabilizer_generators() const {
    auto out = paulis_from_rows(PauliKind::X, g_);
    for (auto &p : paulis_from_rows(PauliKind::Z, h_)) out.push_back(std::move(p));
    return out;
}

CssCode new_css(std::size_t n, const BinaryMatrix &g_in, const BinaryMatrix &h_in, const LogicalSeed &seed,
                std::string name) {
    auto g = independent_rows(coerce(g_in, n, "x stabilizer matrix"));
    auto h = independent_rows(coerce(h_in, n, "z stabilizer matrix"));
    if (!is_zero(mul_transpose(g, h))) {
        throw CodeError("stabilizer matrices are not orthogonal: G * H^T != 0");
    }
    const auto k = n - g.rows() - h.rows();
    auto logicals = resolve_logicals(n, k, css_x_side(g, h), css_z_side(g, h), seed);
    CssCode code;
    code.n_ = n;
    code.g_ = std::move(g);
    code.h_ = std::move(h);
    code.lx_ = std::move(logicals.x);
    code.lz_ = std::move(logicals.z);
    code.name_ = std::move(name);
    return code;
}

LogicalPair compute_logicals(const BinaryMatrix &g, const BinaryMatrix &h) {
    const auto n = g.rows() ? g.cols() : h.cols();
    auto gi = independent_rows(coerce(g, n, "x stabilizer matrix"));
    auto hi = independent_rows(coerce(h, n, "z stabilizer matrix"));
    return resolve_logicals(n, n - gi.rows() - hi.rows(), css_x_side(gi, hi), css_z_side(gi, hi), {});
}

BinaryMatrix dual_logicals(const BinaryMatrix &g, const BinaryMatrix &lx, const BinaryMatrix &h) {
    return dual_basis(Side{g, h}, lx);
}

DistanceBreakdown distance_breakdown(const CssCode &code) {
    const auto k = code.k();
    if (k == 0) return {};
    const auto ex = code.x_stabilizers().rows() + k;
    const auto ez = code.z_stabilizers().rows() + k;
    const auto cap = std::uint64_t{1} << kDistanceBudgetLog2;
    if (ex > kDistanceBudgetLog2 || ez > kDistanceBudgetLog2 ||
        (std::uint64_t{1} << ex) + (std::uint64_t{1} << ez) > cap) {
        throw std::length_error("distance: enumeration budget 2^" + std::to_string(ex) + " + 2^" +
                                std::to_string(ez) + " exceeds 2^26");
    }
    return {min_nontrivial_weight(code.x_stabilizers(), code.x_logicals()),
            min_nontrivial_weight(code.z_stabilizers(), code.z_logicals())};
}

std::size_t distance(const CssCode &code) { return distance_breakdown(code).overall(); }

SupportedStabilizers stabilizers_supported_on(const CssCode &code, const std::vector<std::size_t> &subset) {
    std::vector<bool> inside(code.n(), false);
    for (auto q : subset) {
        if (q >= code.n()) throw std::out_of_range("stabilizers_supported_on: qubit outside the code");
        inside[q] = true;
    }
    std::vector<std::size_t> outside;
    for (std::size_t q = 0; q < code.n(); ++q) {
        if (!inside[q]) outside.push_back(q);
    }
    auto restricted = [&](const BinaryMatrix &m) {
        // u * m vanishes outside the subset  <=>  u in the left kernel of m|outside.
        auto coeffs = kernel(m.select_cols(outside).transpose());
        BinaryMatrix elements(0, code.n());
        for (const auto &u : coeffs.row_vectors()) {
            if (u.size() == m.rows()) elements.append_row(m.combine_rows(u));
        }
        auto r = rref(elements);
        BinaryMatrix basis(0, code.n());
        for (std::size_t i = 0; i < r.rank; ++i) basis.append_row(r.reduced.row(i));
        return basis;
    };
    return {restricted(code.x_stabilizers()), restricted(code.z_stabilizers())};
}

CssCode SubsystemCssCode::gauge_fixed(PauliKind kind) const {
    LogicalSeed seed{lx_, lz_};
    if (kind == PauliKind::X) return new_css(n_, vstack(sx_, gx_), sz_, seed);
    return new_css(n_, sx_, vstack(sz_, gz_), seed);
}

CssCode SubsystemCssCode::as_stabilizer_code() const {
    return new_css(n_, sx_, sz_, LogicalSeed{vstack(lx_, gx_), vstack(lz_, gz_)});
}

SubsystemCssCode new_subsystem(std::size_t n, const BinaryMatrix &sx_in, const BinaryMatrix &sz_in,
                               const BinaryMatrix &gx_raw_in, const BinaryMatrix &gz_raw_in, const LogicalSeed &seed,
                               std::string name) {
    auto sx = independent_rows(coerce(sx_in, n, "x stabilizer matrix"));
    auto sz = independent_rows(coerce(sz_in, n, "z stabilizer matrix"));
    auto gx_raw = coerce(gx_raw_in, n, "x gauge matrix");
    auto gz_raw = coerce(gz_raw_in, n, "z gauge matrix");
    if (!is_zero(mul_transpose(sx, sz))) {
        throw CodeError("stabilizer matrices are not orthogonal: Sx * Sz^T != 0");
    }
    if (!is_zero(mul_transpose(gx_raw, sz)) || !is_zero(mul_transpose(gz_raw, sx))) {
        throw CodeError("gauge operators do not commute with the stabilizers");
    }
    auto drop_stabilizers = [n](const BinaryMatrix &s, const BinaryMatrix &raw) {
        auto stacked = independent_rows(vstack(s, raw));
        BinaryMatrix out(0, n);
        for (std::size_t i = s.rows(); i < stacked.rows(); ++i) out.append_row(stacked.row(i));
        return out;
    };
    auto gx = drop_stabilizers(sx, gx_raw);
    auto gz = drop_stabilizers(sz, gz_raw);
    if (gx.rows() != gz.rows()) {
        throw CodeError("gauge group has " + std::to_string(gx.rows()) + " independent X rows but " +
                        std::to_string(gz.rows()) + " independent Z rows modulo stabilizers");
    }
    auto pairing = mul_transpose(gx, gz);
    auto inv = inverse(pairing);
    if (!inv) {
        throw CodeError("gauge pairing matrix is singular modulo stabilizers");
    }
    gz = inv->transpose() * gz;

    const auto r = gx.rows();
    // Each gauge pair occupies one qubit: n = m + k + r.
    const auto used = sx.rows() + sz.rows() + r;
    if (used > n) throw CodeError("too many independent stabilizer and gauge rows for n qubits");
    const auto k = n - used;
    Side xs{vstack(sz, gz), sx};
    Side zs{vstack(sx, gx), sz};
    auto logicals = resolve_logicals(n, k, xs, zs, seed);

    SubsystemCssCode code;
    code.n_ = n;
    code.sx_ = std::move(sx);
    code.sz_ = std::move(sz);
    code.gx_ = std::move(gx);
    code.gz_ = std::move(gz);
    code.lx_ = std::move(logicals.x);
    code.lz_ = std::move(logicals.z);
    code.name_ = std::move(name);
    return code;
}

std::string parameters_string(const CssCode &code, std::optional<std::size_t> d) {
    std::string s = "⟦" + std::to_string(code.n()) + "," + std::to_string(code.k());
    if (d) s += "," + std::to_string(*d);
    return s + "⟧";
}

}  // namespace csszx
