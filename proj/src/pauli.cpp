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

#include "csszx/pauli.hpp"

#include <charconv>
#include <stdexcept>

namespace csszx {

char to_char(PauliKind kind) { return kind == PauliKind::X ? 'X' : 'Z'; }

PauliKind opposite(PauliKind kind) { return kind == PauliKind::X ? PauliKind::Z : PauliKind::X; }

PauliOperator::PauliOperator(std::size_t n) : x_(n), z_(n) {}

PauliOperator::PauliOperator(BitVec x, BitVec z, bool negative)
    : x_(std::move(x)), z_(std::move(z)), negative_(negative) {
    if (x_.size() != z_.size()) {
        throw std::invalid_argument("PauliOperator: x and z parts have different lengths");
    }
}

PauliOperator PauliOperator::from_support(PauliKind kind, const std::vector<std::size_t> &support,
                                          std::size_t n) {
    return from_bits(kind, BitVec::from_support(n, support));
}

PauliOperator PauliOperator::from_bits(PauliKind kind, const BitVec &bits) {
    BitVec zero(bits.size());
    return kind == PauliKind::X ? PauliOperator(bits, zero) : PauliOperator(zero, bits);
}

PauliOperator PauliOperator::parse(std::string_view text, std::size_t n) {
    bool negative = false;
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    if (text == "I") {
        PauliOperator p(n);
        p.negative_ = negative;
        return p;
    }
    if (text.size() < 2 || (text[0] != 'X' && text[0] != 'Z') || text[1] != ':') {
        throw std::invalid_argument("Pauli text must look like 'X:1,2' or 'Z:3': got '" + std::string(text) + "'");
    }
    auto kind = text[0] == 'X' ? PauliKind::X : PauliKind::Z;
    text.remove_prefix(2);
    std::vector<std::size_t> support;
    while (!text.empty()) {
        auto comma = text.find(',');
        auto token = text.substr(0, comma);
        std::size_t index = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), index);
        if (ec != std::errc() || ptr != token.data() + token.size() || index == 0) {
            throw std::invalid_argument("bad qubit index '" + std::string(token) + "'");
        }
        if (index > n) {
            throw std::out_of_range("qubit index " + std::to_string(index) + " exceeds n = " + std::to_string(n));
        }
        support.push_back(index - 1);
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    auto p = from_support(kind, support, n);
    p.negative_ = negative;
    return p;
}

std::size_t PauliOperator::weight() const {
    BitVec any = x_;
    for (auto i : z_.support()) any.set(i, true);
    return any.weight();
}

std::string PauliOperator::str() const {
    std::string prefix = negative_ ? "-" : "";
    if (is_identity()) return prefix + "I";
    auto join = [](const std::vector<std::size_t> &s) {
        std::string out;
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(s[i] + 1);
        }
        return out;
    };
    if (is_x_type()) return prefix + "X:" + join(x_.support());
    if (is_z_type()) return prefix + "Z:" + join(z_.support());
    std::string sites = negative_ ? "-" : "+";
    for (std::size_t i = 0; i < num_qubits(); ++i) {
        bool a = x_.get(i), b = z_.get(i);
        // XZ at a site is written as Y only in text; the stored matrix is XZ.
        sites += a && b ? 'Y' : a ? 'X' : b ? 'Z' : 'I';
    }
    return sites;
}

bool commutes(const PauliOperator &p, const PauliOperator &q) {
    if (p.num_qubits() != q.num_qubits()) {
        throw std::invalid_argument("commutes: qubit count mismatch");
    }
    return p.x().dot(q.z()) == q.x().dot(p.z());
}

PauliOperator multiply(const PauliOperator &p, const PauliOperator &q) {
    if (p.num_qubits() != q.num_qubits()) {
        throw std::invalid_argument("multiply: qubit count mismatch");
    }
    // X^a Z^b X^c Z^d = (-1)^{b c} X^{a+c} Z^{b+d} at every site.
    bool negative = p.negative() ^ q.negative() ^ p.z().dot(q.x());
    return PauliOperator(p.x() ^ q.x(), p.z() ^ q.z(), negative);
}

std::optional<BitVec> in_group(const PauliOperator &p, const std::vector<PauliOperator> &generators) {
    const auto n = p.num_qubits();
    BinaryMatrix stacked(0, 2 * n);
    for (const auto &g : generators) {
        if (g.num_qubits() != n) {
            throw std::invalid_argument("in_group: qubit count mismatch");
        }
        BitVec row(2 * n);
        for (auto i : g.x().support()) row.set(i, true);
        for (auto i : g.z().support()) row.set(n + i, true);
        stacked.append_row(std::move(row));
    }
    BitVec target(2 * n);
    for (auto i : p.x().support()) target.set(i, true);
    for (auto i : p.z().support()) target.set(n + i, true);
    return solve(stacked, target);
}

std::vector<PauliOperator> paulis_from_rows(PauliKind kind, const BinaryMatrix &m) {
    std::vector<PauliOperator> out;
    out.reserve(m.rows());
    for (const auto &r : m.row_vectors()) out.push_back(PauliOperator::from_bits(kind, r));
    return out;
}

}  // namespace csszx
