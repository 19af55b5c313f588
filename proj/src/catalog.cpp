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

#include <stdexcept>

#include "csszx/code.hpp"

namespace csszx {

namespace {

const std::vector<std::string> kSteaneRows = {
    "1010101",
    "0110011",
    "0001111",
};

BinaryMatrix x_bits(std::size_t n, std::vector<std::size_t> one_based) {
    for (auto &q : one_based) --q;
    BinaryMatrix m(0, n);
    m.append_row(BitVec::from_support(n, one_based));
    return m;
}

}  // namespace

BinaryMatrix steane_matrix() { return BinaryMatrix::from_strings(kSteaneRows); }

// F = [G 0 G; 0 1 1]
BinaryMatrix rm_f_matrix() {
    std::vector<std::string> rows;
    for (const auto &g : kSteaneRows) rows.push_back(g + "0" + g);
    rows.push_back("000000011111111");
    return BinaryMatrix::from_strings(rows);
}

// H = [G 0]
BinaryMatrix rm_h_matrix() {
    std::vector<std::string> rows;
    for (const auto &g : kSteaneRows) rows.push_back(g + "00000000");
    return BinaryMatrix::from_strings(rows);
}

BinaryMatrix rm_j_matrix() {
    return BinaryMatrix::from_strings({
        "101000001010000",
        "011000000110000",
        "001000100010001",
    });
}

std::vector<std::string> catalog_names() { return {"steane", "ext_steane", "qrm15", "sub15", "int15", "c422"}; }

CatalogEntry catalog(std::string_view name) {
    const auto g = steane_matrix();
    const auto f = rm_f_matrix();
    const auto h = rm_h_matrix();
    const auto j = rm_j_matrix();
    // Representatives X1 X4 X5 / Z1 Z4 Z5 (7 or 15 qubits) and X1..X7.
    auto edge7 = x_bits(7, {1, 4, 5});
    auto edge15 = x_bits(15, {1, 4, 5});
    auto face15 = x_bits(15, {1, 2, 3, 4, 5, 6, 7});

    if (name == "steane") {
        return new_css(7, g, g, LogicalSeed{edge7, edge7}, "steane");
    }
    if (name == "ext_steane") {
        auto s = vstack(f, h);
        return new_css(15, s, s, LogicalSeed{edge15, edge15}, "ext_steane");
    }
    if (name == "qrm15") {
        return new_css(15, f, vstack(vstack(f, h), j), LogicalSeed{face15, edge15}, "qrm15");
    }
    if (name == "sub15") {
        return new_subsystem(15, f, vstack(f, h), h, j, LogicalSeed{face15, edge15}, "sub15");
    }
    if (name == "int15") {
        auto sub = catalog_subsystem("sub15");
        auto code = sub.as_stabilizer_code();
        code.set_name("int15");
        return code;
    }
    if (name == "c422") {
        // Lx = (X1 X2, X1 X3); the Z side is the canonical dual basis.
        return new_css(4, BinaryMatrix::from_strings({"1111"}), BinaryMatrix::from_strings({"1111"}),
                       LogicalSeed{BinaryMatrix::from_strings({"1100", "1010"}), std::nullopt}, "c422");
    }
    throw std::out_of_range("unknown catalog code '" + std::string(name) + "'");
}

CssCode catalog_css(std::string_view name) {
    auto entry = catalog(name);
    if (auto *code = std::get_if<CssCode>(&entry)) return *code;
    throw std::invalid_argument("catalog entry '" + std::string(name) + "' is a subsystem code");
}

SubsystemCssCode catalog_subsystem(std::string_view name) {
    auto entry = catalog(name);
    if (auto *code = std::get_if<SubsystemCssCode>(&entry)) return *code;
    throw std::invalid_argument("catalog entry '" + std::string(name) + "' is not a subsystem code");
}

}  // namespace csszx
