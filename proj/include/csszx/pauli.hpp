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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "csszx/f2.hpp"

namespace csszx {

enum class PauliKind { X, Z };

char to_char(PauliKind kind);
PauliKind opposite(PauliKind kind);

/// n-qubit Pauli operator sign * prod_i X_i^{x_i} Z_i^{z_i}.
///
/// Each site is stored as X^a Z^b (in that order), so a site with a = b = 1 is
/// the matrix XZ = -iY. Phases are restricted to +-1; multiply() tracks the
/// sign exactly under this convention.
class PauliOperator {
   public:
    PauliOperator() = default;
    explicit PauliOperator(std::size_t n);
    PauliOperator(BitVec x, BitVec z, bool negative = false);

    /// Pure X- or Z-type operator with the given 0-based support.
    static PauliOperator from_support(PauliKind kind, const std::vector<std::size_t> &support, std::size_t n);
    static PauliOperator from_bits(PauliKind kind, const BitVec &bits);
    /// Parses "X:1,4,5", "-Z:2,3" (1-based indices) or "I" for the identity.
    static PauliOperator parse(std::string_view text, std::size_t n);

    std::size_t num_qubits() const { return x_.size(); }
    const BitVec &x() const { return x_; }
    const BitVec &z() const { return z_; }
    bool negative() const { return negative_; }
    int sign() const { return negative_ ? -1 : 1; }

    std::size_t weight() const;
    bool is_identity() const { return x_.is_zero() && z_.is_zero(); }
    bool is_x_type() const { return z_.is_zero(); }
    bool is_z_type() const { return x_.is_zero(); }

    /// "X:1,4,5" style text; mixed operators use a per-site string like "+XIZ".
    std::string str() const;

    friend bool operator==(const PauliOperator &, const PauliOperator &) = default;

   private:
    BitVec x_;
    BitVec z_;
    bool negative_ = false;
};

bool commutes(const PauliOperator &p, const PauliOperator &q);
/// Matrix product p * q.
PauliOperator multiply(const PauliOperator &p, const PauliOperator &q);

/// Coefficients c with prod_i generators[i]^{c_i} equal to p up to sign, if any.
std::optional<BitVec> in_group(const PauliOperator &p, const std::vector<PauliOperator> &generators);

/// Rows of `m` as `kind`-type operators.
std::vector<PauliOperator> paulis_from_rows(PauliKind kind, const BinaryMatrix &m);

}  // namespace csszx
