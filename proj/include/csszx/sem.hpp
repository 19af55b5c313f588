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

#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "csszx/code.hpp"
#include "csszx/pauli.hpp"
#include "csszx/zx.hpp"

namespace csszx {

using Amplitude = std::complex<double>;

/// Dense 2^outputs x 2^inputs matrix. Wire 1 is the most significant bit of
/// both the row and the column index.
///
/// The true map is 2^(sqrt2_exponent/2) times the stored entries; evaluate()
/// keeps the stored entries integral.
class DenseMap {
   public:
    DenseMap() = default;
    DenseMap(std::size_t num_outputs, std::size_t num_inputs);

    static DenseMap identity(std::size_t wires);
    /// The 2^n x 2^n matrix of a Pauli operator (sites X^a Z^b).
    static DenseMap from_pauli(const PauliOperator &p);
    /// A single column holding the given amplitudes.
    static DenseMap column(std::vector<Amplitude> amplitudes);

    std::size_t num_inputs() const { return in_; }
    std::size_t num_outputs() const { return out_; }
    std::size_t rows() const { return std::size_t{1} << out_; }
    std::size_t cols() const { return std::size_t{1} << in_; }

    Amplitude &at(std::size_t row, std::size_t col) { return data_[row * cols() + col]; }
    const Amplitude &at(std::size_t row, std::size_t col) const { return data_[row * cols() + col]; }
    const std::vector<Amplitude> &data() const { return data_; }

    int sqrt2_exponent() const { return sqrt2_exponent_; }
    void set_sqrt2_exponent(int e) { sqrt2_exponent_ = e; }

    double max_abs() const;
    bool is_zero() const { return max_abs() == 0.0; }
    std::size_t nonzero_count(double eps = 0.0) const;
    DenseMap adjoint() const;

   private:
    std::size_t out_ = 0;
    std::size_t in_ = 0;
    std::vector<Amplitude> data_;
    int sqrt2_exponent_ = 0;
};

/// a * b (apply b first).
DenseMap operator*(const DenseMap &a, const DenseMap &b);
/// Kronecker product; wires of `a` are the more significant ones.
DenseMap kron(const DenseMap &a, const DenseMap &b);
/// P * m without forming the Pauli matrix.
DenseMap apply_pauli(const PauliOperator &p, const DenseMap &m);

/// Log2 of the largest number of boundary wires evaluate() accepts.
inline constexpr std::size_t kMaxBoundaryWires = 26;
/// Largest number of simultaneously open internal wires during contraction.
inline constexpr std::size_t kMaxFrontier = 128;

/// Contracts `d` spider by spider. Without an explicit order the next spider is
/// chosen greedily to keep the frontier small. Throws std::length_error when a
/// budget is exceeded.
DenseMap evaluate(const ZxDiagram &d, const std::optional<std::vector<VertexId>> &order = std::nullopt);

/// Columns sum_u |a Lx + u G> for each logical basis state a.
DenseMap encoder_oracle(const CssCode &code);

/// True when a = c b for some nonzero c within tol (relative to the larger
/// max-norm). Two zero maps are equal; a zero and a nonzero map are not.
/// Throws std::invalid_argument on a shape mismatch.
bool equal_up_to_scalar(const DenseMap &a, const DenseMap &b, double tol = 1e-9);

/// A^dagger A proportional to a nonzero multiple of the identity.
bool is_isometry(const DenseMap &a, double tol = 1e-9);

/// True when P m = m within tol.
bool stabilizes(const PauliOperator &p, const DenseMap &m, double tol = 1e-9);

/// Row-major [[{"re","im"}, ...], ...] JSON text.
std::string dense_to_json(const DenseMap &m);

}  // namespace csszx
