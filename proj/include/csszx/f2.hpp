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
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace csszx {

/// Bit-packed vector over GF(2).
class BitVec {
   public:
    BitVec() = default;
    explicit BitVec(std::size_t size);

    /// Vector of length `size` with ones at the given 0-based positions.
    static BitVec from_support(std::size_t size, std::initializer_list<std::size_t> ones);
    static BitVec from_support(std::size_t size, const std::vector<std::size_t> &ones);
    /// Parses '0'/'1' characters; the leftmost character is position 0.
    static BitVec from_string(std::string_view bits);

    std::size_t size() const { return size_; }
    bool empty() const { return size_ == 0; }
    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    void set(std::size_t i, bool value);
    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    BitVec &operator^=(const BitVec &other);
    BitVec &operator&=(const BitVec &other);
    friend BitVec operator^(BitVec a, const BitVec &b) { return a ^= b; }
    friend BitVec operator&(BitVec a, const BitVec &b) { return a &= b; }

    bool is_zero() const;
    std::size_t weight() const;
    /// Parity of the inner product.
    bool dot(const BitVec &other) const;
    std::vector<std::size_t> support() const;
    /// Lowest set position, or size() if zero.
    std::size_t first_one() const;
    std::string to_string() const;

    const std::vector<std::uint64_t> &words() const { return words_; }

    friend bool operator==(const BitVec &a, const BitVec &b) = default;
    friend bool operator<(const BitVec &a, const BitVec &b);

   private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Dense binary matrix stored as bit-packed rows.
class BinaryMatrix {
   public:
    BinaryMatrix() = default;
    BinaryMatrix(std::size_t rows, std::size_t cols);
    /// All rows must have length `cols`.
    BinaryMatrix(std::size_t cols, std::vector<BitVec> rows);

    static BinaryMatrix identity(std::size_t n);
    /// Each string is one row; all strings must have equal length.
    static BinaryMatrix from_strings(const std::vector<std::string> &rows, std::size_t cols = 0);

    std::size_t rows() const { return data_.size(); }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const { return data_[r].get(c); }
    void set(std::size_t r, std::size_t c, bool v) { data_[r].set(c, v); }
    const BitVec &row(std::size_t r) const { return data_[r]; }
    BitVec &row(std::size_t r) { return data_[r]; }
    const std::vector<BitVec> &row_vectors() const { return data_; }

    void append_row(BitVec row);
    void xor_row_into(std::size_t src, std::size_t dst) { data_[dst] ^= data_[src]; }
    void swap_rows(std::size_t a, std::size_t b) { std::swap(data_[a], data_[b]); }

    BinaryMatrix transpose() const;
    /// Rows selected by index, in the given order.
    BinaryMatrix select_rows(const std::vector<std::size_t> &idx) const;
    /// Restriction to the given columns, in the given order.
    BinaryMatrix select_cols(const std::vector<std::size_t> &idx) const;
    /// Row-vector times matrix: sum of rows where `coeffs` is set.
    BitVec combine_rows(const BitVec &coeffs) const;

    std::vector<std::string> to_strings() const;

    friend bool operator==(const BinaryMatrix &a, const BinaryMatrix &b) = default;

   private:
    std::size_t cols_ = 0;
    std::vector<BitVec> data_;
};

/// Matrix product over GF(2).
BinaryMatrix operator*(const BinaryMatrix &a, const BinaryMatrix &b);
/// a * transpose(b), computed with row dot products.
BinaryMatrix mul_transpose(const BinaryMatrix &a, const BinaryMatrix &b);
/// Stacks `bottom` under `top`. Column counts must agree unless one side has no rows.
BinaryMatrix vstack(const BinaryMatrix &top, const BinaryMatrix &bottom);
BinaryMatrix hstack(const BinaryMatrix &left, const BinaryMatrix &right);

struct RrefResult {
    BinaryMatrix reduced;    ///< transform * input, in reduced row-echelon form
    BinaryMatrix transform;  ///< invertible rows x rows matrix
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;  ///< pivot column of each nonzero row of `reduced`
};

RrefResult rref(const BinaryMatrix &m);
std::size_t rank(const BinaryMatrix &m);
/// Basis (as rows) of {v : m * v^T = 0}.
BinaryMatrix kernel(const BinaryMatrix &m);
/// Returns x with x * m = b (b is a row-space membership query), if one exists.
std::optional<BitVec> solve(const BinaryMatrix &m, const BitVec &b);
/// Inverse of a square matrix, if it is invertible.
std::optional<BinaryMatrix> inverse(const BinaryMatrix &m);

/// Greedy order-preserving subset of rows that is linearly independent.
BinaryMatrix independent_rows(const BinaryMatrix &m);
bool in_row_space(const BinaryMatrix &m, const BitVec &v);
bool row_space_equal(const BinaryMatrix &a, const BinaryMatrix &b);
/// Canonical representative of v modulo row-space(m) (pivot positions cleared).
BitVec reduce_modulo(const RrefResult &basis, BitVec v);

}  // namespace csszx
