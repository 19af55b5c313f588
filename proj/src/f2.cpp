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

#include "csszx/f2.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace csszx {

namespace {

std::size_t words_for(std::size_t bits) { return (bits + 63) / 64; }

}  // namespace

BitVec::BitVec(std::size_t size) : size_(size), words_(words_for(size), 0) {}

BitVec BitVec::from_support(std::size_t size, std::initializer_list<std::size_t> ones) {
    return from_support(size, std::vector<std::size_t>(ones));
}

BitVec BitVec::from_support(std::size_t size, const std::vector<std::size_t> &ones) {
    BitVec v(size);
    for (auto i : ones) {
        if (i >= size) {
            throw std::out_of_range("BitVec::from_support: index " + std::to_string(i) +
                                    " out of range for length " + std::to_string(size));
        }
        v.set(i, true);
    }
    return v;
}

BitVec BitVec::from_string(std::string_view bits) {
    BitVec v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1') {
            v.set(i, true);
        } else if (bits[i] != '0') {
            throw std::invalid_argument("bitstring contains a character other than '0'/'1': " +
                                        std::string(bits));
        }
    }
    return v;
}

void BitVec::set(std::size_t i, bool value) {
    auto mask = std::uint64_t{1} << (i & 63);
    if (value) {
        words_[i >> 6] |= mask;
    } else {
        words_[i >> 6] &= ~mask;
    }
}

BitVec &BitVec::operator^=(const BitVec &other) {
    if (other.size_ != size_) {
        throw std::invalid_argument("BitVec xor: length mismatch");
    }
    for (std::size_t w = 0; w < words_.size(); ++w) {
        words_[w] ^= other.words_[w];
    }
    return *this;
}

BitVec &BitVec::operator&=(const BitVec &other) {
    if (other.size_ != size_) {
        throw std::invalid_argument("BitVec and: length mismatch");
    }
    for (std::size_t w = 0; w < words_.size(); ++w) {
        words_[w] &= other.words_[w];
    }
    return *this;
}

bool BitVec::is_zero() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t BitVec::weight() const {
    std::size_t total = 0;
    for (auto w : words_) {
        total += static_cast<std::size_t>(std::popcount(w));
    }
    return total;
}

bool BitVec::dot(const BitVec &other) const {
    if (other.size_ != size_) {
        throw std::invalid_argument("BitVec dot: length mismatch");
    }
    std::uint64_t acc = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        acc ^= words_[w] & other.words_[w];
    }
    return std::popcount(acc) & 1;
}

std::vector<std::size_t> BitVec::support() const {
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        auto word = words_[w];
        while (word) {
            out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(word)));
            word &= word - 1;
        }
    }
    return out;
}

std::size_t BitVec::first_one() const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
        if (words_[w]) {
            return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
        }
    }
    return size_;
}

std::string BitVec::to_string() const {
    std::string s(size_, '0');
    for (std::size_t i = 0; i < size_; ++i) {
        if (get(i)) s[i] = '1';
    }
    return s;
}

bool operator<(const BitVec &a, const BitVec &b) {
    if (a.size_ != b.size_) return a.size_ < b.size_;
    // Lexicographic on the string form.
    for (std::size_t i = 0; i < a.size_; ++i) {
        if (a.get(i) != b.get(i)) return b.get(i);
    }
    return false;
}

BinaryMatrix::BinaryMatrix(std::size_t rows, std::size_t cols) : cols_(cols), data_(rows, BitVec(cols)) {}

BinaryMatrix::BinaryMatrix(std::size_t cols, std::vector<BitVec> rows) : cols_(cols), data_(std::move(rows)) {
    for (const auto &r : data_) {
        if (r.size() != cols_) {
            throw std::invalid_argument("BinaryMatrix: row length " + std::to_string(r.size()) +
                                        " does not match column count " + std::to_string(cols_));
        }
    }
}

BinaryMatrix BinaryMatrix::identity(std::size_t n) {
    BinaryMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

BinaryMatrix BinaryMatrix::from_strings(const std::vector<std::string> &rows, std::size_t cols) {
    if (!rows.empty()) cols = rows.front().size();
    std::vector<BitVec> data;
    data.reserve(rows.size());
    for (const auto &r : rows) data.push_back(BitVec::from_string(r));
    return BinaryMatrix(cols, std::move(data));
}

void BinaryMatrix::append_row(BitVec row) {
    if (row.size() != cols_) {
        throw std::invalid_argument("BinaryMatrix::append_row: length mismatch");
    }
    data_.push_back(std::move(row));
}

BinaryMatrix BinaryMatrix::transpose() const {
    BinaryMatrix t(cols_, rows());
    for (std::size_t r = 0; r < rows(); ++r) {
        for (auto c : data_[r].support()) t.set(c, r, true);
    }
    return t;
}

BinaryMatrix BinaryMatrix::select_rows(const std::vector<std::size_t> &idx) const {
    BinaryMatrix out(0, cols_);
    for (auto i : idx) out.append_row(data_.at(i));
    return out;
}

BinaryMatrix BinaryMatrix::select_cols(const std::vector<std::size_t> &idx) const {
    BinaryMatrix out(rows(), idx.size());
    for (std::size_t r = 0; r < rows(); ++r) {
        for (std::size_t j = 0; j < idx.size(); ++j) {
            if (data_[r].get(idx[j])) out.set(r, j, true);
        }
    }
    return out;
}

BitVec BinaryMatrix::combine_rows(const BitVec &coeffs) const {
    if (coeffs.size() != rows()) {
        throw std::invalid_argument("BinaryMatrix::combine_rows: coefficient length mismatch");
    }
    BitVec out(cols_);
    for (auto i : coeffs.support()) out ^= data_[i];
    return out;
}

std::vector<std::string> BinaryMatrix::to_strings() const {
    std::vector<std::string> out;
    out.reserve(rows());
    for (const auto &r : data_) out.push_back(r.to_string());
    return out;
}

BinaryMatrix operator*(const BinaryMatrix &a, const BinaryMatrix &b) {
    if (a.cols() != b.rows()) {
        throw std::invalid_argument("BinaryMatrix multiply: inner dimension mismatch");
    }
    BinaryMatrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) out.row(r) = b.combine_rows(a.row(r));
    return out;
}

BinaryMatrix mul_transpose(const BinaryMatrix &a, const BinaryMatrix &b) {
    if (a.cols() != b.cols()) {
        throw std::invalid_argument("mul_transpose: column count mismatch");
    }
    BinaryMatrix out(a.rows(), b.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < b.rows(); ++j) {
            if (a.row(i).dot(b.row(j))) out.set(i, j, true);
        }
    }
    return out;
}

BinaryMatrix vstack(const BinaryMatrix &top, const BinaryMatrix &bottom) {
    if (top.rows() == 0 && top.cols() != bottom.cols()) return bottom;
    if (bottom.rows() == 0 && top.cols() != bottom.cols()) return top;
    if (top.cols() != bottom.cols()) {
        throw std::invalid_argument("vstack: column count mismatch");
    }
    BinaryMatrix out = top;
    for (const auto &r : bottom.row_vectors()) out.append_row(r);
    return out;
}

BinaryMatrix hstack(const BinaryMatrix &left, const BinaryMatrix &right) {
    if (left.rows() != right.rows()) {
        throw std::invalid_argument("hstack: row count mismatch");
    }
    BinaryMatrix out(left.rows(), left.cols() + right.cols());
    for (std::size_t r = 0; r < left.rows(); ++r) {
        for (auto c : left.row(r).support()) out.set(r, c, true);
        for (auto c : right.row(r).support()) out.set(r, left.cols() + c, true);
    }
    return out;
}

RrefResult rref(const BinaryMatrix &m) {
    RrefResult res{m, BinaryMatrix::identity(m.rows()), 0, {}};
    auto &a = res.reduced;
    auto &t = res.transform;
    std::size_t lead = 0;
    for (std::size_t c = 0; c < m.cols() && lead < m.rows(); ++c) {
        std::size_t p = lead;
        while (p < m.rows() && !a.get(p, c)) ++p;
        if (p == m.rows()) continue;
        a.swap_rows(p, lead);
        t.swap_rows(p, lead);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r != lead && a.get(r, c)) {
                a.xor_row_into(lead, r);
                t.xor_row_into(lead, r);
            }
        }
        res.pivots.push_back(c);
        ++lead;
    }
    res.rank = lead;
    return res;
}

std::size_t rank(const BinaryMatrix &m) { return rref(m).rank; }

BinaryMatrix kernel(const BinaryMatrix &m) {
    auto r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : r.pivots) is_pivot[p] = true;
    BinaryMatrix out(0, m.cols());
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        BitVec v(m.cols());
        v.set(free, true);
        for (std::size_t i = 0; i < r.rank; ++i) {
            if (r.reduced.get(i, free)) v.set(r.pivots[i], true);
        }
        out.append_row(std::move(v));
    }
    return out;
}

BitVec reduce_modulo(const RrefResult &basis, BitVec v) {
    for (std::size_t i = 0; i < basis.rank; ++i) {
        if (v.get(basis.pivots[i])) v ^= basis.reduced.row(i);
    }
    return v;
}

std::optional<BitVec> solve(const BinaryMatrix &m, const BitVec &b) {
    if (b.size() != m.cols()) {
        throw std::invalid_argument("solve: right-hand side length " + std::to_string(b.size()) +
                                    " does not match column count " + std::to_string(m.cols()));
    }
    auto r = rref(m);
    BitVec residual = b;
    BitVec combo(m.rows());  // coefficients over rows of r.reduced
    for (std::size_t i = 0; i < r.rank; ++i) {
        if (residual.get(r.pivots[i])) {
            residual ^= r.reduced.row(i);
            combo.set(i, true);
        }
    }
    if (!residual.is_zero()) return std::nullopt;
    // combo * reduced = b and reduced = transform * m, so x = combo * transform.
    return r.transform.combine_rows(combo);
}

std::optional<BinaryMatrix> inverse(const BinaryMatrix &m) {
    if (m.rows() != m.cols()) {
        throw std::invalid_argument("inverse: matrix is not square");
    }
    auto r = rref(m);
    if (r.rank != m.rows()) return std::nullopt;
    return r.transform;
}

BinaryMatrix independent_rows(const BinaryMatrix &m) {
    BinaryMatrix out(0, m.cols());
    BinaryMatrix echelon(0, m.cols());
    std::vector<std::size_t> pivots;
    for (const auto &row : m.row_vectors()) {
        BitVec v = row;
        for (std::size_t i = 0; i < echelon.rows(); ++i) {
            if (v.get(pivots[i])) v ^= echelon.row(i);
        }
        if (v.is_zero()) continue;
        pivots.push_back(v.first_one());
        echelon.append_row(std::move(v));
        out.append_row(row);
    }
    return out;
}

bool in_row_space(const BinaryMatrix &m, const BitVec &v) { return solve(m, v).has_value(); }

bool row_space_equal(const BinaryMatrix &a, const BinaryMatrix &b) {
    if (a.cols() != b.cols()) return a.rows() == 0 && b.rows() == 0;
    auto ra = rank(a);
    if (ra != rank(b)) return false;
    return rank(vstack(a, b)) == ra;
}

}  // namespace csszx
