// Copyright 2026 The Geocodes Authors
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

#include "geocodes/gf2.h"

#include <algorithm>
#include <utility>

#include "geocodes/errors.h"

namespace geocodes {

namespace {

constexpr size_t words_for(size_t num_bits) {
    return (num_bits + 63) >> 6;
}

// RREF restricted to pivots in columns [0, pivot_limit). Columns past the limit ride along.
std::vector<size_t> reduce_limited(BitMatrix &m, size_t pivot_limit) {
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < pivot_limit && r < m.num_rows(); c++) {
        size_t p = r;
        while (p < m.num_rows() && !m.get(p, c)) {
            p++;
        }
        if (p == m.num_rows()) {
            continue;
        }
        std::swap(m.row(p), m.row(r));
        const BitVec &pivot_row = m.row(r);
        for (size_t k = 0; k < m.num_rows(); k++) {
            if (k != r && m.get(k, c)) {
                m.row(k) ^= pivot_row;
            }
        }
        pivots.push_back(c);
        r++;
    }
    return pivots;
}

}  // namespace

BitVec::BitVec(size_t num_bits) : num_bits_(num_bits), words_(words_for(num_bits), 0) {
}

BitVec BitVec::from_string(std::string_view bits) {
    BitVec result(bits.size());
    for (size_t k = 0; k < bits.size(); k++) {
        if (bits[k] == '1') {
            result.set(k, true);
        } else if (bits[k] != '0') {
            throw ContractViolation("bit string may only contain '0' and '1': " + std::string(bits));
        }
    }
    return result;
}

BitVec BitVec::unit(size_t num_bits, size_t index) {
    BitVec result(num_bits);
    result.set(index, true);
    return result;
}

size_t BitVec::weight() const {
    size_t total = 0;
    for (uint64_t w : words_) {
        total += std::popcount(w);
    }
    return total;
}

bool BitVec::is_zero() const {
    return std::all_of(words_.begin(), words_.end(), [](uint64_t w) { return w == 0; });
}

size_t BitVec::first_one() const {
    for (size_t k = 0; k < words_.size(); k++) {
        if (words_[k]) {
            return (k << 6) + std::countr_zero(words_[k]);
        }
    }
    return num_bits_;
}

std::vector<size_t> BitVec::support() const {
    std::vector<size_t> result;
    for (size_t k = 0; k < words_.size(); k++) {
        uint64_t w = words_[k];
        while (w) {
            result.push_back((k << 6) + std::countr_zero(w));
            w &= w - 1;
        }
    }
    return result;
}

BitVec &BitVec::operator^=(const BitVec &other) {
    for (size_t k = 0; k < words_.size(); k++) {
        words_[k] ^= other.words_[k];
    }
    return *this;
}

BitVec &BitVec::operator&=(const BitVec &other) {
    for (size_t k = 0; k < words_.size(); k++) {
        words_[k] &= other.words_[k];
    }
    return *this;
}

BitVec &BitVec::operator|=(const BitVec &other) {
    for (size_t k = 0; k < words_.size(); k++) {
        words_[k] |= other.words_[k];
    }
    return *this;
}

bool BitVec::dot(const BitVec &other) const {
    uint64_t acc = 0;
    for (size_t k = 0; k < words_.size(); k++) {
        acc ^= words_[k] & other.words_[k];
    }
    return std::popcount(acc) & 1;
}

std::string BitVec::to_string() const {
    std::string result(num_bits_, '0');
    for (size_t k = 0; k < num_bits_; k++) {
        if (get(k)) {
            result[k] = '1';
        }
    }
    return result;
}

void BitVec::clear_tail() {
    if (num_bits_ & 63) {
        words_.back() &= (uint64_t{1} << (num_bits_ & 63)) - 1;
    }
}

BitMatrix::BitMatrix(size_t num_rows, size_t num_cols) : num_cols_(num_cols), rows_(num_rows, BitVec(num_cols)) {
}

BitMatrix BitMatrix::identity(size_t n) {
    BitMatrix result(n, n);
    for (size_t k = 0; k < n; k++) {
        result.set(k, k, true);
    }
    return result;
}

BitMatrix BitMatrix::from_strings(std::span<const std::string_view> rows) {
    BitMatrix result(0, rows.empty() ? 0 : rows.front().size());
    for (auto r : rows) {
        result.push_row(BitVec::from_string(r));
    }
    return result;
}

BitMatrix BitMatrix::from_strings(std::initializer_list<std::string_view> rows) {
    return from_strings(std::span<const std::string_view>(rows.begin(), rows.size()));
}

void BitMatrix::push_row(BitVec row) {
    if (rows_.empty() && num_cols_ == 0) {
        num_cols_ = row.size();
    }
    if (row.size() != num_cols_) {
        throw ContractViolation(
            "row length " + std::to_string(row.size()) + " does not match matrix width " + std::to_string(num_cols_));
    }
    rows_.push_back(std::move(row));
}

BitVec BitMatrix::multiply(const BitVec &v) const {
    if (v.size() != num_cols_) {
        throw ContractViolation("multiply: vector length does not match matrix width");
    }
    BitVec result(rows_.size());
    for (size_t r = 0; r < rows_.size(); r++) {
        result.set(r, rows_[r].dot(v));
    }
    return result;
}

BitMatrix BitMatrix::transposed() const {
    BitMatrix result(num_cols_, rows_.size());
    for (size_t r = 0; r < rows_.size(); r++) {
        for (size_t c : rows_[r].support()) {
            result.set(c, r, true);
        }
    }
    return result;
}

BitMatrix BitMatrix::select_columns(std::span<const size_t> cols) const {
    BitMatrix result(rows_.size(), cols.size());
    for (size_t r = 0; r < rows_.size(); r++) {
        for (size_t k = 0; k < cols.size(); k++) {
            if (rows_[r].get(cols[k])) {
                result.set(r, k, true);
            }
        }
    }
    return result;
}

namespace gf2 {

std::vector<size_t> reduce_to_rref(BitMatrix &m) {
    return reduce_limited(m, m.num_cols());
}

size_t rank(const BitMatrix &m) {
    BitMatrix work = m;
    return reduce_to_rref(work).size();
}

BitMatrix nullspace(const BitMatrix &m) {
    BitMatrix work = m;
    auto pivots = reduce_to_rref(work);
    std::vector<bool> is_pivot(m.num_cols(), false);
    for (size_t c : pivots) {
        is_pivot[c] = true;
    }
    BitMatrix basis(0, m.num_cols());
    for (size_t free_col = 0; free_col < m.num_cols(); free_col++) {
        if (is_pivot[free_col]) {
            continue;
        }
        BitVec v(m.num_cols());
        v.set(free_col, true);
        for (size_t r = 0; r < pivots.size(); r++) {
            if (work.get(r, free_col)) {
                v.set(pivots[r], true);
            }
        }
        basis.push_row(std::move(v));
    }
    return basis;
}

std::optional<BitVec> solve(const BitMatrix &m, const BitVec &b) {
    if (b.size() != m.num_rows()) {
        throw ContractViolation(
            "solve: right-hand side has length " + std::to_string(b.size()) + " but matrix has " +
            std::to_string(m.num_rows()) + " rows");
    }
    size_t n = m.num_cols();
    BitMatrix aug(m.num_rows(), n + 1);
    for (size_t r = 0; r < m.num_rows(); r++) {
        for (size_t c : m.row(r).support()) {
            aug.set(r, c, true);
        }
        aug.set(r, n, b.get(r));
    }
    auto pivots = reduce_limited(aug, n);
    for (size_t r = pivots.size(); r < aug.num_rows(); r++) {
        if (aug.get(r, n)) {
            return std::nullopt;
        }
    }
    BitVec x(n);
    for (size_t r = 0; r < pivots.size(); r++) {
        x.set(pivots[r], aug.get(r, n));
    }
    return x;
}

}  // namespace gf2

}  // namespace geocodes
