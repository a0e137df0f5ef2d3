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

#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace geocodes {

/// A fixed-length vector over GF(2), packed into 64-bit words.
///
/// Bits at positions >= size() in the last word are always zero, so weight() is a plain popcount
/// over the storage.
class BitVec {
   public:
    BitVec() = default;
    explicit BitVec(size_t num_bits);

    /// Parses a string of '0'/'1' characters; character i becomes bit i.
    static BitVec from_string(std::string_view bits);
    static BitVec unit(size_t num_bits, size_t index);

    size_t size() const {
        return num_bits_;
    }
    size_t num_words() const {
        return words_.size();
    }
    std::span<const uint64_t> words() const {
        return words_;
    }
    std::span<uint64_t> mutable_words() {
        return words_;
    }

    bool get(size_t k) const {
        return (words_[k >> 6] >> (k & 63)) & 1;
    }
    void set(size_t k, bool value) {
        uint64_t m = uint64_t{1} << (k & 63);
        if (value) {
            words_[k >> 6] |= m;
        } else {
            words_[k >> 6] &= ~m;
        }
    }
    void flip(size_t k) {
        words_[k >> 6] ^= uint64_t{1} << (k & 63);
    }

    size_t weight() const;
    bool is_zero() const;
    /// Index of the lowest set bit, or size() if the vector is zero.
    size_t first_one() const;
    std::vector<size_t> support() const;

    BitVec &operator^=(const BitVec &other);
    BitVec &operator&=(const BitVec &other);
    BitVec &operator|=(const BitVec &other);
    friend BitVec operator^(BitVec a, const BitVec &b) {
        return a ^= b;
    }
    friend BitVec operator&(BitVec a, const BitVec &b) {
        return a &= b;
    }
    friend BitVec operator|(BitVec a, const BitVec &b) {
        return a |= b;
    }
    bool operator==(const BitVec &other) const = default;

    /// Parity of the bitwise AND with another vector of the same length.
    bool dot(const BitVec &other) const;

    std::string to_string() const;

    /// Re-zeroes the bits past size() in the last word. Only needed after writing through mutable_words().
    void clear_tail();

   private:
    size_t num_bits_ = 0;
    std::vector<uint64_t> words_;
};

/// A dense GF(2) matrix stored as a list of packed rows.
class BitMatrix {
   public:
    BitMatrix() = default;
    BitMatrix(size_t num_rows, size_t num_cols);

    static BitMatrix identity(size_t n);
    static BitMatrix from_strings(std::span<const std::string_view> rows);
    static BitMatrix from_strings(std::initializer_list<std::string_view> rows);

    size_t num_rows() const {
        return rows_.size();
    }
    size_t num_cols() const {
        return num_cols_;
    }
    const BitVec &row(size_t r) const {
        return rows_[r];
    }
    BitVec &row(size_t r) {
        return rows_[r];
    }
    std::span<const BitVec> rows() const {
        return rows_;
    }
    bool get(size_t r, size_t c) const {
        return rows_[r].get(c);
    }
    void set(size_t r, size_t c, bool value) {
        rows_[r].set(c, value);
    }

    void push_row(BitVec row);

    /// Computes M * v for a column vector v of length num_cols().
    BitVec multiply(const BitVec &v) const;
    BitMatrix transposed() const;
    /// The submatrix keeping only the listed columns, in the listed order.
    BitMatrix select_columns(std::span<const size_t> cols) const;

    bool operator==(const BitMatrix &other) const = default;

   private:
    size_t num_cols_ = 0;
    std::vector<BitVec> rows_;
};

namespace gf2 {

/// Row rank over GF(2). The input is not modified.
size_t rank(const BitMatrix &m);

/// Basis of {v : M v = 0}, one basis vector per row. Row count equals num_cols() - rank(m).
BitMatrix nullspace(const BitMatrix &m);

/// Some x with M x = b, or nullopt if the system is inconsistent.
/// Throws ContractViolation if b.size() != m.num_rows().
std::optional<BitVec> solve(const BitMatrix &m, const BitVec &b);

/// Row-reduces `m` in place to reduced row echelon form and returns the pivot column of each
/// nonzero row (rows past the returned size are zero).
std::vector<size_t> reduce_to_rref(BitMatrix &m);

}  // namespace gf2

}  // namespace geocodes
