// Copyright 2026 The paulilogic Authors
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

#ifndef PAULILOGIC_GF2_H
#define PAULILOGIC_GF2_H

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace paulilogic {

/// A fixed-length vector over GF(2), packed 64 bits per word.
///
/// Bits past `size()` in the last word are kept at zero so that word-level
/// comparisons and popcounts are exact.
class BitVector {
   public:
    BitVector() = default;
    explicit BitVector(size_t num_bits);
    BitVector(std::initializer_list<int> bits);

    /// Parses a string of '0'/'1' characters. Separators ',' ' ' '|' are skipped.
    static BitVector from_string(std::string_view text);
    /// The unit vector with a single 1 at `index`.
    static BitVector unit(size_t num_bits, size_t index);

    size_t size() const {
        return num_bits_;
    }
    size_t num_words() const {
        return words_.size();
    }
    const std::vector<uint64_t> &words() const {
        return words_;
    }

    bool operator[](size_t index) const {
        return (words_[index >> 6] >> (index & 63)) & 1;
    }
    bool get(size_t index) const;
    void set(size_t index, bool value);
    void flip(size_t index);

    BitVector &operator^=(const BitVector &other);
    BitVector &operator&=(const BitVector &other);
    BitVector operator^(const BitVector &other) const;
    BitVector operator&(const BitVector &other) const;
    bool operator==(const BitVector &other) const = default;

    bool is_zero() const;
    size_t popcount() const;
    /// Sum of all bits mod 2.
    bool parity() const;
    /// Parity of the elementwise AND, i.e. the ordinary GF(2) dot product.
    bool dot(const BitVector &other) const;

    /// Copies `length` bits starting at `start`.
    BitVector slice(size_t start, size_t length) const;
    /// Concatenates `head` followed by `tail`.
    static BitVector concat(const BitVector &head, const BitVector &tail);

    std::string str() const;

   private:
    void check_same_size(const BitVector &other) const;

    size_t num_bits_ = 0;
    std::vector<uint64_t> words_;
};

/// A rectangular matrix over GF(2) stored as a list of packed rows.
class BitMatrix {
   public:
    BitMatrix() = default;
    BitMatrix(size_t num_rows, size_t num_cols);
    explicit BitMatrix(std::vector<BitVector> rows);
    /// Zero rows with an explicit column count (so empty matrices still have a width).
    static BitMatrix with_cols(std::vector<BitVector> rows, size_t num_cols);
    static BitMatrix identity(size_t n);

    size_t num_rows() const {
        return rows_.size();
    }
    size_t num_cols() const {
        return num_cols_;
    }
    const BitVector &row(size_t index) const {
        return rows_[index];
    }
    const std::vector<BitVector> &rows() const {
        return rows_;
    }
    bool get(size_t r, size_t c) const {
        return rows_[r][c];
    }
    void set(size_t r, size_t c, bool value) {
        rows_[r].set(c, value);
    }

    BitMatrix transposed() const;
    /// Sum (XOR) of the rows selected by `coefficients`.
    BitVector combine_rows(const BitVector &coefficients) const;

    bool operator==(const BitMatrix &other) const = default;
    std::string str() const;

   private:
    size_t num_cols_ = 0;
    std::vector<BitVector> rows_;
};

/// Row rank over GF(2). An empty matrix has rank 0.
size_t rank(const BitMatrix &m);

/// Finds coefficients k with sum_p k_p * basis.row(p) == v (mod 2).
///
/// Elimination picks pivot columns left to right and, within a column, the
/// first unused row holding a 1, so the result is reproducible. When the basis
/// rows are independent the coefficients are unique.
///
/// Throws std::invalid_argument if v.size() != basis.num_cols().
std::optional<BitVector> in_span(const BitVector &v, const BitMatrix &basis);

/// Symplectic form on (x | z) vectors of length 2N:
/// sum_j x1_j z2_j + z1_j x2_j (mod 2). Zero iff the matching Paulis commute.
///
/// Throws std::invalid_argument on odd or mismatched lengths.
bool symplectic_product(const BitVector &v1, const BitVector &v2);

}  // namespace paulilogic

#endif
