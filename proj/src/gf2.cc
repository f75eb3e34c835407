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

#include "paulilogic/gf2.h"

#include <bit>
#include <stdexcept>
#include <utility>

namespace paulilogic {

namespace {

size_t words_for(size_t num_bits) {
    return (num_bits + 63) >> 6;
}

// Row paired with the combination of original rows that produced it.
struct TrackedRow {
    BitVector value;
    BitVector origin;
};

struct Echelon {
    std::vector<TrackedRow> rows;
    std::vector<size_t> pivot_cols;  // pivot_cols[i] is the pivot of rows[i]
};

// Reduced row echelon form. Pivots are taken left to right; within a column the
// first row (in current order) holding a 1 is swapped into place.
Echelon reduce(const BitMatrix &m) {
    Echelon e;
    e.rows.reserve(m.num_rows());
    for (size_t r = 0; r < m.num_rows(); r++) {
        e.rows.push_back({m.row(r), BitVector::unit(m.num_rows(), r)});
    }
    size_t pivot_row = 0;
    for (size_t c = 0; c < m.num_cols() && pivot_row < e.rows.size(); c++) {
        size_t found = pivot_row;
        while (found < e.rows.size() && !e.rows[found].value[c]) {
            found++;
        }
        if (found == e.rows.size()) {
            continue;
        }
        std::swap(e.rows[pivot_row], e.rows[found]);
        const TrackedRow &pivot = e.rows[pivot_row];
        for (size_t r = 0; r < e.rows.size(); r++) {
            if (r != pivot_row && e.rows[r].value[c]) {
                e.rows[r].value ^= pivot.value;
                e.rows[r].origin ^= pivot.origin;
            }
        }
        e.pivot_cols.push_back(c);
        pivot_row++;
    }
    return e;
}

}  // namespace

BitVector::BitVector(size_t num_bits) : num_bits_(num_bits), words_(words_for(num_bits), 0) {
}

BitVector::BitVector(std::initializer_list<int> bits) : BitVector(bits.size()) {
    size_t k = 0;
    for (int b : bits) {
        if (b != 0 && b != 1) {
            throw std::invalid_argument("BitVector entries must be 0 or 1");
        }
        set(k++, b == 1);
    }
}

BitVector BitVector::from_string(std::string_view text) {
    std::vector<bool> bits;
    for (char c : text) {
        if (c == '0' || c == '1') {
            bits.push_back(c == '1');
        } else if (c != ',' && c != ' ' && c != '|' && c != '(' && c != ')') {
            throw std::invalid_argument("Unexpected character '" + std::string(1, c) + "' in bit string");
        }
    }
    BitVector result(bits.size());
    for (size_t k = 0; k < bits.size(); k++) {
        result.set(k, bits[k]);
    }
    return result;
}

BitVector BitVector::unit(size_t num_bits, size_t index) {
    BitVector result(num_bits);
    result.set(index, true);
    return result;
}

bool BitVector::get(size_t index) const {
    if (index >= num_bits_) {
        throw std::out_of_range("BitVector index out of range");
    }
    return (*this)[index];
}

void BitVector::set(size_t index, bool value) {
    if (index >= num_bits_) {
        throw std::out_of_range("BitVector index out of range");
    }
    uint64_t mask = uint64_t{1} << (index & 63);
    if (value) {
        words_[index >> 6] |= mask;
    } else {
        words_[index >> 6] &= ~mask;
    }
}

void BitVector::flip(size_t index) {
    if (index >= num_bits_) {
        throw std::out_of_range("BitVector index out of range");
    }
    words_[index >> 6] ^= uint64_t{1} << (index & 63);
}

void BitVector::check_same_size(const BitVector &other) const {
    if (num_bits_ != other.num_bits_) {
        throw std::invalid_argument(
            "BitVector size mismatch: " + std::to_string(num_bits_) + " vs " + std::to_string(other.num_bits_));
    }
}

BitVector &BitVector::operator^=(const BitVector &other) {
    check_same_size(other);
    for (size_t k = 0; k < words_.size(); k++) {
        words_[k] ^= other.words_[k];
    }
    return *this;
}

BitVector &BitVector::operator&=(const BitVector &other) {
    check_same_size(other);
    for (size_t k = 0; k < words_.size(); k++) {
        words_[k] &= other.words_[k];
    }
    return *this;
}

BitVector BitVector::operator^(const BitVector &other) const {
    BitVector result = *this;
    result ^= other;
    return result;
}

BitVector BitVector::operator&(const BitVector &other) const {
    BitVector result = *this;
    result &= other;
    return result;
}

bool BitVector::is_zero() const {
    for (uint64_t w : words_) {
        if (w) {
            return false;
        }
    }
    return true;
}

size_t BitVector::popcount() const {
    size_t total = 0;
    for (uint64_t w : words_) {
        total += std::popcount(w);
    }
    return total;
}

bool BitVector::parity() const {
    uint64_t acc = 0;
    for (uint64_t w : words_) {
        acc ^= w;
    }
    return std::popcount(acc) & 1;
}

bool BitVector::dot(const BitVector &other) const {
    check_same_size(other);
    uint64_t acc = 0;
    for (size_t k = 0; k < words_.size(); k++) {
        acc ^= words_[k] & other.words_[k];
    }
    return std::popcount(acc) & 1;
}

BitVector BitVector::slice(size_t start, size_t length) const {
    if (start + length > num_bits_) {
        throw std::out_of_range("BitVector slice out of range");
    }
    BitVector result(length);
    size_t shift = start & 63;
    size_t base = start >> 6;
    for (size_t k = 0; k < result.words_.size(); k++) {
        uint64_t lo = words_[base + k] >> shift;
        uint64_t hi = 0;
        if (shift && base + k + 1 < words_.size()) {
            hi = words_[base + k + 1] << (64 - shift);
        }
        result.words_[k] = lo | hi;
    }
    if (length & 63) {
        result.words_.back() &= (uint64_t{1} << (length & 63)) - 1;
    }
    return result;
}

BitVector BitVector::concat(const BitVector &head, const BitVector &tail) {
    BitVector result(head.size() + tail.size());
    for (size_t k = 0; k < head.words_.size(); k++) {
        result.words_[k] = head.words_[k];
    }
    size_t shift = head.size() & 63;
    size_t base = head.size() >> 6;
    for (size_t k = 0; k < tail.words_.size(); k++) {
        result.words_[base + k] |= tail.words_[k] << shift;
        if (shift && base + k + 1 < result.words_.size()) {
            result.words_[base + k + 1] |= tail.words_[k] >> (64 - shift);
        }
    }
    return result;
}

std::string BitVector::str() const {
    std::string result;
    result.reserve(num_bits_);
    for (size_t k = 0; k < num_bits_; k++) {
        result.push_back((*this)[k] ? '1' : '0');
    }
    return result;
}

BitMatrix::BitMatrix(size_t num_rows, size_t num_cols) : num_cols_(num_cols), rows_(num_rows, BitVector(num_cols)) {
}

BitMatrix::BitMatrix(std::vector<BitVector> rows) : rows_(std::move(rows)) {
    if (!rows_.empty()) {
        num_cols_ = rows_.front().size();
    }
    for (const auto &r : rows_) {
        if (r.size() != num_cols_) {
            throw std::invalid_argument("BitMatrix rows must all have the same length");
        }
    }
}

BitMatrix BitMatrix::with_cols(std::vector<BitVector> rows, size_t num_cols) {
    for (const auto &r : rows) {
        if (r.size() != num_cols) {
            throw std::invalid_argument("BitMatrix rows must all have the same length");
        }
    }
    BitMatrix result;
    result.num_cols_ = num_cols;
    result.rows_ = std::move(rows);
    return result;
}

BitMatrix BitMatrix::identity(size_t n) {
    BitMatrix result(n, n);
    for (size_t k = 0; k < n; k++) {
        result.set(k, k, true);
    }
    return result;
}

BitMatrix BitMatrix::transposed() const {
    BitMatrix result(num_cols_, rows_.size());
    for (size_t r = 0; r < rows_.size(); r++) {
        for (size_t c = 0; c < num_cols_; c++) {
            if (rows_[r][c]) {
                result.set(c, r, true);
            }
        }
    }
    return result;
}

BitVector BitMatrix::combine_rows(const BitVector &coefficients) const {
    if (coefficients.size() != rows_.size()) {
        throw std::invalid_argument("Coefficient count does not match row count");
    }
    BitVector result(num_cols_);
    for (size_t r = 0; r < rows_.size(); r++) {
        if (coefficients[r]) {
            result ^= rows_[r];
        }
    }
    return result;
}

std::string BitMatrix::str() const {
    std::string result;
    for (const auto &r : rows_) {
        result += r.str();
        result += '\n';
    }
    return result;
}

size_t rank(const BitMatrix &m) {
    std::vector<BitVector> rows = m.rows();
    size_t pivot_row = 0;
    for (size_t c = 0; c < m.num_cols() && pivot_row < rows.size(); c++) {
        size_t found = pivot_row;
        while (found < rows.size() && !rows[found][c]) {
            found++;
        }
        if (found == rows.size()) {
            continue;
        }
        std::swap(rows[pivot_row], rows[found]);
        for (size_t r = pivot_row + 1; r < rows.size(); r++) {
            if (rows[r][c]) {
                rows[r] ^= rows[pivot_row];
            }
        }
        pivot_row++;
    }
    return pivot_row;
}

std::optional<BitVector> in_span(const BitVector &v, const BitMatrix &basis) {
    if (v.size() != basis.num_cols()) {
        throw std::invalid_argument(
            "in_span: vector has length " + std::to_string(v.size()) + " but basis rows have length " +
            std::to_string(basis.num_cols()));
    }
    Echelon e = reduce(basis);
    BitVector residual = v;
    BitVector coefficients(basis.num_rows());
    for (size_t i = 0; i < e.pivot_cols.size(); i++) {
        if (residual[e.pivot_cols[i]]) {
            residual ^= e.rows[i].value;
            coefficients ^= e.rows[i].origin;
        }
    }
    if (!residual.is_zero()) {
        return std::nullopt;
    }
    return coefficients;
}

bool symplectic_product(const BitVector &v1, const BitVector &v2) {
    if (v1.size() % 2 != 0 || v2.size() % 2 != 0) {
        throw std::invalid_argument("symplectic_product requires even-length (x|z) vectors");
    }
    if (v1.size() != v2.size()) {
        throw std::invalid_argument("symplectic_product: length mismatch");
    }
    size_t n = v1.size() / 2;
    BitVector x1 = v1.slice(0, n);
    BitVector z1 = v1.slice(n, n);
    BitVector x2 = v2.slice(0, n);
    BitVector z2 = v2.slice(n, n);
    return x1.dot(z2) ^ z1.dot(x2);
}

}  // namespace paulilogic
