// Copyright 2026 The codeswitch Authors
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

#include "codeswitch/f2.h"

#include <algorithm>
#include <bit>

#include "codeswitch/error.h"

namespace codeswitch {

namespace {

size_t words_for(size_t num_bits) {
    return (num_bits + 63) >> 6;
}

}  // namespace

BitVector::BitVector(size_t num_bits) : num_bits_(num_bits), words_(words_for(num_bits), 0) {
}

BitVector BitVector::from_string(std::string_view bits) {
    BitVector v(bits.size());
    for (size_t i = 0; i < bits.size(); i++) {
        if (bits[i] == '1') {
            v.set(i, true);
        } else if (bits[i] != '0') {
            throw Error(ErrorCode::BadCharacter, "expected '0' or '1' in bit string");
        }
    }
    return v;
}

BitVector BitVector::unit(size_t num_bits, size_t index) {
    BitVector v(num_bits);
    v.set(index, true);
    return v;
}

void BitVector::set(size_t index, bool value) {
    uint64_t mask = uint64_t{1} << (index & 63);
    if (value) {
        words_[index >> 6] |= mask;
    } else {
        words_[index >> 6] &= ~mask;
    }
}

void BitVector::check_same_size(const BitVector &other) const {
    if (num_bits_ != other.num_bits_) {
        throw Error(
            ErrorCode::LengthMismatch,
            "bit vectors of length " + std::to_string(num_bits_) + " and " + std::to_string(other.num_bits_));
    }
}

BitVector &BitVector::operator^=(const BitVector &other) {
    check_same_size(other);
    for (size_t i = 0; i < words_.size(); i++) {
        words_[i] ^= other.words_[i];
    }
    return *this;
}

BitVector &BitVector::operator&=(const BitVector &other) {
    check_same_size(other);
    for (size_t i = 0; i < words_.size(); i++) {
        words_[i] &= other.words_[i];
    }
    return *this;
}

BitVector &BitVector::operator|=(const BitVector &other) {
    check_same_size(other);
    for (size_t i = 0; i < words_.size(); i++) {
        words_[i] |= other.words_[i];
    }
    return *this;
}

bool BitVector::any() const {
    return std::any_of(words_.begin(), words_.end(), [](uint64_t w) { return w != 0; });
}

size_t BitVector::popcount() const {
    size_t total = 0;
    for (uint64_t w : words_) {
        total += std::popcount(w);
    }
    return total;
}

bool BitVector::dot(const BitVector &other) const {
    check_same_size(other);
    uint64_t acc = 0;
    for (size_t i = 0; i < words_.size(); i++) {
        acc ^= words_[i] & other.words_[i];
    }
    return std::popcount(acc) & 1;
}

std::optional<size_t> BitVector::first_set() const {
    for (size_t i = 0; i < words_.size(); i++) {
        if (words_[i]) {
            return (i << 6) + std::countr_zero(words_[i]);
        }
    }
    return std::nullopt;
}

std::optional<size_t> BitVector::last_set() const {
    for (size_t i = words_.size(); i-- > 0;) {
        if (words_[i]) {
            return (i << 6) + 63 - std::countl_zero(words_[i]);
        }
    }
    return std::nullopt;
}

BitVector BitVector::slice(size_t begin, size_t count) const {
    BitVector out(count);
    for (size_t i = 0; i < count; i++) {
        if (get(begin + i)) {
            out.set(i, true);
        }
    }
    return out;
}

BitVector BitVector::concat(const BitVector &other) const {
    BitVector out(num_bits_ + other.num_bits_);
    for (size_t i = 0; i < words_.size(); i++) {
        out.words_[i] = words_[i];
    }
    for (size_t i = 0; i < other.num_bits_; i++) {
        if (other.get(i)) {
            out.set(num_bits_ + i, true);
        }
    }
    return out;
}

bool BitVector::lex_less(const BitVector &other) const {
    check_same_size(other);
    for (size_t i = 0; i < num_bits_; i++) {
        if (get(i) != other.get(i)) {
            return other.get(i);
        }
    }
    return false;
}

std::string BitVector::str() const {
    std::string out(num_bits_, '0');
    for (size_t i = 0; i < num_bits_; i++) {
        if (get(i)) {
            out[i] = '1';
        }
    }
    return out;
}

BitVector BitVector::random(size_t num_bits, Rng &rng) {
    BitVector v(num_bits);
    for (auto &w : v.words_) {
        w = rng();
    }
    if (num_bits & 63) {
        v.words_.back() &= (uint64_t{1} << (num_bits & 63)) - 1;
    }
    return v;
}

BitMatrix::BitMatrix(size_t num_rows, size_t num_cols) : num_cols_(num_cols), rows_(num_rows, BitVector(num_cols)) {
}

BitMatrix BitMatrix::identity(size_t dim) {
    BitMatrix m(dim, dim);
    for (size_t i = 0; i < dim; i++) {
        m.set(i, i, true);
    }
    return m;
}

BitMatrix BitMatrix::from_rows(std::vector<BitVector> rows, size_t num_cols) {
    BitMatrix m(0, num_cols);
    for (auto &r : rows) {
        m.append_row(std::move(r));
    }
    return m;
}

BitMatrix BitMatrix::from_strings(const std::vector<std::string> &rows) {
    size_t cols = rows.empty() ? 0 : rows[0].size();
    BitMatrix m(0, cols);
    for (const auto &r : rows) {
        m.append_row(BitVector::from_string(r));
    }
    return m;
}

BitMatrix BitMatrix::random(size_t num_rows, size_t num_cols, Rng &rng) {
    BitMatrix m(0, num_cols);
    for (size_t r = 0; r < num_rows; r++) {
        m.append_row(BitVector::random(num_cols, rng));
    }
    return m;
}

void BitMatrix::append_row(BitVector row) {
    if (row.size() != num_cols_) {
        throw Error(ErrorCode::LengthMismatch, "row length does not match matrix column count");
    }
    rows_.push_back(std::move(row));
}

BitMatrix BitMatrix::stacked(const BitMatrix &other) const {
    if (other.num_cols_ != num_cols_) {
        throw Error(ErrorCode::LengthMismatch, "stacking matrices with different column counts");
    }
    BitMatrix out = *this;
    for (const auto &r : other.rows_) {
        out.rows_.push_back(r);
    }
    return out;
}

BitMatrix BitMatrix::transposed() const {
    BitMatrix t(num_cols_, rows_.size());
    for (size_t r = 0; r < rows_.size(); r++) {
        for (size_t c = 0; c < num_cols_; c++) {
            if (get(r, c)) {
                t.set(c, r, true);
            }
        }
    }
    return t;
}

bool BitMatrix::is_identity() const {
    return num_rows() == num_cols_ && *this == identity(num_cols_);
}

BitVector BitMatrix::apply(const BitVector &v) const {
    BitVector out(rows_.size());
    for (size_t r = 0; r < rows_.size(); r++) {
        if (rows_[r].dot(v)) {
            out.set(r, true);
        }
    }
    return out;
}

BitVector BitMatrix::combine_rows(const BitVector &coefficients) const {
    if (coefficients.size() != rows_.size()) {
        throw Error(ErrorCode::LengthMismatch, "coefficient count does not match row count");
    }
    BitVector out(num_cols_);
    for (size_t r = 0; r < rows_.size(); r++) {
        if (coefficients.get(r)) {
            out ^= rows_[r];
        }
    }
    return out;
}

BitMatrix operator*(const BitMatrix &a, const BitMatrix &b) {
    if (a.num_cols() != b.num_rows()) {
        throw Error(ErrorCode::LengthMismatch, "matrix product dimension mismatch");
    }
    BitMatrix out(a.num_rows(), b.num_cols());
    for (size_t r = 0; r < a.num_rows(); r++) {
        out.row(r) = b.combine_rows(a.row(r));
    }
    return out;
}

std::string BitMatrix::str() const {
    std::string out;
    for (const auto &r : rows_) {
        out += r.str();
        out += '\n';
    }
    return out;
}

bool symplectic_product(const BitVector &v, const BitVector &w) {
    if (v.size() != w.size() || (v.size() & 1)) {
        throw Error(ErrorCode::LengthMismatch, "symplectic product needs equal even lengths");
    }
    size_t n = v.size() / 2;
    bool acc = false;
    for (size_t i = 0; i < n; i++) {
        acc ^= (v.get(i) & w.get(n + i)) ^ (v.get(n + i) & w.get(i));
    }
    return acc;
}

RowEchelon row_reduce(const BitMatrix &m) {
    RowEchelon e{m, {}, BitMatrix::identity(m.num_rows())};
    size_t rows = m.num_rows();
    size_t next = 0;
    for (size_t c = 0; c < m.num_cols() && next < rows; c++) {
        size_t pivot = rows;
        for (size_t r = next; r < rows; r++) {
            if (e.reduced.get(r, c)) {
                pivot = r;
                break;
            }
        }
        if (pivot == rows) {
            continue;
        }
        std::swap(e.reduced.row(pivot), e.reduced.row(next));
        std::swap(e.transform.row(pivot), e.transform.row(next));
        for (size_t r = 0; r < rows; r++) {
            if (r != next && e.reduced.get(r, c)) {
                e.reduced.row(r) ^= e.reduced.row(next);
                e.transform.row(r) ^= e.transform.row(next);
            }
        }
        e.pivot_cols.push_back(c);
        next++;
    }
    return e;
}

size_t rank(const BitMatrix &m) {
    EchelonBasis basis(m.num_cols());
    for (const auto &r : m.rows()) {
        basis.insert(r);
    }
    return basis.rank();
}

BitMatrix invert(const BitMatrix &m) {
    if (m.num_rows() != m.num_cols()) {
        throw Error(ErrorCode::LengthMismatch, "only square matrices can be inverted");
    }
    RowEchelon e = row_reduce(m);
    if (e.rank() < m.num_rows()) {
        throw Error(ErrorCode::SingularMatrix, "matrix has rank " + std::to_string(e.rank()));
    }
    return e.transform;
}

AffineSolution solve_affine(const BitMatrix &a, const BitVector &b) {
    if (b.size() != a.num_rows()) {
        throw Error(ErrorCode::LengthMismatch, "right-hand side length does not match row count");
    }
    size_t cols = a.num_cols();
    BitMatrix augmented(0, cols + 1);
    for (size_t r = 0; r < a.num_rows(); r++) {
        BitVector row = a.row(r).concat(BitVector(1));
        row.set(cols, b.get(r));
        augmented.append_row(std::move(row));
    }
    RowEchelon e = row_reduce(augmented);
    if (!e.pivot_cols.empty() && e.pivot_cols.back() == cols) {
        throw Error(ErrorCode::Inconsistent, "linear system has no solution");
    }
    AffineSolution sol{BitVector(cols), BitMatrix(0, cols)};
    std::vector<bool> is_pivot(cols, false);
    for (size_t i = 0; i < e.rank(); i++) {
        is_pivot[e.pivot_cols[i]] = true;
        sol.particular.set(e.pivot_cols[i], e.reduced.get(i, cols));
    }
    for (size_t f = 0; f < cols; f++) {
        if (is_pivot[f]) {
            continue;
        }
        BitVector k(cols);
        k.set(f, true);
        for (size_t i = 0; i < e.rank(); i++) {
            if (e.reduced.get(i, f)) {
                k.set(e.pivot_cols[i], true);
            }
        }
        sol.kernel.append_row(std::move(k));
    }
    return sol;
}

BitMatrix kernel(const BitMatrix &a) {
    return solve_affine(a, BitVector(a.num_rows())).kernel;
}

std::optional<BitVector> row_combination(const BitMatrix &m, const BitVector &v) {
    try {
        return solve_affine(m.transposed(), v).particular;
    } catch (const Error &err) {
        if (err.code() == ErrorCode::Inconsistent) {
            return std::nullopt;
        }
        throw;
    }
}

std::vector<size_t> extend_basis_indices(const BitMatrix &partial, const BitMatrix &space) {
    if (partial.num_cols() != space.num_cols()) {
        throw Error(ErrorCode::LengthMismatch, "partial basis and space have different widths");
    }
    EchelonBasis span_of_space(space.num_cols());
    for (const auto &r : space.rows()) {
        span_of_space.insert(r);
    }
    EchelonBasis current(space.num_cols());
    for (const auto &r : partial.rows()) {
        if (!span_of_space.contains(r)) {
            throw Error(ErrorCode::NotInSpace, "partial basis vector " + r.str() + " is outside the space");
        }
        if (!current.insert(r)) {
            throw Error(ErrorCode::NotIndependent, "partial basis vectors are linearly dependent");
        }
    }
    std::vector<size_t> added;
    for (size_t i = 0; i < space.num_rows() && current.rank() < span_of_space.rank(); i++) {
        if (current.insert(space.row(i))) {
            added.push_back(i);
        }
    }
    return added;
}

BitMatrix extend_basis(const BitMatrix &partial, const BitMatrix &space) {
    BitMatrix out(0, space.num_cols());
    for (size_t i : extend_basis_indices(partial, space)) {
        out.append_row(space.row(i));
    }
    return out;
}

BitMatrix intersect_rowspaces(const BitMatrix &a, const BitMatrix &b) {
    if (a.num_cols() != b.num_cols()) {
        throw Error(ErrorCode::LengthMismatch, "intersecting row spaces of different widths");
    }
    size_t c = a.num_cols();
    BitVector zeros(c);
    BitMatrix z(0, 2 * c);
    for (const auto &r : a.rows()) {
        z.append_row(r.concat(r));
    }
    for (const auto &r : b.rows()) {
        z.append_row(r.concat(zeros));
    }
    RowEchelon e = row_reduce(z);
    BitMatrix out(0, c);
    for (size_t i = 0; i < e.rank(); i++) {
        if (e.pivot_cols[i] >= c) {
            out.append_row(e.reduced.row(i).slice(c, c));
        }
    }
    return out;
}

BitMatrix random_gl(size_t dim, Rng &rng) {
    while (true) {
        BitMatrix m = BitMatrix::random(dim, dim, rng);
        if (rank(m) == dim) {
            return m;
        }
    }
}

bool EchelonBasis::insert(const BitVector &v) {
    BitVector r = reduce(v);
    auto pivot = r.first_set();
    if (!pivot) {
        return false;
    }
    rows_.push_back(std::move(r));
    pivots_.push_back(*pivot);
    return true;
}

BitVector EchelonBasis::reduce(BitVector v) const {
    if (v.size() != num_cols_) {
        throw Error(ErrorCode::LengthMismatch, "vector width does not match basis width");
    }
    for (size_t i = 0; i < rows_.size(); i++) {
        if (v.get(pivots_[i])) {
            v ^= rows_[i];
        }
    }
    return v;
}

}  // namespace codeswitch
