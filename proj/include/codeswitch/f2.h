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

#ifndef CODESWITCH_F2_H
#define CODESWITCH_F2_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "codeswitch/rng.h"

namespace codeswitch {

/// Fixed-length bit vector over F2, packed into 64-bit words.
/// Padding bits past size() are always zero.
class BitVector {
   public:
    BitVector() = default;
    explicit BitVector(size_t num_bits);

    /// Parses a string of '0'/'1' characters.
    static BitVector from_string(std::string_view bits);
    static BitVector unit(size_t num_bits, size_t index);

    size_t size() const {
        return num_bits_;
    }
    bool get(size_t index) const {
        return (words_[index >> 6] >> (index & 63)) & 1;
    }
    bool operator[](size_t index) const {
        return get(index);
    }
    void set(size_t index, bool value);
    void flip(size_t index) {
        words_[index >> 6] ^= uint64_t{1} << (index & 63);
    }

    BitVector &operator^=(const BitVector &other);
    BitVector &operator&=(const BitVector &other);
    BitVector &operator|=(const BitVector &other);
    friend BitVector operator^(BitVector a, const BitVector &b) {
        return a ^= b;
    }
    friend BitVector operator&(BitVector a, const BitVector &b) {
        return a &= b;
    }
    friend BitVector operator|(BitVector a, const BitVector &b) {
        return a |= b;
    }
    bool operator==(const BitVector &other) const = default;

    bool any() const;
    bool none() const {
        return !any();
    }
    size_t popcount() const;
    /// Parity of the bitwise AND.
    bool dot(const BitVector &other) const;
    std::optional<size_t> first_set() const;
    std::optional<size_t> last_set() const;

    /// Bits [begin, begin + count) as a new vector.
    BitVector slice(size_t begin, size_t count) const;
    /// this ++ other.
    BitVector concat(const BitVector &other) const;

    std::span<const uint64_t> words() const {
        return words_;
    }
    std::span<uint64_t> words() {
        return words_;
    }
    /// Lexicographic order on the bit string (index 0 most significant).
    bool lex_less(const BitVector &other) const;
    std::string str() const;

    static BitVector random(size_t num_bits, Rng &rng);

   private:
    void check_same_size(const BitVector &other) const;

    size_t num_bits_ = 0;
    std::vector<uint64_t> words_;
};

/// Dense row-major matrix over F2. Rows are BitVectors of length num_cols().
class BitMatrix {
   public:
    BitMatrix() = default;
    BitMatrix(size_t num_rows, size_t num_cols);

    static BitMatrix identity(size_t dim);
    static BitMatrix from_rows(std::vector<BitVector> rows, size_t num_cols);
    static BitMatrix from_strings(const std::vector<std::string> &rows);
    static BitMatrix random(size_t num_rows, size_t num_cols, Rng &rng);

    size_t num_rows() const {
        return rows_.size();
    }
    size_t num_cols() const {
        return num_cols_;
    }
    const BitVector &row(size_t r) const {
        return rows_[r];
    }
    BitVector &row(size_t r) {
        return rows_[r];
    }
    const std::vector<BitVector> &rows() const {
        return rows_;
    }
    bool get(size_t r, size_t c) const {
        return rows_[r].get(c);
    }
    void set(size_t r, size_t c, bool value) {
        rows_[r].set(c, value);
    }
    void append_row(BitVector row);
    /// Rows of this followed by rows of other.
    BitMatrix stacked(const BitMatrix &other) const;

    BitMatrix transposed() const;
    bool is_identity() const;
    bool operator==(const BitMatrix &other) const = default;

    /// Matrix-vector product M·v (v has num_cols() entries).
    BitVector apply(const BitVector &v) const;
    /// Row combination c·M = sum of rows r with c_r = 1.
    BitVector combine_rows(const BitVector &coefficients) const;
    friend BitMatrix operator*(const BitMatrix &a, const BitMatrix &b);

    std::string str() const;

   private:
    size_t num_cols_ = 0;
    std::vector<BitVector> rows_;
};

/// <v, w> = v^T B w with B = [[0, I], [I, 0]]; vectors are laid out (x | z).
bool symplectic_product(const BitVector &v, const BitVector &w);

/// Reduced row echelon form. The pivot of each step is the leftmost column
/// that still has a set bit below the current row, and within that column the
/// lowest-index row. `transform` records the row operations: transform·M = reduced.
struct RowEchelon {
    BitMatrix reduced;
    std::vector<size_t> pivot_cols;
    BitMatrix transform;
    size_t rank() const {
        return pivot_cols.size();
    }
};
RowEchelon row_reduce(const BitMatrix &m);

size_t rank(const BitMatrix &m);

/// Inverse of a square matrix; throws SingularMatrix when rank < dimension.
BitMatrix invert(const BitMatrix &m);

struct AffineSolution {
    /// Free variables set to zero, pivot variables read off the reduced system.
    BitVector particular;
    /// Basis of {x : A x = 0}; one vector per free column, in column order.
    BitMatrix kernel;
};
/// Solves A x = b. Throws Inconsistent when there is no solution.
AffineSolution solve_affine(const BitMatrix &a, const BitVector &b);

/// Basis of the right kernel {x : A x = 0}.
BitMatrix kernel(const BitMatrix &a);

/// Coefficients c with c·M = v, if v lies in the row space of M.
std::optional<BitVector> row_combination(const BitMatrix &m, const BitVector &v);

/// Indices of the rows of `space` that greedily complete `partial` to a basis
/// of rowspace(space), scanning `space` in order.
/// Throws NotIndependent / NotInSpace when the preconditions fail.
std::vector<size_t> extend_basis_indices(const BitMatrix &partial, const BitMatrix &space);
/// The rows selected by extend_basis_indices (the added rows only).
BitMatrix extend_basis(const BitMatrix &partial, const BitMatrix &space);

/// Basis of rowspace(a) ∩ rowspace(b) by the Zassenhaus construction.
BitMatrix intersect_rowspaces(const BitMatrix &a, const BitMatrix &b);

/// Uniform element of GL(F2, dim) by rejection sampling of uniform matrices.
BitMatrix random_gl(size_t dim, Rng &rng);

/// Incrementally built row-echelon basis for span queries.
class EchelonBasis {
   public:
    explicit EchelonBasis(size_t num_cols) : num_cols_(num_cols) {
    }
    /// Returns true if v was independent of the current span (and was added).
    bool insert(const BitVector &v);
    BitVector reduce(BitVector v) const;
    bool contains(const BitVector &v) const {
        return reduce(v).none();
    }
    size_t rank() const {
        return rows_.size();
    }

   private:
    size_t num_cols_;
    std::vector<BitVector> rows_;
    std::vector<size_t> pivots_;
};

}  // namespace codeswitch

#endif
