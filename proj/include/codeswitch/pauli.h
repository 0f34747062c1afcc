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

#ifndef CODESWITCH_PAULI_H
#define CODESWITCH_PAULI_H

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "codeswitch/f2.h"
#include "codeswitch/rng.h"

namespace codeswitch {

/// Hermitian n-qubit Pauli operator: sign · ⊗_q letter_q with letters in
/// {I, X, Y, Z}. The letter Y is the Hermitian Y, so (x, z) = (1, 1) means Y
/// rather than XZ. Qubit 0 is the leftmost character of the string form.
class PauliOp {
   public:
    PauliOp() = default;
    /// Identity on n qubits.
    explicit PauliOp(size_t num_qubits);
    PauliOp(BitVector xs, BitVector zs, bool negative = false);

    /// Accepts an optional sign ('+', '-' or U+2212) followed by I/X/Y/Z.
    static PauliOp from_string(std::string_view text);
    /// From a symplectic vector laid out (x | z).
    static PauliOp from_symplectic(const BitVector &v, bool negative = false);
    static PauliOp single(size_t num_qubits, size_t qubit, char letter);

    size_t num_qubits() const {
        return xs_.size();
    }
    const BitVector &xs() const {
        return xs_;
    }
    const BitVector &zs() const {
        return zs_;
    }
    bool negative() const {
        return negative_;
    }
    int sign() const {
        return negative_ ? -1 : +1;
    }
    void set_negative(bool negative) {
        negative_ = negative;
    }

    char letter(size_t qubit) const;
    void set_letter(size_t qubit, char letter);

    size_t weight() const;
    std::vector<size_t> support() const;
    bool is_identity() const {
        return xs_.none() && zs_.none();
    }
    BitVector symplectic() const;
    bool commutes_with(const PauliOp &other) const;

    /// Sign prefix always present: "+XZ", "-YI".
    std::string str() const;
    /// Letters only, no sign.
    std::string letters() const;

    PauliOp operator-() const;
    bool operator==(const PauliOp &other) const = default;
    /// Compares the unsigned letters.
    bool same_letters(const PauliOp &other) const {
        return xs_ == other.xs_ && zs_ == other.zs_;
    }

   private:
    BitVector xs_;
    BitVector zs_;
    bool negative_ = false;
};

/// Exponent e (mod 4) with P·Q = i^e · R, where R is the signless Pauli whose
/// vector is vec(P) xor vec(Q). Includes the signs of P and Q.
unsigned product_phase(const PauliOp &p, const PauliOp &q);

/// P·Q for commuting operators. Throws NonHermitianProduct when P and Q
/// anticommute (the product would carry a factor of ±i).
PauliOp multiply(const PauliOp &p, const PauliOp &q);

/// Product of the operators selected by `select` (in order); must commute pairwise.
PauliOp product_of(std::span<const PauliOp> ops, const BitVector &select, size_t num_qubits);

/// Rows are the symplectic vectors of the operators.
BitMatrix symplectic_matrix(std::span<const PauliOp> ops, size_t num_qubits);

/// Rows are the operators with x and z halves swapped, so that
/// (check_matrix · vec(e))_i = <op_i, e>.
BitMatrix check_matrix(std::span<const PauliOp> ops, size_t num_qubits);

/// Stabilizer code [[n, k]] described by an ordered list of n - k independent,
/// pairwise commuting Hermitian generators.
class StabilizerCode {
   public:
    StabilizerCode() = default;
    /// Validates the generator list. Throws WrongLength, AnticommutingGenerators
    /// or DependentGenerators.
    StabilizerCode(size_t num_qubits, std::vector<PauliOp> generators);

    size_t n() const {
        return n_;
    }
    size_t k() const {
        return n_ - generators_.size();
    }
    size_t num_generators() const {
        return generators_.size();
    }
    const std::vector<PauliOp> &generators() const {
        return generators_;
    }
    const PauliOp &generator(size_t i) const {
        return generators_[i];
    }

    BitMatrix generator_matrix() const {
        return symplectic_matrix(generators_, n_);
    }
    BitMatrix check_matrix() const {
        return codeswitch::check_matrix(generators_, n_);
    }

    /// Exact equality of generator lists.
    bool operator==(const StabilizerCode &other) const = default;
    /// Equality of the generated signed groups.
    bool same_group(const StabilizerCode &other) const;

   private:
    size_t n_ = 0;
    std::vector<PauliOp> generators_;
};

struct Syndrome {
    BitVector bits;
    bool is_zero() const {
        return bits.none();
    }
    bool operator==(const Syndrome &other) const = default;
};

/// Bit i is <generator_i, e>. The sign of e is ignored.
Syndrome syndrome(const StabilizerCode &code, const PauliOp &e);

struct Membership {
    bool in_group = false;
    /// Meaningful only when in_group: the group element with e's letters has e's sign.
    bool sign_matches = false;
};
Membership in_group(const StabilizerCode &code, const PauliOp &e);

/// Signed group element with the letters of `letters`, if its vector is in the group.
std::optional<PauliOp> group_element(std::span<const PauliOp> generators, const PauliOp &letters, size_t num_qubits);

/// Basis of the normalizer N(S) (dimension n + k) as unsigned operators.
std::vector<PauliOp> normalizer_basis(const StabilizerCode &code);

/// Generators A·G (row i is the signed product of the generators selected by row i of A).
StabilizerCode change_generators(const StabilizerCode &code, const BitMatrix &transform);

/// Relabels qubits: the letter on qubit q moves to qubit perm[q].
StabilizerCode permute_qubits(const StabilizerCode &code, std::span<const size_t> perm);

/// Uniformly drawn generators of a random [[n, k]] code with random signs.
StabilizerCode random_code(size_t n, size_t k, Rng &rng);

/// Text format: '#' comments, one signed Pauli string per line.
StabilizerCode parse_code(std::string_view text);
std::string format_code(const StabilizerCode &code);

}  // namespace codeswitch

#endif
