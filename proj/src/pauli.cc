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

#include "codeswitch/pauli.h"

#include <bit>

#include "codeswitch/error.h"

namespace codeswitch {

PauliOp::PauliOp(size_t num_qubits) : xs_(num_qubits), zs_(num_qubits) {
}

PauliOp::PauliOp(BitVector xs, BitVector zs, bool negative) : xs_(std::move(xs)), zs_(std::move(zs)), negative_(negative) {
    if (xs_.size() != zs_.size()) {
        throw Error(ErrorCode::LengthMismatch, "x and z parts of a Pauli differ in length");
    }
}

PauliOp PauliOp::from_string(std::string_view text) {
    bool negative = false;
    if (!text.empty() && (text[0] == '+' || text[0] == '-')) {
        negative = text[0] == '-';
        text.remove_prefix(1);
    } else if (text.starts_with("\xE2\x88\x92")) {
        negative = true;
        text.remove_prefix(3);
    }
    PauliOp p(text.size());
    p.negative_ = negative;
    for (size_t q = 0; q < text.size(); q++) {
        p.set_letter(q, text[q]);
    }
    return p;
}

PauliOp PauliOp::from_symplectic(const BitVector &v, bool negative) {
    if (v.size() & 1) {
        throw Error(ErrorCode::LengthMismatch, "symplectic vector has odd length");
    }
    size_t n = v.size() / 2;
    return PauliOp(v.slice(0, n), v.slice(n, n), negative);
}

PauliOp PauliOp::single(size_t num_qubits, size_t qubit, char letter) {
    PauliOp p(num_qubits);
    p.set_letter(qubit, letter);
    return p;
}

char PauliOp::letter(size_t qubit) const {
    static constexpr char kLetters[4] = {'I', 'X', 'Z', 'Y'};
    return kLetters[xs_.get(qubit) | (zs_.get(qubit) << 1)];
}

void PauliOp::set_letter(size_t qubit, char letter) {
    switch (letter) {
        case 'I':
        case '_':
            xs_.set(qubit, false);
            zs_.set(qubit, false);
            break;
        case 'X':
            xs_.set(qubit, true);
            zs_.set(qubit, false);
            break;
        case 'Y':
            xs_.set(qubit, true);
            zs_.set(qubit, true);
            break;
        case 'Z':
            xs_.set(qubit, false);
            zs_.set(qubit, true);
            break;
        default:
            throw Error(ErrorCode::BadCharacter, std::string("unexpected Pauli letter '") + letter + "'");
    }
}

size_t PauliOp::weight() const {
    return (xs_ | zs_).popcount();
}

std::vector<size_t> PauliOp::support() const {
    std::vector<size_t> out;
    for (size_t q = 0; q < num_qubits(); q++) {
        if (xs_.get(q) || zs_.get(q)) {
            out.push_back(q);
        }
    }
    return out;
}

BitVector PauliOp::symplectic() const {
    return xs_.concat(zs_);
}

bool PauliOp::commutes_with(const PauliOp &other) const {
    return xs_.dot(other.zs_) == zs_.dot(other.xs_);
}

std::string PauliOp::letters() const {
    std::string out(num_qubits(), 'I');
    for (size_t q = 0; q < num_qubits(); q++) {
        out[q] = letter(q);
    }
    return out;
}

std::string PauliOp::str() const {
    return (negative_ ? "-" : "+") + letters();
}

PauliOp PauliOp::operator-() const {
    PauliOp p = *this;
    p.negative_ = !p.negative_;
    return p;
}

unsigned product_phase(const PauliOp &p, const PauliOp &q) {
    if (p.num_qubits() != q.num_qubits()) {
        throw Error(ErrorCode::LengthMismatch, "multiplying Paulis on different qubit counts");
    }
    // Per qubit, P·Q = i^g (P xor Q) with g = +1 for XY, YZ, ZX and g = -1 for
    // YX, ZY, XZ (Hermitian letters).
    auto px = p.xs().words();
    auto pz = p.zs().words();
    auto qx = q.xs().words();
    auto qz = q.zs().words();
    int total = 0;
    for (size_t i = 0; i < px.size(); i++) {
        uint64_t x1 = px[i], z1 = pz[i], x2 = qx[i], z2 = qz[i];
        uint64_t plus = (x1 & z1 & z2 & ~x2) | (x1 & ~z1 & x2 & z2) | (~x1 & z1 & x2 & ~z2);
        uint64_t minus = (x1 & z1 & x2 & ~z2) | (x1 & ~z1 & ~x2 & z2) | (~x1 & z1 & x2 & z2);
        total += std::popcount(plus) - std::popcount(minus);
    }
    total += 2 * (p.negative() + q.negative());
    return static_cast<unsigned>(((total % 4) + 4) % 4);
}

PauliOp multiply(const PauliOp &p, const PauliOp &q) {
    unsigned phase = product_phase(p, q);
    if (phase & 1) {
        throw Error(ErrorCode::NonHermitianProduct, p.str() + " and " + q.str() + " anticommute");
    }
    return PauliOp(p.xs() ^ q.xs(), p.zs() ^ q.zs(), phase == 2);
}

PauliOp product_of(std::span<const PauliOp> ops, const BitVector &select, size_t num_qubits) {
    PauliOp acc(num_qubits);
    for (size_t i = 0; i < ops.size(); i++) {
        if (select.get(i)) {
            acc = multiply(acc, ops[i]);
        }
    }
    return acc;
}

BitMatrix symplectic_matrix(std::span<const PauliOp> ops, size_t num_qubits) {
    BitMatrix m(0, 2 * num_qubits);
    for (const auto &op : ops) {
        m.append_row(op.symplectic());
    }
    return m;
}

BitMatrix check_matrix(std::span<const PauliOp> ops, size_t num_qubits) {
    BitMatrix m(0, 2 * num_qubits);
    for (const auto &op : ops) {
        m.append_row(op.zs().concat(op.xs()));
    }
    return m;
}

StabilizerCode::StabilizerCode(size_t num_qubits, std::vector<PauliOp> generators)
    : n_(num_qubits), generators_(std::move(generators)) {
    if (generators_.size() > n_) {
        throw Error(ErrorCode::DependentGenerators, "more generators than qubits");
    }
    EchelonBasis span(2 * n_);
    for (size_t i = 0; i < generators_.size(); i++) {
        const auto &g = generators_[i];
        if (g.num_qubits() != n_) {
            throw Error(
                ErrorCode::WrongLength,
                "generator " + g.str() + " does not act on " + std::to_string(n_) + " qubits");
        }
        for (size_t j = 0; j < i; j++) {
            if (!g.commutes_with(generators_[j])) {
                throw Error(
                    ErrorCode::AnticommutingGenerators, g.str() + " anticommutes with " + generators_[j].str());
            }
        }
        if (!span.insert(g.symplectic())) {
            throw Error(ErrorCode::DependentGenerators, g.str() + " depends on earlier generators");
        }
    }
}

bool StabilizerCode::same_group(const StabilizerCode &other) const {
    if (n_ != other.n_ || generators_.size() != other.generators_.size()) {
        return false;
    }
    for (const auto &g : other.generators_) {
        Membership m = in_group(*this, g);
        if (!m.in_group || !m.sign_matches) {
            return false;
        }
    }
    return true;
}

Syndrome syndrome(const StabilizerCode &code, const PauliOp &e) {
    if (e.num_qubits() != code.n()) {
        throw Error(ErrorCode::LengthMismatch, "error and code act on different qubit counts");
    }
    Syndrome s{BitVector(code.num_generators())};
    for (size_t i = 0; i < code.num_generators(); i++) {
        if (!code.generator(i).commutes_with(e)) {
            s.bits.set(i, true);
        }
    }
    return s;
}

std::optional<PauliOp> group_element(std::span<const PauliOp> generators, const PauliOp &letters, size_t num_qubits) {
    auto coefficients = row_combination(symplectic_matrix(generators, num_qubits), letters.symplectic());
    if (!coefficients) {
        return std::nullopt;
    }
    return product_of(generators, *coefficients, num_qubits);
}

Membership in_group(const StabilizerCode &code, const PauliOp &e) {
    if (e.num_qubits() != code.n()) {
        throw Error(ErrorCode::LengthMismatch, "operator and code act on different qubit counts");
    }
    auto element = group_element(code.generators(), e, code.n());
    if (!element) {
        return {};
    }
    return {true, element->negative() == e.negative()};
}

std::vector<PauliOp> normalizer_basis(const StabilizerCode &code) {
    BitMatrix k = kernel(code.check_matrix());
    std::vector<PauliOp> out;
    for (const auto &row : k.rows()) {
        out.push_back(PauliOp::from_symplectic(row));
    }
    return out;
}

StabilizerCode change_generators(const StabilizerCode &code, const BitMatrix &transform) {
    if (transform.num_cols() != code.num_generators()) {
        throw Error(ErrorCode::LengthMismatch, "transform width does not match generator count");
    }
    std::vector<PauliOp> gens;
    for (const auto &row : transform.rows()) {
        gens.push_back(product_of(code.generators(), row, code.n()));
    }
    return StabilizerCode(code.n(), std::move(gens));
}

StabilizerCode permute_qubits(const StabilizerCode &code, std::span<const size_t> perm) {
    if (perm.size() != code.n()) {
        throw Error(ErrorCode::LengthMismatch, "permutation size does not match qubit count");
    }
    std::vector<PauliOp> gens;
    for (const auto &g : code.generators()) {
        PauliOp p(code.n());
        p.set_negative(g.negative());
        for (size_t q = 0; q < code.n(); q++) {
            p.set_letter(perm[q], g.letter(q));
        }
        gens.push_back(std::move(p));
    }
    return StabilizerCode(code.n(), std::move(gens));
}

StabilizerCode random_code(size_t n, size_t k, Rng &rng) {
    if (k > n) {
        throw Error(ErrorCode::DomainError, "k exceeds n");
    }
    std::vector<PauliOp> gens;
    EchelonBasis span(2 * n);
    while (gens.size() < n - k) {
        BitMatrix commuting = kernel(check_matrix(gens, n));
        BitVector pick = BitVector::random(commuting.num_rows(), rng);
        BitVector v = commuting.combine_rows(pick);
        if (!span.insert(v)) {
            continue;
        }
        gens.push_back(PauliOp::from_symplectic(v, rng() & 1));
    }
    return StabilizerCode(n, std::move(gens));
}

StabilizerCode parse_code(std::string_view text) {
    std::vector<PauliOp> gens;
    size_t n = 0;
    bool have_n = false;
    while (!text.empty()) {
        size_t end = text.find('\n');
        std::string_view line = text.substr(0, end);
        text.remove_prefix(end == std::string_view::npos ? text.size() : end + 1);
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) {
            line.remove_suffix(1);
        }
        while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) {
            line.remove_prefix(1);
        }
        if (line.empty() || line.front() == '#') {
            continue;
        }
        PauliOp p = PauliOp::from_string(line);
        if (!have_n) {
            n = p.num_qubits();
            have_n = true;
        } else if (p.num_qubits() != n) {
            throw Error(ErrorCode::WrongLength, "generator lines have different lengths");
        }
        gens.push_back(std::move(p));
    }
    if (!have_n) {
        throw Error(ErrorCode::ParseError, "code text has no generator lines");
    }
    return StabilizerCode(n, std::move(gens));
}

std::string format_code(const StabilizerCode &code) {
    std::string out;
    for (const auto &g : code.generators()) {
        out += g.str();
        out += '\n';
    }
    return out;
}

}  // namespace codeswitch
