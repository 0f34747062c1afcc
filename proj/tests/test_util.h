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

#ifndef CODESWITCH_TESTS_TEST_UTIL_H
#define CODESWITCH_TESTS_TEST_UTIL_H

// Reference implementations used as oracles. They deliberately avoid the
// library's packed F2 routines: letters are handled as characters, spans are
// enumerated, and matrices are dense vectors of ints.

#include <cmath>
#include <complex>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "codeswitch/pauli.h"

namespace codeswitch::testing {

using Dense = std::vector<std::vector<int>>;

inline Dense to_dense(const BitMatrix &m) {
    Dense d(m.num_rows(), std::vector<int>(m.num_cols()));
    for (size_t r = 0; r < m.num_rows(); r++) {
        for (size_t c = 0; c < m.num_cols(); c++) {
            d[r][c] = m.get(r, c);
        }
    }
    return d;
}

inline size_t naive_rank(Dense d) {
    size_t rank = 0;
    size_t cols = d.empty() ? 0 : d[0].size();
    for (size_t c = 0; c < cols && rank < d.size(); c++) {
        size_t p = rank;
        while (p < d.size() && !d[p][c]) {
            p++;
        }
        if (p == d.size()) {
            continue;
        }
        std::swap(d[p], d[rank]);
        for (size_t r = 0; r < d.size(); r++) {
            if (r != rank && d[r][c]) {
                for (size_t k = 0; k < cols; k++) {
                    d[r][k] ^= d[rank][k];
                }
            }
        }
        rank++;
    }
    return rank;
}

/// Every element of the row span, as bit strings (rows <= 20).
inline std::set<std::string> span_strings(const Dense &rows, size_t cols) {
    std::set<std::string> out;
    for (uint64_t mask = 0; mask < (uint64_t{1} << rows.size()); mask++) {
        std::string s(cols, '0');
        for (size_t r = 0; r < rows.size(); r++) {
            if ((mask >> r) & 1) {
                for (size_t c = 0; c < cols; c++) {
                    if (rows[r][c]) {
                        s[c] = s[c] == '0' ? '1' : '0';
                    }
                }
            }
        }
        out.insert(s);
    }
    return out;
}

/// Character-level commutation test: count positions where both letters are
/// non-identity and differ.
inline bool letters_commute(const std::string &a, const std::string &b) {
    int clashes = 0;
    for (size_t q = 0; q < a.size(); q++) {
        if (a[q] != 'I' && b[q] != 'I' && a[q] != b[q]) {
            clashes++;
        }
    }
    return clashes % 2 == 0;
}

/// Letter product ignoring phases.
inline std::string letters_product(const std::string &a, const std::string &b) {
    std::string out(a.size(), 'I');
    for (size_t q = 0; q < a.size(); q++) {
        char x = a[q], y = b[q];
        if (x == 'I') {
            out[q] = y;
        } else if (y == 'I') {
            out[q] = x;
        } else if (x == y) {
            out[q] = 'I';
        } else {
            // The third letter.
            out[q] = static_cast<char>('X' + 'Y' + 'Z' - x - y);
        }
    }
    return out;
}

/// Letter strings of every element of the group (unsigned).
inline std::set<std::string> group_letters(const StabilizerCode &code) {
    std::set<std::string> out;
    size_t r = code.num_generators();
    for (uint64_t mask = 0; mask < (uint64_t{1} << r); mask++) {
        std::string s(code.n(), 'I');
        for (size_t i = 0; i < r; i++) {
            if ((mask >> i) & 1) {
                s = letters_product(s, code.generator(i).letters());
            }
        }
        out.insert(s);
    }
    return out;
}

/// Distance by scanning all 4^n letter strings (n <= 8).
inline size_t naive_distance(const StabilizerCode &code) {
    auto group = group_letters(code);
    std::vector<std::string> gens;
    for (const auto &g : code.generators()) {
        gens.push_back(g.letters());
    }
    size_t n = code.n();
    size_t best = n + 1;
    uint64_t total = uint64_t{1} << (2 * n);
    for (uint64_t code_word = 1; code_word < total; code_word++) {
        std::string s(n, 'I');
        size_t weight = 0;
        for (size_t q = 0; q < n; q++) {
            s[q] = "IXYZ"[(code_word >> (2 * q)) & 3];
            weight += s[q] != 'I';
        }
        if (weight >= best) {
            continue;
        }
        bool commutes = true;
        for (const auto &g : gens) {
            commutes = commutes && letters_commute(s, g);
        }
        if (commutes && !group.count(s)) {
            best = weight;
        }
    }
    return best;
}

using Complex = std::complex<double>;
using CMatrix = std::vector<std::vector<Complex>>;

inline CMatrix single_matrix(char letter) {
    const Complex i(0, 1);
    switch (letter) {
        case 'X':
            return {{0, 1}, {1, 0}};
        case 'Y':
            return {{0, -i}, {i, 0}};
        case 'Z':
            return {{1, 0}, {0, -1}};
        default:
            return {{1, 0}, {0, 1}};
    }
}

inline CMatrix kron(const CMatrix &a, const CMatrix &b) {
    size_t ra = a.size(), rb = b.size();
    CMatrix out(ra * rb, std::vector<Complex>(ra * rb));
    for (size_t i = 0; i < ra; i++) {
        for (size_t j = 0; j < ra; j++) {
            for (size_t k = 0; k < rb; k++) {
                for (size_t l = 0; l < rb; l++) {
                    out[i * rb + k][j * rb + l] = a[i][j] * b[k][l];
                }
            }
        }
    }
    return out;
}

/// Dense matrix of a signed Pauli string (qubit 0 is the leftmost factor).
inline CMatrix dense_pauli(const PauliOp &p) {
    CMatrix m{{1}};
    for (size_t q = 0; q < p.num_qubits(); q++) {
        m = kron(m, single_matrix(p.letter(q)));
    }
    if (p.negative()) {
        for (auto &row : m) {
            for (auto &x : row) {
                x = -x;
            }
        }
    }
    return m;
}

inline CMatrix matmul(const CMatrix &a, const CMatrix &b) {
    size_t n = a.size();
    CMatrix out(n, std::vector<Complex>(n));
    for (size_t i = 0; i < n; i++) {
        for (size_t k = 0; k < n; k++) {
            if (a[i][k] == Complex(0)) {
                continue;
            }
            for (size_t j = 0; j < n; j++) {
                out[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    return out;
}

inline bool matrices_equal(const CMatrix &a, const CMatrix &b) {
    for (size_t i = 0; i < a.size(); i++) {
        for (size_t j = 0; j < a.size(); j++) {
            if (std::abs(a[i][j] - b[i][j]) > 1e-9) {
                return false;
            }
        }
    }
    return true;
}

using StateVector = std::vector<Complex>;

/// P|psi> computed letter by letter on basis states (qubit 0 is the most
/// significant bit of the index).
inline StateVector apply_to_state(const PauliOp &p, const StateVector &v) {
    const Complex i(0, 1);
    size_t n = p.num_qubits();
    StateVector out(v.size());
    for (size_t b = 0; b < v.size(); b++) {
        size_t target = b;
        Complex phase = p.negative() ? -1 : 1;
        for (size_t q = 0; q < n; q++) {
            size_t bit = size_t{1} << (n - 1 - q);
            bool one = b & bit;
            char letter = p.letter(q);
            if (letter == 'X' || letter == 'Y') {
                target ^= bit;
            }
            if (letter == 'Z' && one) {
                phase = -phase;
            }
            if (letter == 'Y') {
                phase *= one ? -i : i;
            }
        }
        out[target] += phase * v[b];
    }
    return out;
}

inline Complex inner(const StateVector &a, const StateVector &b) {
    Complex total = 0;
    for (size_t k = 0; k < a.size(); k++) {
        total += std::conj(a[k]) * b[k];
    }
    return total;
}

inline void normalize(StateVector &v) {
    double norm = std::sqrt(std::real(inner(v, v)));
    for (auto &x : v) {
        x /= norm;
    }
}

/// The state fixed by every signed stabilizer, obtained by projecting a
/// generic vector with each (1 + S)/2. Returns an empty vector if the
/// projection vanishes.
inline StateVector state_of(const std::vector<PauliOp> &stabilizers, size_t n) {
    StateVector v(size_t{1} << n);
    for (size_t k = 0; k < v.size(); k++) {
        v[k] = Complex(1.0 + 0.37 * k, 0.11 * static_cast<double>(k * k % 17));
    }
    for (const auto &s : stabilizers) {
        auto sv = apply_to_state(s, v);
        for (size_t k = 0; k < v.size(); k++) {
            v[k] = (v[k] + sv[k]) / 2.0;
        }
    }
    if (std::real(inner(v, v)) < 1e-12) {
        return {};
    }
    normalize(v);
    return v;
}

inline double expectation(const StateVector &v, const PauliOp &p) {
    return std::real(inner(v, apply_to_state(p, v)));
}

inline PauliOp random_pauli(size_t n, Rng &rng) {
    PauliOp p(n);
    for (size_t q = 0; q < n; q++) {
        p.set_letter(q, "IXYZ"[rng() & 3]);
    }
    p.set_negative(rng() & 1);
    return p;
}

}  // namespace codeswitch::testing

#endif
