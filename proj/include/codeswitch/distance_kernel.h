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

#ifndef CODESWITCH_DISTANCE_KERNEL_H
#define CODESWITCH_DISTANCE_KERNEL_H

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "codeswitch/pauli.h"

namespace codeswitch {

/// Exhaustive search for low-weight operators that commute with every `check`
/// operator but lie outside span(`group`) (vector level, signs ignored).
///
/// Operators of a fixed weight w are visited in a fixed order: supports in
/// lexicographic (combinadic) order, and for each support the letters
/// X < Y < Z with the last support position varying fastest. The ordinal of an
/// operator is support_rank * 3^w + letter_index. Both kernels return the
/// operator with the smallest ordinal, so they agree bit for bit.
///
/// Limited to n <= 64 qubits and at most 64 checks (one machine word each).
class LogicalSearch {
   public:
    LogicalSearch(size_t num_qubits, std::span<const PauliOp> checks, std::span<const PauliOp> group);

    struct Hit {
        PauliOp op;
        uint64_t ordinal = 0;
    };

    size_t num_qubits() const {
        return n_;
    }
    /// Number of weight-w Paulis: C(n, w) * 3^w.
    uint64_t count_at_weight(size_t weight) const;

    /// Reference implementation: single thread, early exit.
    std::optional<Hit> scan_serial(size_t weight) const;
    /// OpenMP implementation: support ranks are split into chunks, the
    /// lowest-index chunk holding a hit wins.
    std::optional<Hit> scan_parallel(size_t weight, int threads) const;

   private:
    std::optional<Hit> scan_ranks(size_t weight, uint64_t begin, uint64_t end) const;
    bool in_group(uint64_t x, uint64_t z) const;

    size_t n_;
    // letter_syndromes_[letter][q] for letter 0 = X, 1 = Y, 2 = Z.
    std::vector<uint64_t> letter_syndromes_[3];
    // Echelon rows of the group as (x, z) words plus pivot bit (0..127).
    std::vector<std::pair<uint64_t, uint64_t>> group_rows_;
    std::vector<unsigned> group_pivots_;
};

uint64_t binomial(size_t n, size_t k);

}  // namespace codeswitch

#endif
