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

#ifndef CODESWITCH_RSRA_H
#define CODESWITCH_RSRA_H

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "codeswitch/f2.h"
#include "codeswitch/path.h"
#include "codeswitch/pauli.h"
#include "codeswitch/rng.h"

namespace codeswitch {

/// Row of a printed conversion table, in printed order.
struct LayoutRow {
    char kind = 'C';  // 'A', 'B' or 'C'
    size_t index = 0;  // index into gA / gB / gC
    bool operator==(const LayoutRow &other) const = default;
};

/// Bases of the two padded groups, prepared for the conversion:
///   gA            basis of the signed intersection of S and S'
///   gA ∪ gB       basis of N(S') ∩ S;   gA ∪ gBp  basis of N(S) ∩ S'
///   gA ∪ gB ∪ gC  basis of S;           gA ∪ gBp ∪ gCp  basis of S'
///   gbars[i]      bridge operator for gB[i] (filled in by solve_gbars)
/// After normalization <gCp[i], gC[j]> = δ_ij.
struct Decomposition {
    size_t padded_n = 0;
    size_t m = 0;
    StabilizerCode source;
    StabilizerCode target;
    std::vector<Ancilla> ancillas;
    std::vector<Ancilla> source_ancillas;
    std::vector<PauliOp> gA, gB, gC, gBp, gCp, gbars;
    /// Printed row order for fixtures; empty means the canonical order.
    std::vector<LayoutRow> layout;

    /// H[i][j] = <gCp[i], gC[j]>.
    BitMatrix commutativity_matrix() const;
};

struct RsraConfig {
    size_t m = 0;
    uint64_t seed = 0;
    size_t max_retries = 1000;
    size_t min_distance = 1;
    /// Extra kernel-coset samples when choosing each bridge operator (0: canonical only).
    size_t gbar_weight_search = 0;
    /// 0 means thread_budget().
    int threads = 0;
};

/// Equalizes qubit counts with |0> ancillas on the smaller code, then appends
/// m qubits in |0> to the first code and m qubits in |+> to the second.
/// The returned ancillas are the qubits discarded on the target side.
struct PaddedPair {
    StabilizerCode source;
    StabilizerCode target;
    /// Padding qubits of the target side (discarded at the end).
    std::vector<Ancilla> ancillas;
    /// Padding qubits of the source side (prepared at the start).
    std::vector<Ancilla> source_ancillas;
};
PaddedPair pad(const StabilizerCode &source, const StabilizerCode &target, size_t m);

/// Deterministic bases through the normalization of the commutativity matrix.
Decomposition decompose(const PaddedPair &padded, size_t m);

/// Draws V, V' (|gC| x |gB|) and U in GL(|gC|) from rng, in that order, and
/// replaces gC <- U (V gB + gC), gCp <- U^{-T} (V' gBp + gCp).
Decomposition randomize(Decomposition dec, Rng &rng);
/// Same with explicit matrices.
Decomposition randomize_with(Decomposition dec, const BitMatrix &v, const BitMatrix &vp, const BitMatrix &u);

/// Chooses each bridge operator ḡ_i: commutes with gA, gC, gCp, gB[j > i],
/// gBp[j > i], ḡ[j < i]; anticommutes with gB[i] and gBp[i]; sign +1.
/// With rng and samples > 0, keeps the lowest-weight of `samples` random coset
/// members (ties broken lexicographically on the letter string).
Decomposition solve_gbars(Decomposition dec, Rng *rng = nullptr, size_t samples = 0);

/// The linear constraints of one bridge operator, as (operator, required
/// commutation bit) pairs. Exposed for re-verification.
std::vector<std::pair<PauliOp, bool>> gbar_constraints(const Decomposition &dec, size_t i);

/// Steps gB -> ḡ (forward), gC -> gCp (forward), ḡ -> gBp (backward); or, when
/// a layout is present, printed order with each B row expanded to g -> ḡ -> g'.
/// Throws AdjacencyViolation if any step is not between adjacent codes.
ConversionPath build_path(const Decomposition &dec);

/// The same decomposition viewed from the target side (primed and unprimed
/// blocks exchanged, C blocks reversed), whose path runs the original backwards.
Decomposition reversed(const Decomposition &dec);

/// Throws AdjacencyViolation unless `measure` anticommutes with `correct` and
/// commutes with every other generator of `code`.
void check_adjacent(const StabilizerCode &code, const ConversionStep &step);

struct Rejection {
    uint64_t retry = 0;
    size_t code_index = 0;
    PauliOp witness;
    /// Minimum over all intermediates of the distance (capped at the target).
    size_t min_distance = 0;
};

struct SearchResult {
    std::optional<ConversionPath> path;
    uint64_t retries = 0;
    size_t best_min_distance = 0;
    std::vector<Rejection> rejections;
    bool exhausted() const {
        return !path.has_value();
    }
};

/// pad -> decompose -> (randomize -> solve_gbars -> build_path -> verify) per
/// retry, with retry r drawing from child_seed(seed, r). The lowest successful
/// retry index wins, independent of thread count.
SearchResult search(const StabilizerCode &source, const StabilizerCode &target, const RsraConfig &config);

/// Single draw of the pipeline for retry index r (what search evaluates).
ConversionPath draw_path(const Decomposition &base, const RsraConfig &config, uint64_t retry);

/// Parses a printed conversion table. Grammar, one item per line:
///   # comment
///   @source <code spec>      @target <code spec>      @ancillas <m>
///   A|B|C <source-side Pauli> <target-side Pauli>
///   L <logical> <logical>    bridge for the preceding B row = product of the two
///   G <pauli>                explicit bridge for the preceding B row
/// The printed columns are used verbatim (signs and order); they must generate
/// the padded named codes up to signs, and become the source and target.
/// Throws FixtureInvalid when the rows violate the decomposition invariants.
Decomposition load_fixture_decomposition(std::string_view table_text);

/// Built-in fixtures "table1", "table2", "table3".
std::string_view fixture_text(std::string_view name);

}  // namespace codeswitch

#endif
