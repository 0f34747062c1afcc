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

#ifndef CODESWITCH_PATH_H
#define CODESWITCH_PATH_H

#include <cstddef>
#include <cstdint>
#include <vector>

#include "codeswitch/pauli.h"

namespace codeswitch {

/// One measure-and-correct move between adjacent codes: measure the incoming
/// generator (outcome equal to its sign means no correction), otherwise apply
/// the outgoing generator.
struct ConversionStep {
    PauliOp measure;
    PauliOp correct;
    size_t replaced_index = 0;
    bool operator==(const ConversionStep &other) const = default;
};

/// A qubit that is discarded after the conversion, in the single-qubit
/// eigenstate of `basis` ('X' or 'Z') on the target side.
struct Ancilla {
    size_t qubit = 0;
    char basis = 'Z';
    bool operator==(const Ancilla &other) const = default;
};

struct ConversionPath {
    StabilizerCode source;
    StabilizerCode target;
    std::vector<ConversionStep> steps;
    /// steps.size() + 1 codes; front() and back() generate source and target.
    std::vector<StabilizerCode> intermediates;
    std::vector<Ancilla> ancillas;
    uint64_t seed = 0;
    uint64_t retry = 0;
    size_t m = 0;

    size_t num_qubits() const {
        return source.n();
    }
    bool operator==(const ConversionPath &other) const = default;
};

}  // namespace codeswitch

#endif
