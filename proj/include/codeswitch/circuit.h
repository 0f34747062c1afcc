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

#ifndef CODESWITCH_CIRCUIT_H
#define CODESWITCH_CIRCUIT_H

#include <cstddef>
#include <utility>
#include <vector>

#include "codeswitch/path.h"

namespace codeswitch {

/// One instruction of a Shor-style measurement gadget.
struct GadgetOp {
    enum Kind { PrepareCat, ControlledPauli, MeasureCatX, ConditionalPauli };
    Kind kind = PrepareCat;
    /// PrepareCat: cat state size.
    size_t size = 0;
    /// ControlledPauli: cat wire, data qubit and the Pauli letter applied.
    size_t cat = 0;
    size_t data = 0;
    char letter = 'I';
    /// ConditionalPauli: (data qubit, letter) pairs, applied when the cat
    /// parity differs from the sign bit of the measured operator.
    std::vector<std::pair<size_t, char>> letters;
    bool operator==(const GadgetOp &other) const = default;
};

/// Measurement of one incoming generator with a verified cat state, followed by
/// the conditional correction.
struct Gadget {
    size_t step = 0;
    PauliOp measure;
    size_t cat_size = 0;
    std::vector<GadgetOp> ops;
    bool operator==(const Gadget &other) const = default;
};

struct CircuitBundle {
    std::vector<Gadget> gadgets;
    /// One controlled Pauli per (cat wire, data qubit) pair.
    size_t total_multiqubit_gates = 0;
    bool operator==(const CircuitBundle &other) const = default;
};

Gadget emit_gadget(const ConversionStep &step, size_t index);
CircuitBundle emit(const ConversionPath &path);

/// Sum over steps of the weight of the measured operator.
size_t gate_count(const ConversionPath &path);

}  // namespace codeswitch

#endif
