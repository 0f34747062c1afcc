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

#ifndef CODESWITCH_CATALOG_H
#define CODESWITCH_CATALOG_H

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "codeswitch/pauli.h"

namespace codeswitch {

/// [[7,1,3]] Steane code in CSS form; X and Z checks on {1,2,3,4}, {1,2,5,6}, {1,3,5,7}.
StabilizerCode steane7();
/// [[5,1,3]] perfect code, cyclic shifts of XZZXI.
StabilizerCode perfect5();
/// [[9,1,3]] Shor code.
StabilizerCode shor9();

std::vector<std::string> catalog_names();
std::optional<StabilizerCode> catalog_code(std::string_view name);

/// Parses 1-based cycle notation such as "(34)", "(3 4)(1,2,5)" into a
/// 0-based permutation of n qubits (perm[q] is the image of q). Cycles
/// without separators are read one digit per qubit.
std::vector<size_t> parse_cycles(std::string_view cycles, size_t n);

/// Resolves a code specifier: a catalog name, "perm(<spec>,<cycles>)", or a
/// path to a code file (text or JSON).
StabilizerCode resolve_code(std::string_view spec);

}  // namespace codeswitch

#endif
