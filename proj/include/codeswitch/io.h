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

#ifndef CODESWITCH_IO_H
#define CODESWITCH_IO_H

#include <filesystem>
#include <string>
#include <string_view>

#include "codeswitch/analysis.h"
#include "codeswitch/circuit.h"
#include "codeswitch/path.h"
#include "codeswitch/pauli.h"
#include "codeswitch/sim.h"

namespace codeswitch {

// JSON forms. Parsing functions throw ParseError on malformed input.
//   code:  {"n":7,"k":1,"generators":["-YXXYIZZ", ...]}
//   path:  {"n":..,"ancilla_qubits":[..],"ancilla_basis":"ZX..","source":{code},
//           "target":{code},"steps":[{"measure","correct","replaced_index"}],
//           "intermediates":[{code},..],"seed":..,"retry":..,"m":..}

std::string code_to_json_text(const StabilizerCode &code);
StabilizerCode code_from_json_text(std::string_view text);

std::string path_to_json_text(const ConversionPath &path);
ConversionPath path_from_json_text(std::string_view text);

std::string bundle_to_json_text(const CircuitBundle &bundle);
CircuitBundle bundle_from_json_text(std::string_view text);

std::string verification_to_json_text(const PathVerification &verification, size_t d);
std::string simulation_to_json_text(const SimulationSummary &summary);

/// Whole-file helpers; throw IoError when the file cannot be read or written.
std::string read_text_file(const std::filesystem::path &path);
void write_text_file(const std::filesystem::path &path, std::string_view text);

}  // namespace codeswitch

#endif
