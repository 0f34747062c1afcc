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

#include "codeswitch/catalog.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "codeswitch/error.h"
#include "codeswitch/io.h"

namespace codeswitch {

namespace {

StabilizerCode from_strings(const std::vector<std::string> &gens) {
    std::vector<PauliOp> ops;
    for (const auto &g : gens) {
        ops.push_back(PauliOp::from_string(g));
    }
    size_t n = ops.front().num_qubits();
    return StabilizerCode(n, std::move(ops));
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

}  // namespace

StabilizerCode steane7() {
    return from_strings({
        "XXXXIII",
        "XXIIXXI",
        "XIXIXIX",
        "ZZZZIII",
        "ZZIIZZI",
        "ZIZIZIZ",
    });
}

StabilizerCode perfect5() {
    return from_strings({"XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"});
}

StabilizerCode shor9() {
    return from_strings({
        "ZZIIIIIII",
        "IZZIIIIII",
        "IIIZZIIII",
        "IIIIZZIII",
        "IIIIIIZZI",
        "IIIIIIIZZ",
        "XXXXXXIII",
        "IIIXXXXXX",
    });
}

std::vector<std::string> catalog_names() {
    return {"steane7", "perfect5", "shor9"};
}

std::optional<StabilizerCode> catalog_code(std::string_view name) {
    if (name == "steane7") {
        return steane7();
    }
    if (name == "perfect5") {
        return perfect5();
    }
    if (name == "shor9") {
        return shor9();
    }
    return std::nullopt;
}

std::vector<size_t> parse_cycles(std::string_view cycles, size_t n) {
    std::vector<size_t> perm(n);
    for (size_t q = 0; q < n; q++) {
        perm[q] = q;
    }
    std::vector<bool> seen(n, false);
    cycles = trim(cycles);
    while (!cycles.empty()) {
        if (cycles.front() != '(') {
            throw Error(ErrorCode::ParseError, "cycle notation must start with '('");
        }
        size_t close = cycles.find(')');
        if (close == std::string_view::npos) {
            throw Error(ErrorCode::ParseError, "unterminated cycle");
        }
        std::string_view body = cycles.substr(1, close - 1);
        cycles = trim(cycles.substr(close + 1));

        std::vector<size_t> labels;
        bool separated = body.find_first_of(" ,") != std::string_view::npos;
        if (separated) {
            std::string token;
            std::istringstream in{std::string(body)};
            std::string piece;
            while (in >> piece) {
                std::stringstream parts(piece);
                while (std::getline(parts, token, ',')) {
                    if (!token.empty()) {
                        labels.push_back(std::stoul(token));
                    }
                }
            }
        } else {
            for (char c : body) {
                if (!std::isdigit(static_cast<unsigned char>(c))) {
                    throw Error(ErrorCode::ParseError, "non-digit in cycle");
                }
                labels.push_back(static_cast<size_t>(c - '0'));
            }
        }
        for (size_t &label : labels) {
            if (label < 1 || label > n) {
                throw Error(ErrorCode::ParseError, "qubit label out of range in cycle");
            }
            label -= 1;
            if (seen[label]) {
                throw Error(ErrorCode::ParseError, "qubit appears in more than one cycle");
            }
            seen[label] = true;
        }
        for (size_t i = 0; i < labels.size(); i++) {
            perm[labels[i]] = labels[(i + 1) % labels.size()];
        }
    }
    return perm;
}

StabilizerCode resolve_code(std::string_view spec) {
    spec = trim(spec);
    if (auto code = catalog_code(spec)) {
        return *code;
    }
    if (spec.starts_with("perm(") && spec.ends_with(")")) {
        std::string_view inner = spec.substr(5, spec.size() - 6);
        size_t comma = std::string_view::npos;
        int depth = 0;
        for (size_t i = 0; i < inner.size(); i++) {
            if (inner[i] == '(') {
                depth++;
            } else if (inner[i] == ')') {
                depth--;
            } else if (inner[i] == ',' && depth == 0) {
                comma = i;
            }
        }
        if (comma == std::string_view::npos) {
            throw Error(ErrorCode::ParseError, "expected perm(<code>,<cycles>)");
        }
        StabilizerCode base = resolve_code(inner.substr(0, comma));
        auto perm = parse_cycles(inner.substr(comma + 1), base.n());
        return permute_qubits(base, perm);
    }
    std::ifstream in{std::string(spec)};
    if (!in) {
        throw Error(ErrorCode::ParseError, "unknown code '" + std::string(spec) + "' (not a catalog name or readable file)");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    std::string text = buffer.str();
    std::string_view body = trim(text);
    if (!body.empty() && body.front() == '{') {
        return code_from_json_text(body);
    }
    return parse_code(text);
}

}  // namespace codeswitch
