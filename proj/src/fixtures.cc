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

#include <sstream>

#include "codeswitch/catalog.h"
#include "codeswitch/error.h"
#include "codeswitch/rsra.h"

namespace codeswitch {

namespace {

constexpr std::string_view kTable1 = R"(# [[7,1,3]] -> [[5,1,3]] without ancillas.
@source steane7
@target perfect5
@ancillas 0
A -YXXYIZZ  -YXXYIZZ
C ZZZZIII   IXZZXII
C -YYXXZZI  XZZXIII
C -IXZYYZX  XIXZZII
C -XIYZYZX  ZXIXZII
C -ZYYZIXX  IIIIIZI
)";

// The bridge for the B row is the product of the two complementary logical
// operators XXXXXXXXX and XXXXXXXII.
constexpr std::string_view kTable2 = R"(# (34)[[7,1,3]] -> [[9,1,3]] without ancillas.
@source perm(steane7,(34))
@target shor9
@ancillas 0
A ZZIIZZIII   ZZIIZZIII
A IIIIIIIZZ   IIIIIIIZZ
C YIIYYIYII   -YXYZZIXXX
B ZZZZIIIZI   ZZIIIIZZI
L XXXXXXXXX   XXXXXXXII
C -ZZYYXXIII  IZZZZIIII
C ZIIZZIZII   -YYXXXXIII
C -XZZXYIYII  -XYYIIIXXX
C -IYZXZXYII  IIIZZIIII
)";

constexpr std::string_view kTable3 = R"(# [[7,1,3]] -> (34)[[7,1,3]] with two ancillas.
@source steane7
@target perm(steane7,(34))
@ancillas 2
A XXIIXXIII  XXIIXXIII
A ZZZZIIIII  ZZZZIIIII
A ZZIIZZIII  ZZIIZZIII
A XXXXIIIII  XXXXIIIII
C XIXIXIXII  YIIYYIYXX
C IIIIIIIZZ  XIIXXIXIX
C ZIZIZIZIZ  IIIIIIIXX
C YIYIYIYZZ  XIIXXIXXX
)";

[[noreturn]] void invalid(size_t line, const std::string &message) {
    throw Error(ErrorCode::FixtureInvalid, "line " + std::to_string(line) + ": " + message);
}

PauliOp parse_row_op(const std::string &token, size_t n, size_t line) {
    PauliOp op;
    try {
        op = PauliOp::from_string(token);
    } catch (const Error &e) {
        invalid(line, e.what());
    }
    if (op.num_qubits() != n) {
        invalid(line, "'" + token + "' has " + std::to_string(op.num_qubits()) + " qubits, expected " + std::to_string(n));
    }
    return op;
}

/// The operators generate `code` up to signs (same row space).
std::optional<StabilizerCode> column_code(const std::vector<PauliOp> &ops, const StabilizerCode &code) {
    if (ops.size() != code.num_generators()) {
        return std::nullopt;
    }
    try {
        StabilizerCode column(code.n(), ops);
        BitMatrix both = column.generator_matrix().stacked(code.generator_matrix());
        if (rank(both) != code.num_generators()) {
            return std::nullopt;
        }
        return column;
    } catch (const Error &) {
        return std::nullopt;
    }
}

bool commutes_with_all(const PauliOp &op, const std::vector<PauliOp> &group) {
    for (const auto &g : group) {
        if (!op.commutes_with(g)) {
            return false;
        }
    }
    return true;
}

}  // namespace

std::string_view fixture_text(std::string_view name) {
    if (name == "table1") {
        return kTable1;
    }
    if (name == "table2") {
        return kTable2;
    }
    if (name == "table3") {
        return kTable3;
    }
    throw Error(ErrorCode::ParseError, "unknown fixture '" + std::string(name) + "'");
}

Decomposition load_fixture_decomposition(std::string_view table_text) {
    std::optional<StabilizerCode> source, target;
    std::optional<size_t> m;
    struct Row {
        char kind;
        std::vector<std::string> tokens;
        size_t line;
    };
    std::vector<Row> rows;

    std::istringstream in{std::string(table_text)};
    std::string raw;
    size_t line_no = 0;
    while (std::getline(in, raw)) {
        line_no++;
        std::istringstream fields(raw);
        std::string head;
        if (!(fields >> head) || head.front() == '#') {
            continue;
        }
        std::string rest;
        std::getline(fields, rest);
        try {
            if (head == "@source") {
                source = resolve_code(rest);
                continue;
            }
            if (head == "@target") {
                target = resolve_code(rest);
                continue;
            }
            if (head == "@ancillas") {
                m = std::stoul(rest);
                continue;
            }
        } catch (const std::exception &e) {
            invalid(line_no, e.what());
        }
        if (head.size() != 1 || std::string_view("ABCLG").find(head[0]) == std::string_view::npos) {
            invalid(line_no, "unknown row type '" + head + "'");
        }
        Row row{head[0], {}, line_no};
        std::istringstream toks(rest);
        std::string tok;
        while (toks >> tok) {
            row.tokens.push_back(tok);
        }
        size_t expected = row.kind == 'G' ? 1 : 2;
        if (row.tokens.size() != expected) {
            invalid(line_no, "expected " + std::to_string(expected) + " operators");
        }
        rows.push_back(std::move(row));
    }
    if (!source || !target || !m) {
        throw Error(ErrorCode::FixtureInvalid, "fixture must declare @source, @target and @ancillas");
    }

    PaddedPair padded = pad(*source, *target, *m);
    size_t n = padded.source.n();
    Decomposition dec;
    dec.padded_n = n;
    dec.m = *m;
    dec.source = padded.source;
    dec.target = padded.target;
    dec.ancillas = padded.ancillas;
    dec.source_ancillas = padded.source_ancillas;

    for (const auto &row : rows) {
        if (row.kind == 'L' || row.kind == 'G') {
            if (dec.gbars.size() + 1 != dec.gB.size()) {
                invalid(row.line, "bridge row must follow its B row");
            }
            PauliOp bridge;
            if (row.kind == 'G') {
                bridge = parse_row_op(row.tokens[0], n, row.line);
            } else {
                PauliOp a = parse_row_op(row.tokens[0], n, row.line);
                PauliOp b = parse_row_op(row.tokens[1], n, row.line);
                if (!a.commutes_with(b)) {
                    invalid(row.line, "logical operators anticommute");
                }
                bridge = multiply(a, b);
            }
            dec.gbars.push_back(std::move(bridge));
            continue;
        }
        PauliOp left = parse_row_op(row.tokens[0], n, row.line);
        PauliOp right = parse_row_op(row.tokens[1], n, row.line);
        if (row.kind == 'A') {
            if (left != right) {
                invalid(row.line, "shared row differs between columns");
            }
            dec.layout.push_back({'A', dec.gA.size()});
            dec.gA.push_back(left);
        } else if (row.kind == 'B') {
            if (dec.gbars.size() != dec.gB.size()) {
                invalid(row.line, "previous B row has no bridge");
            }
            dec.layout.push_back({'B', dec.gB.size()});
            dec.gB.push_back(left);
            dec.gBp.push_back(right);
        } else {
            dec.layout.push_back({'C', dec.gC.size()});
            dec.gC.push_back(left);
            dec.gCp.push_back(right);
        }
    }
    if (dec.gbars.size() != dec.gB.size()) {
        throw Error(ErrorCode::FixtureInvalid, "every B row needs a bridge row");
    }

    std::vector<PauliOp> left_column, right_column;
    for (const auto &row : dec.layout) {
        if (row.kind == 'A') {
            left_column.push_back(dec.gA[row.index]);
            right_column.push_back(dec.gA[row.index]);
        } else if (row.kind == 'B') {
            left_column.push_back(dec.gB[row.index]);
            right_column.push_back(dec.gBp[row.index]);
        } else {
            left_column.push_back(dec.gC[row.index]);
            right_column.push_back(dec.gCp[row.index]);
        }
    }
    // The printed columns are taken verbatim, signs included; they must agree
    // with the named codes up to signs.
    auto left = column_code(left_column, dec.source);
    if (!left) {
        throw Error(ErrorCode::FixtureInvalid, "left column does not generate the padded source code");
    }
    auto right = column_code(right_column, dec.target);
    if (!right) {
        throw Error(ErrorCode::FixtureInvalid, "right column does not generate the padded target code");
    }
    dec.source = std::move(*left);
    dec.target = std::move(*right);
    for (size_t i = 0; i < dec.gB.size(); i++) {
        if (!commutes_with_all(dec.gB[i], right_column) || !commutes_with_all(dec.gBp[i], left_column)) {
            throw Error(ErrorCode::FixtureInvalid, "B row " + std::to_string(i) + " is not in the other normalizer");
        }
    }
    if (!dec.commutativity_matrix().is_identity()) {
        throw Error(ErrorCode::FixtureInvalid, "C rows are not paired by anticommutation");
    }
    for (size_t i = 0; i < dec.gB.size(); i++) {
        for (const auto &[op, anti] : gbar_constraints(dec, i)) {
            if (op.commutes_with(dec.gbars[i]) == anti) {
                throw Error(
                    ErrorCode::FixtureInvalid,
                    "bridge " + dec.gbars[i].str() + " violates a constraint against " + op.str());
            }
        }
    }
    return dec;
}

}  // namespace codeswitch
