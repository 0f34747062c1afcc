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

#include "codeswitch/circuit.h"

#include "codeswitch/io.h"
#include "codeswitch/rsra.h"
#include "gtest/gtest.h"

namespace codeswitch {
namespace {

ConversionPath fixture_path(const char *name) {
    return build_path(load_fixture_decomposition(fixture_text(name)));
}

TEST(GateCount, Table1NeedsSeventeenMultiQubitGates) {
    auto path = fixture_path("table1");
    EXPECT_EQ(gate_count(path), 17u);
    EXPECT_EQ(emit(path).total_multiqubit_gates, 17u);
}

TEST(GateCount, EqualsSumOfMeasuredWeights) {
    for (auto name : {"table1", "table2", "table3"}) {
        auto path = fixture_path(name);
        size_t expected = 0;
        for (const auto &step : path.steps) {
            for (size_t q = 0; q < step.measure.num_qubits(); q++) {
                expected += step.measure.letter(q) != 'I';
            }
        }
        EXPECT_EQ(gate_count(path), expected) << name;
        EXPECT_EQ(emit(path).total_multiqubit_gates, expected) << name;
    }
}

TEST(Emit, EmptyPathHasNoGadgets) {
    ConversionPath path;
    auto bundle = emit(path);
    EXPECT_TRUE(bundle.gadgets.empty());
    EXPECT_EQ(bundle.total_multiqubit_gates, 0u);
}

TEST(EmitGadget, WeightOneMeasurement) {
    ConversionStep step{PauliOp::from_string("IIX"), PauliOp::from_string("-ZZI"), 2};
    auto g = emit_gadget(step, 4);
    EXPECT_EQ(g.step, 4u);
    EXPECT_EQ(g.cat_size, 1u);
    ASSERT_EQ(g.ops.size(), 4u);
    EXPECT_EQ(g.ops[0].kind, GadgetOp::PrepareCat);
    EXPECT_EQ(g.ops[1].kind, GadgetOp::ControlledPauli);
    EXPECT_EQ(g.ops[1].data, 2u);
    EXPECT_EQ(g.ops[1].letter, 'X');
    EXPECT_EQ(g.ops[2].kind, GadgetOp::MeasureCatX);
    EXPECT_EQ(g.ops[3].kind, GadgetOp::ConditionalPauli);
    EXPECT_EQ(g.ops[3].letters, (std::vector<std::pair<size_t, char>>{{0, 'Z'}, {1, 'Z'}}));
}

TEST(EmitGadget, ControlledLettersRebuildMeasuredOperator) {
    for (auto name : {"table1", "table2", "table3"}) {
        auto path = fixture_path(name);
        auto bundle = emit(path);
        ASSERT_EQ(bundle.gadgets.size(), path.steps.size());
        for (size_t i = 0; i < path.steps.size(); i++) {
            const auto &g = bundle.gadgets[i];
            PauliOp rebuilt(path.num_qubits());
            PauliOp fix(path.num_qubits());
            std::vector<bool> cat_used(g.cat_size, false);
            for (const auto &op : g.ops) {
                if (op.kind == GadgetOp::ControlledPauli) {
                    EXPECT_EQ(rebuilt.letter(op.data), 'I');
                    ASSERT_LT(op.cat, g.cat_size);
                    EXPECT_FALSE(cat_used[op.cat]);
                    cat_used[op.cat] = true;
                    rebuilt.set_letter(op.data, op.letter);
                } else if (op.kind == GadgetOp::ConditionalPauli) {
                    for (const auto &[q, letter] : op.letters) {
                        fix.set_letter(q, letter);
                    }
                }
            }
            EXPECT_TRUE(rebuilt.same_letters(path.steps[i].measure)) << name << " " << i;
            EXPECT_TRUE(fix.same_letters(path.steps[i].correct)) << name << " " << i;
        }
    }
}

TEST(BundleJson, RoundTripsAndUsesDocumentedFieldNames) {
    auto bundle = emit(fixture_path("table2"));
    auto text = bundle_to_json_text(bundle);
    EXPECT_EQ(bundle_from_json_text(text), bundle);
    EXPECT_NE(text.find("\"prepare_cat\""), std::string::npos);
    EXPECT_NE(text.find("\"cpauli\""), std::string::npos);
    EXPECT_NE(text.find("\"measure_cat_x\""), std::string::npos);
    EXPECT_NE(text.find("\"parity!=target\""), std::string::npos);
}

}  // namespace
}  // namespace codeswitch
