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

namespace codeswitch {

Gadget emit_gadget(const ConversionStep &step, size_t index) {
    Gadget g;
    g.step = index;
    g.measure = step.measure;
    auto support = step.measure.support();
    g.cat_size = support.size();

    GadgetOp prepare;
    prepare.kind = GadgetOp::PrepareCat;
    prepare.size = g.cat_size;
    g.ops.push_back(prepare);
    for (size_t j = 0; j < support.size(); j++) {
        GadgetOp c;
        c.kind = GadgetOp::ControlledPauli;
        c.cat = j;
        c.data = support[j];
        c.letter = step.measure.letter(support[j]);
        g.ops.push_back(c);
    }
    GadgetOp readout;
    readout.kind = GadgetOp::MeasureCatX;
    readout.size = g.cat_size;
    g.ops.push_back(readout);
    GadgetOp fix;
    fix.kind = GadgetOp::ConditionalPauli;
    for (size_t q : step.correct.support()) {
        fix.letters.emplace_back(q, step.correct.letter(q));
    }
    g.ops.push_back(fix);
    return g;
}

CircuitBundle emit(const ConversionPath &path) {
    CircuitBundle bundle;
    for (size_t i = 0; i < path.steps.size(); i++) {
        bundle.gadgets.push_back(emit_gadget(path.steps[i], i));
        bundle.total_multiqubit_gates += bundle.gadgets.back().cat_size;
    }
    return bundle;
}

size_t gate_count(const ConversionPath &path) {
    size_t total = 0;
    for (const auto &step : path.steps) {
        total += step.measure.weight();
    }
    return total;
}

}  // namespace codeswitch
