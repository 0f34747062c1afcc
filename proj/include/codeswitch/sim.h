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

#ifndef CODESWITCH_SIM_H
#define CODESWITCH_SIM_H

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "codeswitch/path.h"
#include "codeswitch/pauli.h"
#include "codeswitch/rng.h"

namespace codeswitch {

/// Stabilizer state as stabilizer rows plus destabilizer rows (destabilizer i
/// anticommutes with stabilizer i only). Destabilizer signs are not tracked.
class Tableau {
   public:
    /// |0...0>.
    explicit Tableau(size_t num_qubits);

    size_t num_qubits() const {
        return n_;
    }
    const std::vector<PauliOp> &stabilizers() const {
        return stabilizers_;
    }
    const std::vector<PauliOp> &destabilizers() const {
        return destabilizers_;
    }

    /// The outcome of measuring p (+1 or -1) if it is determined, without
    /// changing the state.
    std::optional<int> peek(const PauliOp &p) const;

    /// Measures p. A random outcome is drawn from rng unless `forced` is given;
    /// a determined outcome ignores `forced`.
    int measure(const PauliOp &p, Rng &rng, std::optional<int> forced = std::nullopt);

    /// Conjugation by p: flips the sign of every stabilizer anticommuting with p.
    void apply_pauli(const PauliOp &p);

    bool stabilized_by(const PauliOp &p) const {
        return peek(p) == 1;
    }
    bool stabilized_by(const StabilizerCode &code) const;

   private:
    size_t n_;
    std::vector<PauliOp> stabilizers_;
    std::vector<PauliOp> destabilizers_;
};

/// k pairs of logical operators: xs[i] anticommutes with zs[i] only.
struct LogicalFrame {
    std::vector<PauliOp> xs;
    std::vector<PauliOp> zs;
};

/// A symplectic basis of N(S) modulo S, by Gram-Schmidt on normalizer_basis().
LogicalFrame logical_frame(const StabilizerCode &code);

/// Throws InconsistentSpec unless the frame is valid for the code.
void check_frame(const StabilizerCode &code, const LogicalFrame &frame);

/// Selected logical eigenstate: logical `index` in basis 'X' or 'Z', sign +1 or -1.
struct LogicalSpec {
    size_t index = 0;
    char basis = 'Z';
    int sign = +1;
};

/// State stabilized by every signed code generator and the selected signed
/// logical operators. Throws InconsistentSpec for conflicting selections.
Tableau encode(const StabilizerCode &code, const LogicalFrame &frame, const std::vector<LogicalSpec> &spec);

struct StepRecord {
    int outcome = +1;
    bool random = false;
    bool corrected = false;
};

/// Measures step.measure; when the outcome is -1 (relative to its sign),
/// applies step.correct.
StepRecord run_step(Tableau &t, const ConversionStep &step, Rng &rng, std::optional<int> forced = std::nullopt);

/// How the random measurement outcomes are chosen.
struct OutcomePolicy {
    enum Kind { Random, AllPlus, AllMinus, Pattern };
    Kind kind = Random;
    /// For Pattern: one '+' or '-' per step (cycled if shorter).
    std::string pattern;

    std::optional<int> forced(size_t step) const;
    /// "random", "all-plus", "all-minus", or a string of '+'/'-'.
    static OutcomePolicy parse(const std::string &text);
};

/// Runs every step, checking each intermediate code stabilizes the state, then
/// checks the target code and that ancillas are disentangled.
/// Throws StabilizationFailure on any violation.
std::vector<StepRecord> run_path(Tableau &t, const ConversionPath &path, Rng &rng, const OutcomePolicy &policy = {});

/// Carries logical representatives through the path: a representative that
/// anticommutes with a measured operator is multiplied by the outgoing one.
/// Throws TransportFailure if the result is not a frame of the target code.
LogicalFrame transport_logicals(const LogicalFrame &frame, const ConversionPath &path);

struct TrialRun {
    char basis = 'Z';
    std::vector<StepRecord> steps;
    bool target_stabilized = false;
    bool ancillas_disentangled = false;
    bool logical_preserved = false;
    std::string failure;
    bool pass() const {
        return target_stabilized && ancillas_disentangled && logical_preserved;
    }
};

struct TrialReport {
    uint64_t seed = 0;
    std::vector<TrialRun> runs;
    bool pass() const;
};

struct SimulationSummary {
    std::vector<TrialReport> trials;
    size_t passed = 0;
};

/// One encode/run/check cycle of the path for the all-+Z̄ or all-+X̄ state.
TrialRun run_trial(const ConversionPath &path, char basis, uint64_t seed, const OutcomePolicy &policy = {});

/// `trials` trials; trial t uses child_seed(seed, t) and runs both bases.
SimulationSummary simulate(const ConversionPath &path, size_t trials, uint64_t seed, const OutcomePolicy &policy = {});

struct InjectionReport {
    bool pass = true;
    size_t errors_checked = 0;
    std::optional<size_t> first_failure;
    std::optional<PauliOp> witness;
    /// Tableau-extracted syndromes matched pauli::syndrome for every error.
    bool syndromes_agree = true;
};

/// Encodes each intermediate, applies every Pauli error of weight 1..cap, and
/// reads the syndrome off the tableau. Fails on an error with zero syndrome
/// that is outside the group.
InjectionReport inject_and_check(const ConversionPath &path, size_t cap);

}  // namespace codeswitch

#endif
