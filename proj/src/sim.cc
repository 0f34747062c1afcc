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

#include "codeswitch/sim.h"

#include <functional>

#include "codeswitch/error.h"

namespace codeswitch {

Tableau::Tableau(size_t num_qubits) : n_(num_qubits) {
    for (size_t q = 0; q < n_; q++) {
        stabilizers_.push_back(PauliOp::single(n_, q, 'Z'));
        destabilizers_.push_back(PauliOp::single(n_, q, 'X'));
    }
}

std::optional<int> Tableau::peek(const PauliOp &p) const {
    if (p.num_qubits() != n_) {
        throw Error(ErrorCode::LengthMismatch, "measured operator has the wrong qubit count");
    }
    BitVector select(n_);
    for (size_t i = 0; i < n_; i++) {
        if (!p.commutes_with(stabilizers_[i])) {
            return std::nullopt;
        }
        select.set(i, !p.commutes_with(destabilizers_[i]));
    }
    PauliOp element = product_of(stabilizers_, select, n_);
    if (!element.same_letters(p)) {
        throw Error(ErrorCode::StabilizationFailure, "tableau rows no longer form a symplectic frame");
    }
    return element.negative() == p.negative() ? +1 : -1;
}

int Tableau::measure(const PauliOp &p, Rng &rng, std::optional<int> forced) {
    if (auto known = peek(p)) {
        return *known;
    }
    size_t pivot = 0;
    while (p.commutes_with(stabilizers_[pivot])) {
        pivot++;
    }
    for (size_t i = 0; i < n_; i++) {
        if (i != pivot && !p.commutes_with(stabilizers_[i])) {
            stabilizers_[i] = multiply(stabilizers_[i], stabilizers_[pivot]);
        }
        if (i != pivot && !p.commutes_with(destabilizers_[i])) {
            PauliOp d = destabilizers_[i];
            d.set_negative(false);
            PauliOp s = stabilizers_[pivot];
            s.set_negative(false);
            destabilizers_[i] = multiply(d, s);
            destabilizers_[i].set_negative(false);
        }
    }
    int outcome = forced ? *forced : ((rng() & 1) ? -1 : +1);
    destabilizers_[pivot] = stabilizers_[pivot];
    destabilizers_[pivot].set_negative(false);
    PauliOp row = p;
    row.set_negative(p.negative() != (outcome < 0));
    stabilizers_[pivot] = std::move(row);
    return outcome;
}

void Tableau::apply_pauli(const PauliOp &p) {
    for (auto &row : stabilizers_) {
        if (!row.commutes_with(p)) {
            row = -row;
        }
    }
}

bool Tableau::stabilized_by(const StabilizerCode &code) const {
    for (const auto &g : code.generators()) {
        if (!stabilized_by(g)) {
            return false;
        }
    }
    return true;
}

LogicalFrame logical_frame(const StabilizerCode &code) {
    std::vector<BitVector> pool;
    for (const auto &op : normalizer_basis(code)) {
        pool.push_back(op.symplectic());
    }
    LogicalFrame frame;
    while (!pool.empty()) {
        BitVector a = pool.front();
        pool.erase(pool.begin());
        size_t partner = pool.size();
        for (size_t j = 0; j < pool.size(); j++) {
            if (symplectic_product(a, pool[j])) {
                partner = j;
                break;
            }
        }
        if (partner == pool.size()) {
            continue;
        }
        BitVector b = pool[partner];
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(partner));
        for (auto &c : pool) {
            bool with_b = symplectic_product(c, b);
            bool with_a = symplectic_product(c, a);
            if (with_b) {
                c ^= a;
            }
            if (with_a) {
                c ^= b;
            }
        }
        frame.xs.push_back(PauliOp::from_symplectic(a));
        frame.zs.push_back(PauliOp::from_symplectic(b));
    }
    check_frame(code, frame);
    return frame;
}

void check_frame(const StabilizerCode &code, const LogicalFrame &frame) {
    if (frame.xs.size() != code.k() || frame.zs.size() != code.k()) {
        throw Error(ErrorCode::InconsistentSpec, "frame size does not match the number of logical qubits");
    }
    auto check_normalizer = [&](const PauliOp &op) {
        if (!syndrome(code, op).is_zero()) {
            throw Error(ErrorCode::InconsistentSpec, "logical " + op.str() + " does not commute with the code");
        }
    };
    for (size_t i = 0; i < code.k(); i++) {
        check_normalizer(frame.xs[i]);
        check_normalizer(frame.zs[i]);
        for (size_t j = 0; j < code.k(); j++) {
            bool ok = frame.xs[i].commutes_with(frame.zs[j]) == (i != j) && frame.xs[i].commutes_with(frame.xs[j]) &&
                      frame.zs[i].commutes_with(frame.zs[j]);
            if (!ok) {
                throw Error(ErrorCode::InconsistentSpec, "logical operators are not a symplectic frame");
            }
        }
    }
}

Tableau encode(const StabilizerCode &code, const LogicalFrame &frame, const std::vector<LogicalSpec> &spec) {
    size_t n = code.n();
    std::vector<PauliOp> targets = code.generators();
    for (const auto &s : spec) {
        if (s.index >= frame.xs.size() || (s.basis != 'X' && s.basis != 'Z') || (s.sign != 1 && s.sign != -1)) {
            throw Error(ErrorCode::InconsistentSpec, "bad logical state selection");
        }
        PauliOp op = s.basis == 'X' ? frame.xs[s.index] : frame.zs[s.index];
        if (s.sign < 0) {
            op = -op;
        }
        for (const auto &t : targets) {
            if (!t.commutes_with(op)) {
                throw Error(ErrorCode::InconsistentSpec, "selected logical operators do not commute");
            }
        }
        targets.push_back(std::move(op));
    }

    Tableau t(n);
    Rng unused(0);
    for (const auto &op : targets) {
        t.measure(op, unused, +1);
    }
    BitVector wrong(targets.size());
    for (size_t i = 0; i < targets.size(); i++) {
        wrong.set(i, t.peek(targets[i]) == -1);
    }
    if (wrong.any()) {
        try {
            auto fix = solve_affine(check_matrix(targets, n), wrong);
            t.apply_pauli(PauliOp::from_symplectic(fix.particular));
        } catch (const Error &) {
            throw Error(ErrorCode::InconsistentSpec, "selected logical eigenvalues are contradictory");
        }
    }
    for (const auto &op : targets) {
        if (!t.stabilized_by(op)) {
            throw Error(ErrorCode::InconsistentSpec, "state could not be prepared");
        }
    }
    return t;
}

StepRecord run_step(Tableau &t, const ConversionStep &step, Rng &rng, std::optional<int> forced) {
    StepRecord record;
    record.random = !t.peek(step.measure).has_value();
    record.outcome = t.measure(step.measure, rng, forced);
    if (record.outcome < 0) {
        t.apply_pauli(step.correct);
        record.corrected = true;
    }
    return record;
}

std::optional<int> OutcomePolicy::forced(size_t step) const {
    switch (kind) {
        case AllPlus:
            return +1;
        case AllMinus:
            return -1;
        case Pattern:
            if (pattern.empty()) {
                return std::nullopt;
            }
            return pattern[step % pattern.size()] == '-' ? -1 : +1;
        default:
            return std::nullopt;
    }
}

OutcomePolicy OutcomePolicy::parse(const std::string &text) {
    OutcomePolicy p;
    if (text == "random") {
        p.kind = Random;
    } else if (text == "all-plus") {
        p.kind = AllPlus;
    } else if (text == "all-minus") {
        p.kind = AllMinus;
    } else {
        if (text.empty() || text.find_first_not_of("+-") != std::string::npos) {
            throw Error(ErrorCode::ParseError, "outcome policy must be random, all-plus, all-minus or a +/- pattern");
        }
        p.kind = Pattern;
        p.pattern = text;
    }
    return p;
}

namespace {

bool ancillas_disentangled(const Tableau &t, const ConversionPath &path) {
    for (const auto &a : path.ancillas) {
        if (!t.peek(PauliOp::single(path.num_qubits(), a.qubit, a.basis))) {
            return false;
        }
    }
    return true;
}

}  // namespace

std::vector<StepRecord> run_path(Tableau &t, const ConversionPath &path, Rng &rng, const OutcomePolicy &policy) {
    if (!path.intermediates.empty() && !t.stabilized_by(path.intermediates.front())) {
        throw Error(ErrorCode::StabilizationFailure, "initial state is not in the source code space");
    }
    std::vector<StepRecord> records;
    for (size_t i = 0; i < path.steps.size(); i++) {
        records.push_back(run_step(t, path.steps[i], rng, policy.forced(i)));
        if (i + 1 < path.intermediates.size() && !t.stabilized_by(path.intermediates[i + 1])) {
            throw Error(ErrorCode::StabilizationFailure, "state left the code space after step " + std::to_string(i));
        }
    }
    if (!t.stabilized_by(path.target)) {
        throw Error(ErrorCode::StabilizationFailure, "final state is not stabilized by the target code");
    }
    if (!ancillas_disentangled(t, path)) {
        throw Error(ErrorCode::StabilizationFailure, "ancilla qubits are entangled with the data");
    }
    return records;
}

LogicalFrame transport_logicals(const LogicalFrame &frame, const ConversionPath &path) {
    LogicalFrame out = frame;
    for (size_t i = 0; i < path.steps.size(); i++) {
        const auto &step = path.steps[i];
        for (auto *ops : {&out.xs, &out.zs}) {
            for (auto &op : *ops) {
                if (op.commutes_with(step.measure)) {
                    continue;
                }
                if (!op.commutes_with(step.correct)) {
                    throw Error(ErrorCode::TransportFailure, "logical " + op.str() + " anticommutes with the outgoing generator");
                }
                op = multiply(op, step.correct);
            }
        }
    }
    try {
        check_frame(path.target, out);
    } catch (const Error &e) {
        throw Error(ErrorCode::TransportFailure, e.what());
    }
    return out;
}

TrialRun run_trial(const ConversionPath &path, char basis, uint64_t seed, const OutcomePolicy &policy) {
    TrialRun run;
    run.basis = basis;
    LogicalFrame frame = logical_frame(path.source);
    std::vector<LogicalSpec> spec;
    for (size_t i = 0; i < path.source.k(); i++) {
        spec.push_back({i, basis, +1});
    }
    Tableau t = encode(path.source, frame, spec);
    Rng rng(seed);
    try {
        run.steps = run_path(t, path, rng, policy);
    } catch (const Error &e) {
        run.failure = e.what();
    }
    run.target_stabilized = t.stabilized_by(path.target);
    run.ancillas_disentangled = ancillas_disentangled(t, path);
    try {
        LogicalFrame moved = transport_logicals(frame, path);
        const auto &ops = basis == 'X' ? moved.xs : moved.zs;
        run.logical_preserved = true;
        for (const auto &op : ops) {
            run.logical_preserved = run.logical_preserved && t.peek(op) == 1;
        }
    } catch (const Error &e) {
        run.failure = e.what();
    }
    return run;
}

bool TrialReport::pass() const {
    for (const auto &r : runs) {
        if (!r.pass()) {
            return false;
        }
    }
    return true;
}

SimulationSummary simulate(const ConversionPath &path, size_t trials, uint64_t seed, const OutcomePolicy &policy) {
    SimulationSummary summary;
    for (size_t i = 0; i < trials; i++) {
        TrialReport report;
        report.seed = child_seed(seed, i);
        report.runs.push_back(run_trial(path, 'Z', child_seed(report.seed, 0), policy));
        report.runs.push_back(run_trial(path, 'X', child_seed(report.seed, 1), policy));
        summary.passed += report.pass();
        summary.trials.push_back(std::move(report));
    }
    return summary;
}

namespace {

/// Calls f on every Pauli of the given weight: supports in lexicographic order,
/// letters X < Y < Z with the last support position varying fastest.
void for_each_weight(size_t n, size_t w, const std::function<bool(const PauliOp &)> &f) {
    if (w == 0 || w > n) {
        return;
    }
    std::vector<size_t> support(w);
    for (size_t i = 0; i < w; i++) {
        support[i] = i;
    }
    static constexpr char kLetters[3] = {'X', 'Y', 'Z'};
    while (true) {
        std::vector<int> digits(w, 0);
        while (true) {
            PauliOp e(n);
            for (size_t j = 0; j < w; j++) {
                e.set_letter(support[j], kLetters[digits[j]]);
            }
            if (!f(e)) {
                return;
            }
            size_t j = w;
            while (j-- > 0 && digits[j] == 2) {
                digits[j] = 0;
            }
            if (j == static_cast<size_t>(-1)) {
                break;
            }
            digits[j]++;
        }
        size_t i = w;
        while (i-- > 0 && support[i] == n - w + i) {
        }
        if (i == static_cast<size_t>(-1)) {
            return;
        }
        support[i]++;
        for (size_t j = i + 1; j < w; j++) {
            support[j] = support[j - 1] + 1;
        }
    }
}

}  // namespace

InjectionReport inject_and_check(const ConversionPath &path, size_t cap) {
    InjectionReport report;
    for (size_t c = 0; c < path.intermediates.size(); c++) {
        const auto &code = path.intermediates[c];
        size_t n = code.n();
        Tableau base = encode(code, logical_frame(code), {});
        for (size_t w = 1; w <= cap; w++) {
            bool keep_going = true;
            for_each_weight(n, w, [&](const PauliOp &e) {
                report.errors_checked++;
                Tableau t = base;
                t.apply_pauli(e);
                BitVector bits(code.num_generators());
                for (size_t i = 0; i < code.num_generators(); i++) {
                    bits.set(i, t.peek(code.generator(i)) == -1);
                }
                if (bits != syndrome(code, e).bits) {
                    report.syndromes_agree = false;
                }
                if (bits.none() && !in_group(code, e).in_group) {
                    if (report.pass) {
                        report.pass = false;
                        report.first_failure = c;
                        report.witness = e;
                    }
                    keep_going = false;
                }
                return keep_going;
            });
            if (!keep_going) {
                break;
            }
        }
    }
    return report;
}

}  // namespace codeswitch
