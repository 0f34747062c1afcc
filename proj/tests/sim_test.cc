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

#include "codeswitch/analysis.h"
#include "codeswitch/catalog.h"
#include "codeswitch/error.h"
#include "codeswitch/rsra.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace codeswitch {
namespace {

using testing::dense_pauli;
using testing::expectation;
using testing::state_of;

TEST(Tableau, ZeroStateMeasurements) {
    Tableau t(1);
    Rng rng(61);
    EXPECT_EQ(t.peek(PauliOp::from_string("Z")), 1);
    EXPECT_EQ(t.peek(PauliOp::from_string("-Z")), -1);
    EXPECT_FALSE(t.peek(PauliOp::from_string("X")).has_value());
    int plus = 0;
    const int draws = 4000;
    for (int i = 0; i < draws; i++) {
        Tableau fresh(1);
        plus += fresh.measure(PauliOp::from_string("X"), rng) == 1;
    }
    EXPECT_NEAR(plus, draws / 2.0, 5 * std::sqrt(draws / 4.0));
}

TEST(Tableau, RepeatedMeasurementIsDeterministic) {
    Rng rng(62);
    for (int trial = 0; trial < 50; trial++) {
        Tableau t(4);
        auto p = testing::random_pauli(4, rng);
        if (p.is_identity()) {
            continue;
        }
        int first = t.measure(p, rng);
        EXPECT_EQ(t.measure(p, rng), first);
        EXPECT_EQ(t.peek(p), first);
    }
}

TEST(Tableau, ForcedOutcomesAndPauliFlips) {
    Rng rng(63);
    Tableau t(2);
    EXPECT_EQ(t.measure(PauliOp::from_string("XX"), rng, -1), -1);
    EXPECT_EQ(t.peek(PauliOp::from_string("-XX")), 1);
    // A determined outcome ignores the forced value.
    EXPECT_EQ(t.measure(PauliOp::from_string("ZZ"), rng, -1), 1);
    t.apply_pauli(PauliOp::from_string("XI"));
    EXPECT_EQ(t.peek(PauliOp::from_string("ZZ")), -1);
    EXPECT_EQ(t.peek(PauliOp::from_string("XX")), -1);
}

TEST(Tableau, MatchesStateVectorOracle) {
    Rng rng(64);
    const size_t n = 4;
    for (int trial = 0; trial < 30; trial++) {
        Tableau t(n);
        for (int step = 0; step < 8; step++) {
            auto p = testing::random_pauli(n, rng);
            if (p.is_identity()) {
                continue;
            }
            if (step % 3 == 2) {
                t.apply_pauli(p);
            } else {
                t.measure(p, rng);
            }
        }
        // Destabilizer i anticommutes with stabilizer j exactly when i = j.
        for (size_t i = 0; i < n; i++) {
            for (size_t j = 0; j < n; j++) {
                EXPECT_EQ(t.destabilizers()[i].commutes_with(t.stabilizers()[j]), i != j);
            }
        }
        auto v = state_of(t.stabilizers(), n);
        ASSERT_FALSE(v.empty());
        for (int probe = 0; probe < 20; probe++) {
            auto q = testing::random_pauli(n, rng);
            double e = expectation(v, q);
            // The letter-by-letter action agrees with the Kronecker-product matrix.
            auto dense = dense_pauli(q);
            testing::StateVector mv(v.size());
            for (size_t r = 0; r < v.size(); r++) {
                for (size_t c = 0; c < v.size(); c++) {
                    mv[r] += dense[r][c] * v[c];
                }
            }
            EXPECT_NEAR(std::abs(testing::inner(mv, testing::apply_to_state(q, v)) - 1.0), 0.0, 1e-9);
            auto known = t.peek(q);
            if (known) {
                EXPECT_NEAR(e, *known, 1e-9) << q.str();
            } else {
                EXPECT_NEAR(e, 0.0, 1e-9) << q.str();
            }
        }
    }
}

TEST(LogicalFrame, IsSymplecticForCatalogAndRandomCodes) {
    Rng rng(65);
    std::vector<StabilizerCode> codes = {steane7(), perfect5(), shor9()};
    for (int i = 0; i < 20; i++) {
        codes.push_back(random_code(6, 1 + i % 3, rng));
    }
    for (const auto &code : codes) {
        auto frame = logical_frame(code);
        ASSERT_EQ(frame.xs.size(), code.k());
        EXPECT_NO_THROW(check_frame(code, frame));
        for (size_t i = 0; i < code.k(); i++) {
            for (size_t j = 0; j < code.k(); j++) {
                EXPECT_EQ(frame.xs[i].commutes_with(frame.zs[j]), i != j);
                EXPECT_TRUE(frame.xs[i].commutes_with(frame.xs[j]));
                EXPECT_TRUE(frame.zs[i].commutes_with(frame.zs[j]));
            }
        }
    }
}

TEST(LogicalFrame, CheckRejectsBrokenFrames) {
    auto code = steane7();
    auto frame = logical_frame(code);
    auto bad = frame;
    bad.xs[0] = bad.zs[0];
    EXPECT_THROW(check_frame(code, bad), Error);
    bad = frame;
    bad.zs[0] = code.generator(3);
    EXPECT_THROW(check_frame(code, bad), Error);
}

TEST(Encode, StateIsStabilizedByCodeAndLogical) {
    for (const auto &code : {steane7(), perfect5()}) {
        auto frame = logical_frame(code);
        for (char basis : {'X', 'Z'}) {
            for (int sign : {+1, -1}) {
                auto t = encode(code, frame, {{0, basis, sign}});
                EXPECT_TRUE(t.stabilized_by(code));
                const auto &logical = basis == 'X' ? frame.xs[0] : frame.zs[0];
                EXPECT_EQ(t.peek(logical), sign);
            }
        }
    }
}

TEST(Encode, ConflictingSelectionsThrow) {
    auto code = steane7();
    auto frame = logical_frame(code);
    try {
        encode(code, frame, {{0, 'X', +1}, {0, 'Z', +1}});
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::InconsistentSpec);
    }
}

ConversionPath fixture_path(const char *name) {
    return build_path(load_fixture_decomposition(fixture_text(name)));
}

TEST(RunPath, FixturesUnderEveryForcedPolicy) {
    for (auto name : {"table1", "table2", "table3"}) {
        auto path = fixture_path(name);
        for (auto policy : {"all-plus", "all-minus", "+-", "-+-"}) {
            for (char basis : {'X', 'Z'}) {
                auto run = run_trial(path, basis, 5, OutcomePolicy::parse(policy));
                EXPECT_TRUE(run.pass()) << name << " " << policy << " " << basis << ": " << run.failure;
            }
        }
    }
}

TEST(RunPath, AllMinusCorrectsEveryRandomStep) {
    auto path = fixture_path("table1");
    auto frame = logical_frame(path.source);
    auto t = encode(path.source, frame, {{0, 'Z', +1}});
    Rng rng(66);
    auto records = run_path(t, path, rng, OutcomePolicy::parse("all-minus"));
    ASSERT_EQ(records.size(), path.steps.size());
    for (const auto &r : records) {
        EXPECT_EQ(r.corrected, r.random);
    }
}

TEST(RunPath, BrokenCorrectionIsDetected) {
    auto path = fixture_path("table1");
    path.steps[1].correct = PauliOp(path.num_qubits());
    auto frame = logical_frame(path.source);
    auto t = encode(path.source, frame, {{0, 'Z', +1}});
    Rng rng(67);
    try {
        run_path(t, path, rng, OutcomePolicy::parse("all-minus"));
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::StabilizationFailure);
    }
}

TEST(OutcomePolicy, Parsing) {
    EXPECT_EQ(OutcomePolicy::parse("random").forced(0), std::nullopt);
    EXPECT_EQ(OutcomePolicy::parse("all-plus").forced(3), 1);
    auto p = OutcomePolicy::parse("+-");
    EXPECT_EQ(p.forced(0), 1);
    EXPECT_EQ(p.forced(1), -1);
    EXPECT_EQ(p.forced(2), 1);
    EXPECT_THROW(OutcomePolicy::parse("maybe"), Error);
}

TEST(TransportLogicals, FixturesYieldTargetFrames) {
    for (auto name : {"table1", "table2", "table3"}) {
        auto path = fixture_path(name);
        auto frame = transport_logicals(logical_frame(path.source), path);
        EXPECT_NO_THROW(check_frame(path.target, frame)) << name;
    }
}

TEST(TransportLogicals, AgreesWithSimulatedState) {
    // A +Z̄ source state must end in the +1 eigenstate of the transported Z̄.
    auto path = fixture_path("table2");
    auto source_frame = logical_frame(path.source);
    auto target_frame = transport_logicals(source_frame, path);
    for (uint64_t seed = 0; seed < 10; seed++) {
        auto t = encode(path.source, source_frame, {{0, 'Z', +1}});
        Rng rng(seed);
        run_path(t, path, rng);
        EXPECT_EQ(t.peek(target_frame.zs[0]), 1);
    }
}

TEST(Simulate, SeededAndPassing) {
    auto path = fixture_path("table3");
    auto a = simulate(path, 8, 99);
    auto b = simulate(path, 8, 99);
    EXPECT_EQ(a.passed, 8u);
    ASSERT_EQ(a.trials.size(), 8u);
    for (size_t i = 0; i < 8; i++) {
        EXPECT_EQ(a.trials[i].seed, child_seed(99, i));
        ASSERT_EQ(a.trials[i].runs.size(), 2u);
        for (size_t r = 0; r < 2; r++) {
            ASSERT_EQ(a.trials[i].runs[r].steps.size(), b.trials[i].runs[r].steps.size());
            for (size_t s = 0; s < a.trials[i].runs[r].steps.size(); s++) {
                EXPECT_EQ(a.trials[i].runs[r].steps[s].outcome, b.trials[i].runs[r].steps[s].outcome);
            }
        }
    }
}

TEST(InjectAndCheck, FixturesPassAndAgreeWithDistance) {
    for (auto name : {"table1", "table2", "table3"}) {
        auto path = fixture_path(name);
        auto report = inject_and_check(path, 2);
        EXPECT_TRUE(report.pass) << name;
        EXPECT_TRUE(report.syndromes_agree) << name;
        EXPECT_GT(report.errors_checked, 0u);
    }
}

TEST(InjectAndCheck, CorruptedIntermediateHasSameWitnessAsDistanceKernel) {
    auto path = fixture_path("table1");
    path.intermediates[2] = StabilizerCode(
        7, {PauliOp::from_string("ZIIIIII"), PauliOp::from_string("IZIIIII"), PauliOp::from_string("IIZIIII"),
            PauliOp::from_string("IIIZIII"), PauliOp::from_string("IIIIZII"), PauliOp::from_string("IIIIIZI")});
    auto report = inject_and_check(path, 2);
    auto verification = verify_path(path, 3);
    EXPECT_FALSE(report.pass);
    EXPECT_FALSE(verification.pass);
    EXPECT_EQ(report.first_failure, verification.first_failure);
    EXPECT_EQ(report.witness, verification.witness);
    EXPECT_TRUE(report.syndromes_agree);
}

}  // namespace
}  // namespace codeswitch
