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

#include "codeswitch/pauli.h"

#include "codeswitch/catalog.h"
#include "codeswitch/error.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace codeswitch {
namespace {

using testing::dense_pauli;
using testing::letters_commute;
using testing::matmul;
using testing::matrices_equal;
using testing::random_pauli;

TEST(PauliOp, ParsesSignsAndLetters) {
    auto p = PauliOp::from_string("-YXXYIZZ");
    EXPECT_TRUE(p.negative());
    EXPECT_EQ(p.num_qubits(), 7u);
    EXPECT_EQ(p.weight(), 6u);
    EXPECT_EQ(p.str(), "-YXXYIZZ");
    EXPECT_EQ(PauliOp::from_string("XZ").str(), "+XZ");
    EXPECT_EQ(PauliOp::from_string("\xE2\x88\x92ZZ").str(), "-ZZ");
    EXPECT_EQ(p.support(), (std::vector<size_t>{0, 1, 2, 3, 5, 6}));
    try {
        PauliOp::from_string("XQ");
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::BadCharacter);
    }
}

TEST(PauliOp, SymplecticLayout) {
    auto p = PauliOp::from_string("XYZI");
    EXPECT_EQ(p.symplectic().str(), "11000110");
    EXPECT_EQ(PauliOp::from_symplectic(p.symplectic()).letters(), "XYZI");
}

TEST(PauliOp, CommutationMatchesLetterCounting) {
    Rng rng(21);
    for (int trial = 0; trial < 500; trial++) {
        size_t n = 1 + rng() % 9;
        auto a = random_pauli(n, rng);
        auto b = random_pauli(n, rng);
        EXPECT_EQ(a.commutes_with(b), letters_commute(a.letters(), b.letters()));
    }
}

TEST(Multiply, MatchesDenseMatricesOnSevenQubits) {
    Rng rng(22);
    int checked = 0;
    while (checked < 40) {
        auto a = random_pauli(7, rng);
        auto b = random_pauli(7, rng);
        if (!a.commutes_with(b)) {
            EXPECT_THROW(multiply(a, b), Error);
            continue;
        }
        auto c = multiply(a, b);
        EXPECT_TRUE(matrices_equal(dense_pauli(c), matmul(dense_pauli(a), dense_pauli(b))))
            << a.str() << " * " << b.str() << " = " << c.str();
        checked++;
    }
}

TEST(ProductPhase, MatchesDenseMatricesIncludingImaginaryPhases) {
    Rng rng(23);
    const testing::Complex i(0, 1);
    const testing::Complex powers[4] = {1, i, -1, -i};
    for (int trial = 0; trial < 100; trial++) {
        auto a = random_pauli(3, rng);
        auto b = random_pauli(3, rng);
        unsigned e = product_phase(a, b);
        PauliOp r(a.xs() ^ b.xs(), a.zs() ^ b.zs());
        auto expected = dense_pauli(r);
        for (auto &row : expected) {
            for (auto &x : row) {
                x *= powers[e];
            }
        }
        EXPECT_TRUE(matrices_equal(expected, matmul(dense_pauli(a), dense_pauli(b))));
    }
}

TEST(ProductPhase, SingleQubitTable) {
    auto X = PauliOp::from_string("X"), Y = PauliOp::from_string("Y"), Z = PauliOp::from_string("Z");
    EXPECT_EQ(product_phase(X, Y), 1u);
    EXPECT_EQ(product_phase(Y, Z), 1u);
    EXPECT_EQ(product_phase(Z, X), 1u);
    EXPECT_EQ(product_phase(Y, X), 3u);
    EXPECT_EQ(product_phase(X, X), 0u);
    EXPECT_EQ(product_phase(-X, X), 2u);
}

TEST(StabilizerCode, ValidatesGenerators) {
    EXPECT_NO_THROW(steane7());
    try {
        StabilizerCode(2, {PauliOp::from_string("XI"), PauliOp::from_string("ZI")});
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::AnticommutingGenerators);
    }
    try {
        StabilizerCode(2, {PauliOp::from_string("ZZ"), PauliOp::from_string("-ZZ")});
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::DependentGenerators);
    }
    try {
        StabilizerCode(3, {PauliOp::from_string("ZZ")});
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::WrongLength);
    }
}

TEST(StabilizerCode, SameGroupHonorsSigns) {
    auto a = StabilizerCode(2, {PauliOp::from_string("ZZ"), PauliOp::from_string("XX")});
    auto b = StabilizerCode(2, {PauliOp::from_string("XX"), PauliOp::from_string("YY").operator-()});
    auto c = StabilizerCode(2, {PauliOp::from_string("XX"), PauliOp::from_string("YY")});
    // XX * ZZ = -YY.
    EXPECT_TRUE(a.same_group(b));
    EXPECT_FALSE(a.same_group(c));
}

TEST(Syndrome, BitsAreCommutationWithGenerators) {
    auto code = steane7();
    auto s = syndrome(code, PauliOp::from_string("XIIIIII"));
    EXPECT_EQ(s.bits.str(), "000111");
    EXPECT_TRUE(syndrome(code, PauliOp::from_string("XXXXXXX")).is_zero());
}

TEST(InGroup, ReportsMembershipAndSign) {
    auto code = steane7();
    auto m = in_group(code, PauliOp::from_string("IIXXXXI"));
    EXPECT_TRUE(m.in_group);
    EXPECT_TRUE(m.sign_matches);
    EXPECT_FALSE(in_group(code, PauliOp::from_string("-IIXXXXI")).sign_matches);
    EXPECT_FALSE(in_group(code, PauliOp::from_string("XXXXXXX")).in_group);
    EXPECT_THROW(in_group(code, PauliOp::from_string("XX")), Error);
}

TEST(NormalizerBasis, DimensionIsNPlusK) {
    for (const auto &name : catalog_names()) {
        auto code = *catalog_code(name);
        auto basis = normalizer_basis(code);
        EXPECT_EQ(basis.size(), code.n() + code.k());
        for (const auto &op : basis) {
            EXPECT_TRUE(syndrome(code, op).is_zero());
        }
    }
}

TEST(ChangeGenerators, PreservesGroup) {
    Rng rng(24);
    auto code = perfect5();
    for (int trial = 0; trial < 20; trial++) {
        auto changed = change_generators(code, random_gl(code.num_generators(), rng));
        EXPECT_TRUE(changed.same_group(code));
    }
}

TEST(PermuteQubits, MovesLetters) {
    auto code = StabilizerCode(3, {PauliOp::from_string("XZI")});
    std::vector<size_t> perm = {2, 0, 1};
    EXPECT_EQ(permute_qubits(code, perm).generator(0).letters(), "ZIX");
}

TEST(RandomCode, ProducesValidCodesOfRequestedShape) {
    Rng rng(25);
    for (int trial = 0; trial < 30; trial++) {
        auto code = random_code(6, 1, rng);
        EXPECT_EQ(code.n(), 6u);
        EXPECT_EQ(code.k(), 1u);
    }
}

TEST(CodeText, ParsesCommentsAndRoundTrips) {
    auto code = parse_code("# steane-like\n+XXXXIII\n-XXIIXXI\n XIXIXIX\nZZZZIII\nZZIIZZI\nZIZIZIZ\n");
    EXPECT_EQ(code.n(), 7u);
    EXPECT_EQ(code.k(), 1u);
    EXPECT_TRUE(code.generator(1).negative());
    EXPECT_EQ(parse_code(format_code(code)), code);
    EXPECT_THROW(parse_code("XX\nZZZ\n"), Error);
    EXPECT_THROW(parse_code("# nothing\n"), Error);
}

}  // namespace
}  // namespace codeswitch
