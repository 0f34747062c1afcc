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

#include "codeswitch/cli.h"

#include <filesystem>
#include <sstream>

#include "codeswitch/io.h"
#include "codeswitch/rsra.h"
#include "gtest/gtest.h"

namespace codeswitch {
namespace {

struct Result {
    int status = 0;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "codeswitch");
    std::vector<const char *> argv;
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out, err;
    int status = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {status, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
   protected:
    void SetUp() override {
        dir_ = std::filesystem::temp_directory_path() /
               ("codeswitch_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        std::filesystem::create_directories(dir_);
    }
    void TearDown() override {
        std::filesystem::remove_all(dir_);
    }
    std::string file(const std::string &name) const {
        return (dir_ / name).string();
    }
    std::string fixture_file(const char *table) const {
        auto name = file(std::string(table) + ".json");
        write_text_file(name, path_to_json_text(build_path(load_fixture_decomposition(fixture_text(table)))));
        return name;
    }

    std::filesystem::path dir_;
};

TEST_F(CliTest, ConvertSteaneToPerfectCode) {
    auto out = file("path.json");
    auto circuit = file("circuit.json");
    auto r = run({"convert", "--from", "steane7", "--to", "perfect5", "--ancillas", "0", "--min-distance", "3",
                  "--retries", "3000", "--out", out, "--emit-circuit", circuit});
    ASSERT_EQ(r.status, kExitOk) << r.err;
    auto path = path_from_json_text(read_text_file(out));
    EXPECT_TRUE(verify_path(path, 3).pass);
    EXPECT_TRUE(std::filesystem::exists(circuit));
    EXPECT_EQ(run({"verify", out, "--min-distance", "3"}).status, kExitOk);
}

TEST_F(CliTest, ConvertIsByteIdenticalAcrossRunsAndThreadCounts) {
    auto a = file("a.json"), b = file("b.json");
    std::vector<std::string> base = {"convert", "--from", "perm(steane7,(34))", "--to", "shor9",
                                     "--min-distance", "3", "--seed", "11", "--retries", "3000"};
    auto args_a = base;
    args_a.insert(args_a.end(), {"--out", a, "--threads", "1"});
    auto args_b = base;
    args_b.insert(args_b.end(), {"--out", b, "--threads", "4"});
    ASSERT_EQ(run(args_a).status, kExitOk);
    ASSERT_EQ(run(args_b).status, kExitOk);
    EXPECT_EQ(read_text_file(a), read_text_file(b));
}

TEST_F(CliTest, ConvertExhaustsWithoutAncillas) {
    auto r = run({"convert", "--from", "steane7", "--to", "perm(steane7,(34))", "--ancillas", "0", "--min-distance",
                  "3", "--retries", "300", "--out", file("none.json")});
    EXPECT_EQ(r.status, kExitSearchExhausted);
    EXPECT_FALSE(std::filesystem::exists(file("none.json")));
    EXPECT_NE(r.out.find("best"), std::string::npos);
}

TEST_F(CliTest, ConvertUsageErrors) {
    EXPECT_EQ(run({"convert", "--to", "perfect5"}).status, kExitUsage);
    EXPECT_EQ(run({"convert", "--from", "nonsense", "--to", "perfect5"}).status, kExitUsage);
    // [[7,1]] to [[4,2]]: different numbers of logical qubits.
    auto code = file("k2.txt");
    write_text_file(code, "XXXX\nZZZZ\n");
    EXPECT_EQ(run({"convert", "--from", "steane7", "--to", code}).status, kExitUsage);
    EXPECT_EQ(run({"frobnicate"}).status, kExitUsage);
    EXPECT_EQ(run({}).status, kExitUsage);
}

TEST_F(CliTest, ConvertAcceptsCodeFiles) {
    auto text = file("five.txt");
    write_text_file(text, "# cyclic five-qubit code\nXZZXI\nIXZZX\nXIXZZ\nZXIXZ\n");
    auto json = file("five.json");
    write_text_file(json, R"({"n":5,"k":1,"generators":["XZZXI","IXZZX","XIXZZ","ZXIXZ"]})");
    auto out1 = file("p1.json"), out2 = file("p2.json");
    EXPECT_EQ(run({"convert", "--from", "steane7", "--to", text, "--min-distance", "3", "--retries", "3000", "--out", out1}).status, kExitOk);
    EXPECT_EQ(run({"convert", "--from", "steane7", "--to", json, "--min-distance", "3", "--retries", "3000", "--out", out2}).status, kExitOk);
    EXPECT_EQ(read_text_file(out1), read_text_file(out2));
}

TEST_F(CliTest, ConvertIoError) {
    auto r = run({"convert", "--from", "steane7", "--to", "steane7", "--out", file("missing/dir/x.json")});
    EXPECT_EQ(r.status, kExitIo);
}

TEST_F(CliTest, VerifyFixturesAndNegativeControl) {
    auto t1 = fixture_file("table1");
    auto r = run({"verify", t1, "--min-distance", "3", "--subsystem"});
    EXPECT_EQ(r.status, kExitOk) << r.out << r.err;
    EXPECT_EQ(run({"verify", t1, "--min-distance", "1"}).status, kExitOk);

    auto path = path_from_json_text(read_text_file(t1));
    path.intermediates[3] = StabilizerCode(
        7, {PauliOp::from_string("ZIIIIII"), PauliOp::from_string("IZIIIII"), PauliOp::from_string("IIZIIII"),
            PauliOp::from_string("IIIZIII"), PauliOp::from_string("IIIIZII"), PauliOp::from_string("IIIIIZI")});
    auto bad = file("bad.json");
    write_text_file(bad, path_to_json_text(path));
    auto report = file("report.json");
    r = run({"verify", bad, "--min-distance", "3", "--json", report});
    EXPECT_EQ(r.status, kExitCheckFailed);
    EXPECT_NE(r.out.find("witness"), std::string::npos) << r.out;
    EXPECT_NE(read_text_file(report).find("\"pass\": false"), std::string::npos);
}

TEST_F(CliTest, VerifySampledMode) {
    auto t2 = fixture_file("table2");
    auto r = run({"verify", t2, "--min-distance", "3", "--sampled", "100", "--seed", "4"});
    EXPECT_EQ(r.status, kExitOk) << r.out;
    EXPECT_NE(r.out.find("not exhaustive"), std::string::npos);
}

TEST_F(CliTest, MalformedAndMissingFiles) {
    auto junk = file("junk.json");
    write_text_file(junk, "{\"n\": 3");
    EXPECT_EQ(run({"verify", junk}).status, kExitMalformedFile);
    EXPECT_EQ(run({"simulate", junk}).status, kExitMalformedFile);
    EXPECT_EQ(run({"emit", junk}).status, kExitMalformedFile);
    EXPECT_EQ(run({"verify", file("absent.json")}).status, kExitIo);
}

TEST_F(CliTest, SimulateFixtureAndForcedOutcomes) {
    auto t1 = fixture_file("table1");
    auto r = run({"simulate", t1, "--trials", "20", "--seed", "0"});
    EXPECT_EQ(r.status, kExitOk);
    EXPECT_NE(r.out.find("20/20"), std::string::npos) << r.out;
    EXPECT_EQ(run({"simulate", t1, "--trials", "3", "--force-outcomes", "all-minus"}).status, kExitOk);
    EXPECT_EQ(run({"simulate", t1, "--force-outcomes", "sideways"}).status, kExitUsage);

    auto a = file("a.json"), b = file("b.json");
    run({"simulate", t1, "--trials", "4", "--seed", "9", "--out", a});
    run({"simulate", t1, "--trials", "4", "--seed", "9", "--out", b});
    EXPECT_EQ(read_text_file(a), read_text_file(b));
}

TEST_F(CliTest, SimulateEmptyPath) {
    auto empty = file("empty.json");
    ASSERT_EQ(run({"convert", "--from", "steane7", "--to", "steane7", "--out", empty}).status, kExitOk);
    EXPECT_EQ(path_from_json_text(read_text_file(empty)).steps.size(), 0u);
    EXPECT_EQ(run({"simulate", empty, "--trials", "2"}).status, kExitOk);
}

TEST_F(CliTest, SimulateRejectsNonAdjacentSteps) {
    auto path = path_from_json_text(read_text_file(fixture_file("table2")));
    std::swap(path.steps[0], path.steps[1]);
    auto bad = file("swapped.json");
    write_text_file(bad, path_to_json_text(path));
    EXPECT_EQ(run({"simulate", bad}).status, kExitMalformedFile);
}

TEST_F(CliTest, EmitWritesNetlist) {
    auto t1 = fixture_file("table1");
    auto out = file("gadgets.json");
    auto r = run({"emit", t1, "--out", out});
    EXPECT_EQ(r.status, kExitOk);
    EXPECT_NE(r.out.find("17"), std::string::npos);
    auto bundle = bundle_from_json_text(read_text_file(out));
    EXPECT_EQ(bundle.total_multiqubit_gates, 17u);
}

TEST_F(CliTest, BoundsCommand) {
    auto r = run({"bounds", "--lemma1", "3"});
    EXPECT_EQ(r.status, kExitOk);
    EXPECT_NE(r.out.find("5/21"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("0.25"), std::string::npos);
    r = run({"bounds", "--lemma1", "2"});
    EXPECT_EQ(r.status, kExitOk);
    EXPECT_NE(r.out.find("1/3"), std::string::npos);
    EXPECT_NE(r.out.find("warning"), std::string::npos) << r.out;
    r = run({"bounds", "--n", "7", "--d", "3", "--eps", "1", "--min-ancilla"});
    EXPECT_EQ(r.status, kExitOk);
    EXPECT_NE(r.out.find("min ancilla"), std::string::npos) << r.out;
    // For small m the ratio (d-1)/(n+m) is not below 3/4; those rows are flagged.
    r = run({"bounds", "--n", "4", "--d", "5", "--eps", "0.1"});
    EXPECT_EQ(r.status, kExitOk);
    EXPECT_NE(r.out.find("outside the bound's domain"), std::string::npos);
    EXPECT_EQ(run({"bounds", "--n", "7"}).status, kExitUsage);
    EXPECT_EQ(run({"bounds"}).status, kExitUsage);
}

TEST_F(CliTest, ReproduceTables) {
    for (auto table : {"table1", "table2", "table3"}) {
        auto r = run({"reproduce", table});
        EXPECT_EQ(r.status, kExitOk) << table << "\n" << r.out << r.err;
        EXPECT_NE(r.out.find("PASS"), std::string::npos);
    }
    EXPECT_NE(run({"reproduce", "table1"}).out.find("17"), std::string::npos);
    EXPECT_NE(run({"reproduce", "table2"}).out.find("IIIIIIIXX"), std::string::npos);
    EXPECT_EQ(run({"reproduce", "table9"}).status, kExitUsage);
}

TEST_F(CliTest, DistanceCommand) {
    auto r = run({"distance", "perm(steane7,(34))"});
    EXPECT_EQ(r.status, kExitOk);
    EXPECT_NE(r.out.find("3"), std::string::npos);
}

}  // namespace
}  // namespace codeswitch
