// Copyright 2026 The paulilogic Authors
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

#include "cli.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"
#include "json.hpp"

using namespace paulilogic;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string &name) {
    return std::string(PAULILOGIC_DATA_DIR) + "/" + name;
}

std::string read_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::filesystem::path temp_path(const std::string &name) {
    return std::filesystem::temp_directory_path() / ("paulilogic_cli_test_" + name);
}

}  // namespace

TEST(cli, check_ghz) {
    Outcome r = run({"check", "--axioms", data("ghz.axioms"), "--prop", "XXX"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "dependent, k=(1,1,1), classical=1, quantum=0\n");

    Outcome j = run({"check", "--axioms", "-YYX,-YXY,-XYY", "--prop", "XXX", "--json"});
    ASSERT_EQ(j.code, 0) << j.err;
    auto parsed = nlohmann::json::parse(j.out);
    EXPECT_EQ(parsed["dependent"], true);
    EXPECT_EQ(parsed["classical"], 1);
    EXPECT_EQ(parsed["quantum"], 0);
    EXPECT_EQ(parsed["phase_flip"], 1);

    EXPECT_EQ(run({"check", "--axioms", "+Z", "--prop", "X"}).out, "independent\n");
}

TEST(cli, enumerate) {
    Outcome r = run({"enumerate", "--n", "2"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "dependent: 4, independent: 12\n");
    EXPECT_EQ(run({"enumerate", "--n", "3", "--axioms", data("ghz.tab")}).out, "dependent: 8, independent: 56\n");
    EXPECT_EQ(run({"enumerate", "--n", "9"}).code, 1);
}

TEST(cli, measure) {
    Outcome r = run({"measure", "--state", data("bell.tab"), "--obs", "ZI"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.rfind("random outcome=", 0), 0u) << r.out;
    EXPECT_EQ(run({"measure", "--state", data("bell.tab"), "--obs", "ZI", "--seed", "42"}).out, r.out);
    EXPECT_EQ(run({"measure", "--state", data("bell.tab"), "--obs", "YY"}).out, "deterministic outcome=-1\n");
    EXPECT_EQ(run({"measure", "--state", data("z_plus.tab"), "--obs", "Z", "--config", "y2"}).out,
              "deterministic outcome=-1\n");
}

TEST(cli, prepare_and_blackbox_round_trip) {
    auto path = temp_path("ghz_state.tab");
    Outcome r = run({"prepare", "--axioms", data("ghz.axioms"), "--out", path.string()});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "");
    // The prepared file is itself a valid state input.
    Outcome m = run({"measure", "--state", path.string(), "--obs", "XXX"});
    EXPECT_EQ(m.out, "deterministic outcome=+1\n");

    Outcome b = run({"blackbox", "--state", data("z_plus.tab"), "--config", "y2"});
    EXPECT_EQ(b.code, 0);
    EXPECT_NE(b.out.find("\n-Z\n"), std::string::npos) << b.out;
    std::filesystem::remove(path);
}

TEST(cli, sample_csv) {
    Outcome r = run({"sample", "--state", data("bell.tab"), "--obs", "ZI,IZ", "--runs", "1000"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out.rfind("# sample seed=42 runs=1000 flip_prob=0 bias=uniform\n", 0), 0u) << r.out;
    EXPECT_NE(r.out.find("state,basis,outcome_label,count,frequency\n"), std::string::npos);
    EXPECT_NE(r.out.find("state,+ZI +IZ,01,0,0.000000\n"), std::string::npos) << r.out;
}

TEST(cli, demos_reproducible_byte_identical) {
    std::vector<std::vector<std::string>> commands = {
        {"q1-demo", "--config", "y1", "--runs", "2000", "--noise", "0.05"},
        {"q2-demo", "--config", data("y2y2.config"), "--runs", "2000"},
        {"ghz-demo"},
        {"decay-study", "--noise", "0.1", "--trials", "200", "--lengths", "10,20"},
        {"sample", "--state", data("ghz.tab"), "--obs", "XII,IXI,IIX", "--runs", "500", "--bias", "1:2:1:1:1:1:1:3"},
    };
    for (auto args : commands) {
        auto a = temp_path("a.csv");
        auto b = temp_path("b.csv");
        auto with_a = args;
        with_a.insert(with_a.end(), {"--seed", "9", "--out", a.string()});
        auto with_b = args;
        with_b.insert(with_b.end(), {"--seed", "9", "--out", b.string()});
        ASSERT_EQ(run(with_a).code, 0) << args[0];
        ASSERT_EQ(run(with_b).code, 0) << args[0];
        std::string first = read_file(a);
        EXPECT_FALSE(first.empty());
        EXPECT_EQ(first, read_file(b)) << args[0];
        std::filesystem::remove(a);
        std::filesystem::remove(b);
    }
}

TEST(cli, demo_outputs) {
    Outcome q1 = run({"q1-demo", "--runs", "100", "--seed", "3"});
    EXPECT_EQ(q1.out.rfind("# q1-demo seed=3 runs=100 flip_prob=0 bias=uniform config=y0\n", 0), 0u) << q1.out;
    EXPECT_NE(q1.out.find("z+,z,0,100,1.000000\n"), std::string::npos);

    Outcome ghz = run({"ghz-demo"});
    EXPECT_NE(ghz.out.find("# contradictions: 64/64\n"), std::string::npos);
    Outcome one = run({"ghz-demo", "--config", "y0,y0,y0"});
    EXPECT_NE(one.out.find("contradiction: yes\n"), std::string::npos);

    Outcome decay = run({"decay-study", "--noise", "0.1", "--trials", "100", "--lengths", "10"});
    EXPECT_EQ(decay.code, 0) << decay.err;
    EXPECT_EQ(decay.out.rfind("# decay-study seed=42 flip_prob=0.1 bias=uniform threshold=0.25\n", 0), 0u);

    Outcome oracle = run({"oracle-compare", "--n", "3", "--trials", "100", "--seed", "5"});
    EXPECT_EQ(oracle.code, 0) << oracle.out;
    EXPECT_NE(oracle.out.find("PASS"), std::string::npos);
}

TEST(cli, exit_codes) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"enumerate"}).code, 2);
    EXPECT_EQ(run({"enumerate", "--n", "2", "--bogus"}).code, 2);
    EXPECT_EQ(run({"oracle-compare", "--n", "11"}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);

    Outcome anti = run({"prepare", "--axioms", "+ZI,+XI"});
    EXPECT_EQ(anti.code, 1);
    EXPECT_NE(anti.err.find("not co-measurable"), std::string::npos);
    EXPECT_EQ(run({"check", "--axioms", "+ZZ,+XX", "--prop", "XXX"}).code, 1);
    EXPECT_EQ(run({"check", "--axioms", "missing/file.axioms", "--prop", "X"}).code, 1);
    EXPECT_EQ(run({"q1-demo", "--config", "y1,y1"}).code, 1);
    EXPECT_EQ(run({"decay-study", "--noise", "0.3"}).code, 1);
    EXPECT_EQ(run({"sample", "--state", "+Z", "--obs", "Z", "--noise", "0.7"}).code, 1);
    EXPECT_EQ(run({"sample", "--state", "+Z", "--obs", "Z", "--bias", "1:x"}).code, 1);
}
