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

#include "paulilogic/blackbox.h"

#include <sstream>
#include <stdexcept>

#include "gtest/gtest.h"
#include "paulilogic/gf2.h"
#include "paulilogic/pauli.h"

using namespace paulilogic;

namespace {

BitVector vector_from_code(size_t len, uint64_t code) {
    BitVector v(len);
    for (size_t b = 0; b < len; b++) {
        v.set(b, (code >> b) & 1);
    }
    return v;
}

}  // namespace

TEST(boolean_function, labels) {
    for (int k = 0; k < 4; k++) {
        BooleanFunction f = BooleanFunction::from_label(k);
        EXPECT_EQ(f.label(), k);
        EXPECT_EQ(f.label(), 2 * int(f(false)) + int(f(true)));
    }
    EXPECT_EQ(BooleanFunction::from_label(1), (BooleanFunction{false, true}));
    EXPECT_THROW(BooleanFunction::from_label(4), std::invalid_argument);
}

TEST(blackbox_config, parse) {
    std::istringstream in("# two boxes\n0 1\n\ny3  # constant one\n");
    BlackBoxConfig cfg = BlackBoxConfig::parse(in);
    ASSERT_EQ(cfg.size(), 2u);
    EXPECT_EQ(cfg[0], (BooleanFunction{false, true}));
    EXPECT_EQ(cfg[1], (BooleanFunction{true, true}));
    EXPECT_EQ(cfg.str(), "y1,y3");
    EXPECT_EQ(BlackBoxConfig::parse_inline("y2,y2"), BlackBoxConfig::uniform(2, BooleanFunction{true, false}));
    EXPECT_EQ(BlackBoxConfig::parse_inline("1 0;0 0").str(), "y2,y0");
    EXPECT_THROW(BlackBoxConfig::parse_inline("y7"), std::invalid_argument);
    EXPECT_THROW(BlackBoxConfig::parse_inline("1 0 1"), std::invalid_argument);
    EXPECT_THROW(BlackBoxConfig::parse_inline(""), std::invalid_argument);
}

TEST(blackbox_config, from_index_covers_all) {
    EXPECT_EQ(BlackBoxConfig::from_index(3, 0), BlackBoxConfig::identity(3));
    EXPECT_EQ(BlackBoxConfig::from_index(2, 6).str(), "y1,y2");
    EXPECT_THROW(BlackBoxConfig::from_index(1, 4), std::invalid_argument);
}

TEST(proposition_truth, examples) {
    // "f(0) = 0" with f = y1.
    EXPECT_FALSE(proposition_truth(BitVector{0, 1}, BlackBoxConfig({BooleanFunction{false, true}})));
    // "f(0) = f(1)" for a constant function.
    EXPECT_FALSE(proposition_truth(BitVector{1, 1}, BlackBoxConfig({BooleanFunction{false, false}})));
    // "f_1(1) + f_2(1) + f_3(1) = 0" with f_1(1) = 1, f_2(1) = f_3(1) = 0.
    BlackBoxConfig l_cfg({BooleanFunction{false, true}, BooleanFunction{true, false}, BooleanFunction{false, false}});
    EXPECT_TRUE(proposition_truth(BitVector{1, 1, 1, 0, 0, 0}, l_cfg));
    EXPECT_THROW(proposition_truth(BitVector{1, 1, 1, 0}, l_cfg), std::invalid_argument);
}

TEST(proposition_truth, direct_parity_formula) {
    for (size_t n = 1; n <= 3; n++) {
        for (size_t index = 0; index < (size_t{1} << (2 * n)); index++) {
            BlackBoxConfig cfg = BlackBoxConfig::from_index(n, index);
            for (uint64_t code = 0; code < (uint64_t{1} << (2 * n)); code++) {
                BitVector j = vector_from_code(2 * n, code);
                bool expected = false;
                for (size_t q = 0; q < n; q++) {
                    expected ^= (j[n + q] && cfg[q].f0) != (j[q] && cfg[q].f1);
                }
                ASSERT_EQ(proposition_truth(j, cfg), expected);
            }
        }
    }
}

TEST(proposition_truth, linear_exhaustive) {
    for (size_t n = 1; n <= 2; n++) {
        size_t count = size_t{1} << (2 * n);
        for (size_t index = 0; index < count; index++) {
            BlackBoxConfig cfg = BlackBoxConfig::from_index(n, index);
            for (uint64_t a = 0; a < count; a++) {
                for (uint64_t b = 0; b < count; b++) {
                    BitVector ja = vector_from_code(2 * n, a);
                    BitVector jb = vector_from_code(2 * n, b);
                    ASSERT_EQ(proposition_truth(ja ^ jb, cfg), proposition_truth(ja, cfg) != proposition_truth(jb, cfg));
                }
            }
        }
    }
}

TEST(proposition_truth, matches_observable_sign_flip) {
    for (size_t index = 0; index < 64; index++) {
        BlackBoxConfig cfg = BlackBoxConfig::from_index(3, index);
        for (uint64_t code = 0; code < 64; code++) {
            BitVector j = vector_from_code(6, code);
            SignedObservable theta = from_proposition(j);
            ASSERT_EQ(conjugate_by_blackbox(theta, cfg).negative(), proposition_truth(j, cfg));
        }
    }
}

TEST(axiom_truths, examples) {
    std::vector<BitVector> ghz_axioms = {
        BitVector{1, 1, 1, 1, 1, 0},
        BitVector{1, 1, 1, 1, 0, 1},
        BitVector{1, 1, 1, 0, 1, 1},
    };
    EXPECT_EQ(axiom_truths(ghz_axioms, BlackBoxConfig::identity(3)), (std::vector<bool>{false, false, false}));
    EXPECT_EQ(axiom_truths({BitVector{0, 1}}, BlackBoxConfig({BooleanFunction{true, false}})), (std::vector<bool>{true}));
    EXPECT_EQ(
        axiom_truths(ghz_axioms, BlackBoxConfig::uniform(3, BooleanFunction{false, true})),
        (std::vector<bool>{true, true, true}));
    EXPECT_THROW(axiom_truths({BitVector{0, 1, 1}}, BlackBoxConfig::identity(1)), std::invalid_argument);
}
