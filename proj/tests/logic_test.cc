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

#include "paulilogic/logic.h"

#include <stdexcept>

#include "gtest/gtest.h"
#include "paulilogic/oracle.h"
#include "paulilogic/random_states.h"
#include "paulilogic/rng.h"

using namespace paulilogic;

namespace {

AxiomSet axioms_of(std::initializer_list<const char *> texts) {
    std::vector<SignedObservable> gens;
    for (const char *t : texts) {
        gens.push_back(SignedObservable::parse(t));
    }
    return AxiomSet::from_observables(gens);
}

}  // namespace

TEST(proposition, construction) {
    EXPECT_EQ(Proposition::from_pauli("XXX").vector(), (BitVector{1, 1, 1, 0, 0, 0}));
    EXPECT_EQ(Proposition::from_pauli("-YZ").vector(), (BitVector{1, 0, 1, 1}));
    EXPECT_EQ(Proposition::from_pauli("XYZ").observable().str(), "+XYZ");
    EXPECT_THROW(Proposition(BitVector(3)), std::invalid_argument);
    EXPECT_THROW(Proposition(BitVector(0)), std::invalid_argument);
}

TEST(axiom_set, validation) {
    EXPECT_THROW(AxiomSet({BitVector{0, 1}, BitVector{1, 0}}, {false, false}), std::invalid_argument);
    EXPECT_THROW(AxiomSet({BitVector{0, 1}}, {false, false}), std::invalid_argument);
    EXPECT_THROW(AxiomSet({BitVector{1, 1, 0, 0}, BitVector{1, 1, 0, 0}}, {false, false}), std::invalid_argument);
    EXPECT_THROW(AxiomSet({BitVector{1, 0, 0, 0}, BitVector{0, 0, 1, 0}}, {false, false}), std::invalid_argument);
    AxiomSet z = AxiomSet::z_basis(2);
    EXPECT_EQ(z.observables()[0].str(), "+ZI");
    EXPECT_EQ(z.observables()[1].str(), "+IZ");
    AxiomSet neg = axioms_of({"-ZZ", "+XX"});
    EXPECT_EQ(neg.parities(), (std::vector<bool>{true, false}));
    EXPECT_EQ(neg.observables()[0].str(), "-ZZ");
}

TEST(classify, examples) {
    // sigma_z axiom, sigma_z proposition: dependent.
    DependenceReport a = classify(Proposition(BitVector{0, 1}), AxiomSet::z_basis(1));
    EXPECT_TRUE(a.dependent);
    EXPECT_EQ(*a.coefficients, (BitVector{1}));
    // sigma_x proposition: independent.
    DependenceReport b = classify(Proposition(BitVector{1, 0}), AxiomSet::z_basis(1));
    EXPECT_FALSE(b.dependent);
    EXPECT_FALSE(b.coefficients.has_value());
    EXPECT_EQ(b.str(), "independent");

    AxiomSet ghz_k = axioms_of({"-YYX", "-YXY", "-XYY"});
    DependenceReport l = classify(Proposition::from_pauli("XXX"), ghz_k);
    EXPECT_TRUE(l.dependent);
    EXPECT_EQ(*l.coefficients, (BitVector{1, 1, 1}));
    EXPECT_EQ(l.operator_phase_flip, true);

    EXPECT_THROW(classify(Proposition::from_pauli("XX"), ghz_k), std::invalid_argument);
}

TEST(classify, truth_values) {
    AxiomSet ghz_k = axioms_of({"-YYX", "-YXY", "-XYY"});
    StabilizerTableau ghz = StabilizerTableau::prepare(ghz_generators());
    DependenceReport l = full_report(Proposition::from_pauli("XXX"), ghz_k, ghz);
    EXPECT_EQ(l.classical_truth, true);
    EXPECT_EQ(l.quantum_truth, false);
    EXPECT_EQ(l.str(), "dependent, k=(1,1,1), classical=1, quantum=0");

    AxiomSet bell = axioms_of({"+ZZ", "+XX"});
    DependenceReport yy = full_report(Proposition::from_pauli("YY"), bell, bell.prepare_state());
    EXPECT_TRUE(yy.dependent);
    EXPECT_EQ(yy.classical_truth, false);
    EXPECT_EQ(yy.quantum_truth, true);
    EXPECT_EQ(yy.operator_phase_flip, true);

    DependenceReport zi = full_report(Proposition::from_pauli("ZI"), bell, bell.prepare_state());
    EXPECT_FALSE(zi.dependent);
    EXPECT_FALSE(zi.classical_truth.has_value());
    EXPECT_FALSE(zi.quantum_truth.has_value());

    EXPECT_EQ(classical_truth(Proposition::from_pauli("ZZ"), axioms_of({"-ZZ", "+XX"})), true);
    EXPECT_EQ(quantum_truth(Proposition::from_pauli("XI"), bell.prepare_state()), std::nullopt);
}

TEST(classify, quantum_is_classical_xor_phase_flip) {
    SplitMix64 rng(23);
    for (size_t n = 1; n <= 4; n++) {
        for (size_t trial = 0; trial < 20; trial++) {
            StabilizerTableau state = random_stabilizer_state(n, rng);
            AxiomSet axioms = AxiomSet::from_state(state);
            for (size_t probe = 0; probe < 40; probe++) {
                Proposition j(random_observable(n, rng).xz());
                DependenceReport r = full_report(j, axioms, state);
                ASSERT_EQ(r.dependent, r.quantum_truth.has_value());
                ASSERT_EQ(r.dependent, r.classical_truth.has_value());
                if (r.dependent) {
                    ASSERT_EQ(*r.quantum_truth, *r.classical_truth != *r.operator_phase_flip);
                    ASSERT_EQ(axioms.matrix().combine_rows(*r.coefficients), j.vector());
                }
            }
        }
    }
}

TEST(classify, quantum_truth_matches_dense_expectation) {
    SplitMix64 rng(29);
    for (size_t n = 1; n <= 3; n++) {
        for (size_t trial = 0; trial < 10; trial++) {
            StabilizerTableau state = random_stabilizer_state(n, rng);
            oracle::DenseState psi = oracle::state_from_axioms(state.generators());
            for (uint64_t code = 0; code < (uint64_t{1} << (2 * n)); code++) {
                BitVector v(2 * n);
                for (size_t b = 0; b < 2 * n; b++) {
                    v.set(b, (code >> b) & 1);
                }
                Proposition j(v);
                double e = oracle::expectation(psi, j.observable());
                auto q = quantum_truth(j, state);
                if (q.has_value()) {
                    ASSERT_NEAR(e, *q ? -1.0 : 1.0, 1e-9);
                } else {
                    ASSERT_NEAR(e, 0.0, 1e-9);
                }
            }
        }
    }
}

TEST(enumerate, counts) {
    for (size_t n = 1; n <= 6; n++) {
        EnumerationCounts c = enumerate(n, AxiomSet::z_basis(n));
        EXPECT_EQ(c.dependent, uint64_t{1} << n);
        EXPECT_EQ(c.independent, (uint64_t{1} << (2 * n)) - (uint64_t{1} << n));
    }
    EnumerationCounts two = enumerate(2, axioms_of({"+ZZ", "+XX"}));
    EXPECT_EQ(two.dependent, 4u);
    EXPECT_EQ(two.independent, 12u);
    EXPECT_THROW(enumerate(9, AxiomSet::z_basis(9)), std::invalid_argument);
    EXPECT_THROW(enumerate(2, AxiomSet::z_basis(3)), std::invalid_argument);
}

TEST(ghz, identity_box) {
    GhzReport r = ghz_report(BlackBoxConfig::identity(3));
    EXPECT_EQ(r.axiom_parities, (std::vector<bool>{true, true, true}));
    EXPECT_TRUE(r.report.dependent);
    EXPECT_EQ(*r.report.coefficients, (BitVector{1, 1, 1}));
    EXPECT_TRUE(r.classical());
    EXPECT_FALSE(r.quantum());
    EXPECT_FALSE(r.blackbox_truth);
    EXPECT_TRUE(r.state_matches_axioms);
    EXPECT_THROW(ghz_report(BlackBoxConfig::identity(2)), std::invalid_argument);
}

TEST(ghz, every_config_contradicts) {
    for (size_t index = 0; index < 64; index++) {
        BlackBoxConfig cfg = BlackBoxConfig::from_index(3, index);
        GhzReport r = ghz_report(cfg);
        ASSERT_TRUE(r.report.dependent);
        EXPECT_EQ(*r.report.coefficients, (BitVector{1, 1, 1})) << cfg.str();
        EXPECT_NE(r.classical(), r.quantum()) << cfg.str();
        EXPECT_EQ(r.quantum(), r.blackbox_truth) << cfg.str();
        EXPECT_TRUE(r.state_matches_axioms) << cfg.str();

        // Dense cross-check of the four expectation values.
        oracle::DenseState psi = oracle::evolve(
            oracle::state_from_axioms(ghz_generators()), oracle::blackbox_matrix(cfg));
        for (size_t p = 0; p < 3; p++) {
            double e = oracle::expectation(psi, r.axiom_observables[p]);
            EXPECT_NEAR(e, r.axiom_parities[p] ? -1.0 : 1.0, 1e-9);
        }
        double l = oracle::expectation(psi, SignedObservable::parse("+XXX"));
        EXPECT_NEAR(l, r.quantum() ? -1.0 : 1.0, 1e-9);
    }
}
