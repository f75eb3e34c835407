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

#ifndef PAULILOGIC_LOGIC_H
#define PAULILOGIC_LOGIC_H

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "paulilogic/blackbox.h"
#include "paulilogic/gf2.h"
#include "paulilogic/pauli.h"
#include "paulilogic/stabilizer.h"

namespace paulilogic {

/// A parity statement "sum_j [beta_j f_j(0) + alpha_j f_j(1)] = 0" stored as
/// J = (alpha_1..alpha_N | beta_1..beta_N).
class Proposition {
   public:
    explicit Proposition(BitVector vector);
    /// From a Pauli pattern such as "XXX"; any sign is ignored.
    static Proposition from_pauli(std::string_view text);

    size_t num_qubits() const {
        return vector_.size() / 2;
    }
    const BitVector &vector() const {
        return vector_;
    }
    /// The measurement that tests this proposition (sign +1).
    SignedObservable observable() const {
        return from_proposition(vector_);
    }

    std::string str() const;

   private:
    BitVector vector_;
};

/// N independent, pairwise symplectically orthogonal axiom vectors H_p and
/// their truth parities t_p. Axiom p reads "H_p . f = t_p".
class AxiomSet {
   public:
    /// Throws std::invalid_argument when the vectors are not N of length 2N,
    /// are not co-measurable, or are not independent.
    AxiomSet(std::vector<BitVector> vectors, std::vector<bool> parities);

    /// Axiom p is the Pauli pattern of generator p; its parity is 1 exactly
    /// when the generator's sign is -1.
    static AxiomSet from_observables(const std::vector<SignedObservable> &generators);
    static AxiomSet from_state(const StabilizerTableau &state) {
        return from_observables(state.generators());
    }
    /// {f_j(0) = 0} for every j, i.e. the sigma_z axioms.
    static AxiomSet z_basis(size_t n);

    size_t num_qubits() const {
        return vectors_.size();
    }
    const std::vector<BitVector> &vectors() const {
        return vectors_;
    }
    const std::vector<bool> &parities() const {
        return parities_;
    }
    BitMatrix matrix() const;
    /// Generators with sign (-1)^{t_p}.
    std::vector<SignedObservable> observables() const;
    /// The stabilizer state whose generator measurements read out the parities.
    StabilizerTableau prepare_state() const {
        return StabilizerTableau::prepare(observables());
    }

   private:
    std::vector<BitVector> vectors_;
    std::vector<bool> parities_;
};

/// Result of testing a proposition against an axiom set.
///
/// `operator_phase_flip` is the c bit: the product of the unsigned axiom
/// observables selected by k equals (-1)^c times the proposition's
/// observable. When c = 1 the quantum truth value is the negation of the
/// classically derived one.
struct DependenceReport {
    bool dependent = false;
    std::optional<BitVector> coefficients;
    std::optional<bool> operator_phase_flip;
    std::optional<bool> classical_truth;
    std::optional<bool> quantum_truth;

    std::string str() const;
};

/// Dependence test: J lies in the span of the axiom vectors. Truths are left
/// empty. Throws std::invalid_argument on a length mismatch.
DependenceReport classify(const Proposition &j, const AxiomSet &axioms);

/// classify plus both truth values, the quantum one read from `state`.
DependenceReport full_report(const Proposition &j, const AxiomSet &axioms, const StabilizerTableau &state);

/// sum_p k_p t_p when J is dependent, otherwise nothing.
std::optional<bool> classical_truth(const Proposition &j, const AxiomSet &axioms);

/// b when measuring J's observable on `state` is forced to (-1)^b, otherwise
/// nothing.
std::optional<bool> quantum_truth(const Proposition &j, const StabilizerTableau &state);

struct EnumerationCounts {
    uint64_t dependent = 0;
    uint64_t independent = 0;
};

constexpr size_t kEnumerationCap = 8;

/// Classifies all 4^N proposition vectors. Throws std::invalid_argument above
/// `cap` qubits.
EnumerationCounts enumerate(size_t n, const AxiomSet &axioms, size_t cap = kEnumerationCap);

struct GhzReport {
    BlackBoxConfig config;
    std::vector<SignedObservable> axiom_observables;  // YYX, YXY, XYY
    std::vector<bool> axiom_parities;                 // read out of the state
    AxiomSet axioms;
    StabilizerTableau state;  // GHZ after the black box
    bool state_matches_axioms = false;  // prepare(axioms) is the same state
    Proposition proposition;            // L, the XXX parity vector
    DependenceReport report;
    bool blackbox_truth = false;  // L evaluated on the actual functions

    bool classical() const {
        return *report.classical_truth;
    }
    bool quantum() const {
        return *report.quantum_truth;
    }
    std::string str() const;
};

/// The three-qubit argument: GHZ (+ZZI, +IZZ, +XXX) through the black box,
/// axioms read off the YYX, YXY, XYY measurements, then L = XXX derived
/// classically and measured. Throws std::invalid_argument unless N = 3.
GhzReport ghz_report(const BlackBoxConfig &cfg);

/// The GHZ state of three qubits as its canonical generators.
std::vector<SignedObservable> ghz_generators();

}  // namespace paulilogic

#endif
