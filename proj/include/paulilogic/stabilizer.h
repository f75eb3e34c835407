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

#ifndef PAULILOGIC_STABILIZER_H
#define PAULILOGIC_STABILIZER_H

#include <functional>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "paulilogic/blackbox.h"
#include "paulilogic/gf2.h"
#include "paulilogic/pauli.h"

namespace paulilogic {

struct MeasurementResult;

/// A pure N-qubit stabilizer state.
///
/// Holds N commuting, independent signed generators plus N destabilizers
/// with <d_p, g_q> = delta_pq and mutually commuting destabilizers. The
/// destabilizers are what make a measurement O(N^2): they give the generator
/// decomposition of any commuting observable directly.
class StabilizerTableau {
   public:
    /// Builds the joint eigenstate of `generators` (eigenvalue = each sign).
    ///
    /// Throws std::invalid_argument if the count is not N, if two generators
    /// anticommute ("axioms not co-measurable"), or if the Pauli patterns are
    /// linearly dependent ("axioms not independent").
    static StabilizerTableau prepare(const std::vector<SignedObservable> &generators);

    /// |0...0>, stabilized by +Z on every qubit.
    static StabilizerTableau all_zero(size_t num_qubits);

    /// Reads one signed Pauli per line ("+ZZI"); '#' starts a comment.
    static StabilizerTableau parse(std::istream &in);

    size_t num_qubits() const {
        return generators_.size();
    }
    const std::vector<SignedObservable> &generators() const {
        return generators_;
    }
    const std::vector<PauliOperator> &destabilizers() const {
        return destabilizers_;
    }
    /// Generator Pauli patterns as the rows of an N x 2N matrix.
    BitMatrix generator_matrix() const;

    /// The generator decomposition k of an observable commuting with every
    /// generator: k_p = <obs, d_p>.
    BitVector decompose(const SignedObservable &obs) const;

    /// Checks every structural invariant; returns an empty string when all
    /// hold, otherwise a description of the first failure.
    std::string validate() const;

    /// One generator per line in signed Pauli notation.
    std::string str() const;

    bool operator==(const StabilizerTableau &other) const = default;

   private:
    friend StabilizerTableau apply_blackbox(const StabilizerTableau &t, const BlackBoxConfig &cfg);
    friend MeasurementResult measure(
        const StabilizerTableau &t, const SignedObservable &obs, const std::function<bool()> &coin);

    std::vector<SignedObservable> generators_;
    std::vector<PauliOperator> destabilizers_;
};

enum class MeasurementKind { Deterministic, Random };

struct MeasurementResult {
    int outcome = +1;  // +1 or -1
    MeasurementKind kind = MeasurementKind::Deterministic;
    StabilizerTableau post_state;

    bool deterministic() const {
        return kind == MeasurementKind::Deterministic;
    }
};

/// A sign vector (one +1/-1 entry per measured observable).
using OutcomeKey = std::vector<int>;

/// Exact outcome probabilities for a list of commuting observables. Only
/// outcomes with nonzero probability are stored.
struct OutcomeDistribution {
    size_t num_observables = 0;
    std::map<OutcomeKey, double> probabilities;

    double probability(const OutcomeKey &outcome) const;
    double total() const;
    /// All 2^k sign vectors, first observable most significant, +1 before -1.
    std::vector<OutcomeKey> all_outcomes() const;
    /// Largest absolute difference over the union of supports.
    double max_deviation(const OutcomeDistribution &other) const;
};

/// Outcome bit string: '0' for +1, '1' for -1 (the truth-parity convention).
std::string outcome_label(const OutcomeKey &outcome);

/// Conjugates every generator (and destabilizer) by the black box.
/// Throws std::invalid_argument on a size mismatch.
StabilizerTableau apply_blackbox(const StabilizerTableau &t, const BlackBoxConfig &cfg);

/// Measures `obs`. When the outcome is forced by the state, `coin` is never
/// called. Otherwise coin() decides the result (true means -1) and the state
/// collapses onto the matching eigenspace.
MeasurementResult measure(const StabilizerTableau &t, const SignedObservable &obs, const std::function<bool()> &coin);

/// Convenience overload for raw operators; throws std::invalid_argument if
/// the operator is not Hermitian.
MeasurementResult measure(const StabilizerTableau &t, const PauliOperator &obs, const std::function<bool()> &coin);

/// The forced outcome of `obs`, or nothing when the outcome is random.
std::optional<int> forced_outcome(const StabilizerTableau &t, const SignedObservable &obs);

/// Exact joint distribution of sequential measurements of commuting
/// observables. Throws std::invalid_argument("... not co-measurable") when two
/// observables anticommute.
OutcomeDistribution joint_distribution(const StabilizerTableau &t, const std::vector<SignedObservable> &observables);

std::ostream &operator<<(std::ostream &out, const StabilizerTableau &t);

}  // namespace paulilogic

#endif
