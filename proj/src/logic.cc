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

#include <sstream>
#include <stdexcept>

namespace paulilogic {

namespace {

std::string tuple_str(const BitVector &v) {
    std::string s = "(";
    for (size_t k = 0; k < v.size(); k++) {
        if (k) {
            s += ',';
        }
        s += v[k] ? '1' : '0';
    }
    return s + ")";
}

bool same_state(const StabilizerTableau &a, const StabilizerTableau &b) {
    if (a.num_qubits() != b.num_qubits()) {
        return false;
    }
    for (const auto &g : a.generators()) {
        auto forced = forced_outcome(b, g.unsigned_base());
        if (!forced.has_value() || *forced != g.sign()) {
            return false;
        }
    }
    return true;
}

// sum_p k_p t_p.
bool selected_parity(const BitVector &coefficients, const AxiomSet &axioms) {
    bool parity = false;
    for (size_t p = 0; p < axioms.num_qubits(); p++) {
        parity ^= coefficients[p] && axioms.parities()[p];
    }
    return parity;
}

}  // namespace

Proposition::Proposition(BitVector vector) : vector_(std::move(vector)) {
    if (vector_.size() % 2 != 0 || vector_.size() == 0) {
        throw std::invalid_argument("Proposition vectors must have positive even length 2N");
    }
}

Proposition Proposition::from_pauli(std::string_view text) {
    return Proposition(SignedObservable::parse(text).xz());
}

std::string Proposition::str() const {
    return observable().str().substr(1);
}

AxiomSet::AxiomSet(std::vector<BitVector> vectors, std::vector<bool> parities)
    : vectors_(std::move(vectors)), parities_(std::move(parities)) {
    size_t n = vectors_.size();
    if (n == 0) {
        throw std::invalid_argument("An axiom set needs at least one axiom");
    }
    if (parities_.size() != n) {
        throw std::invalid_argument("Axiom set needs one parity per axiom vector");
    }
    for (const auto &v : vectors_) {
        if (v.size() != 2 * n) {
            throw std::invalid_argument(
                "Expected " + std::to_string(n) + " axiom vectors of length " + std::to_string(2 * n));
        }
    }
    for (size_t p = 0; p < n; p++) {
        for (size_t q = p + 1; q < n; q++) {
            if (symplectic_product(vectors_[p], vectors_[q])) {
                throw std::invalid_argument("axioms not co-measurable");
            }
        }
    }
    if (rank(matrix()) != n) {
        throw std::invalid_argument("axioms not independent");
    }
}

AxiomSet AxiomSet::from_observables(const std::vector<SignedObservable> &generators) {
    std::vector<BitVector> vectors;
    std::vector<bool> parities;
    for (const auto &g : generators) {
        vectors.push_back(g.xz());
        parities.push_back(g.negative());
    }
    return AxiomSet(std::move(vectors), std::move(parities));
}

AxiomSet AxiomSet::z_basis(size_t n) {
    std::vector<BitVector> vectors;
    for (size_t j = 0; j < n; j++) {
        vectors.push_back(BitVector::unit(2 * n, n + j));
    }
    return AxiomSet(std::move(vectors), std::vector<bool>(n, false));
}

BitMatrix AxiomSet::matrix() const {
    return BitMatrix::with_cols(vectors_, 2 * vectors_.size());
}

std::vector<SignedObservable> AxiomSet::observables() const {
    std::vector<SignedObservable> result;
    for (size_t p = 0; p < vectors_.size(); p++) {
        result.push_back(from_proposition(vectors_[p]).with_sign_flipped(parities_[p]));
    }
    return result;
}

std::string DependenceReport::str() const {
    if (!dependent) {
        return "independent";
    }
    std::string s = "dependent, k=" + tuple_str(*coefficients);
    if (classical_truth.has_value()) {
        s += ", classical=" + std::to_string(int(*classical_truth));
    }
    if (quantum_truth.has_value()) {
        s += ", quantum=" + std::to_string(int(*quantum_truth));
    }
    return s;
}

DependenceReport classify(const Proposition &j, const AxiomSet &axioms) {
    if (j.num_qubits() != axioms.num_qubits()) {
        throw std::invalid_argument(
            "Proposition on " + std::to_string(j.num_qubits()) + " qubits does not match " +
            std::to_string(axioms.num_qubits()) + " axioms");
    }
    DependenceReport r;
    r.coefficients = in_span(j.vector(), axioms.matrix());
    r.dependent = r.coefficients.has_value();
    if (r.dependent) {
        PauliOperator product(axioms.num_qubits());
        for (size_t p = 0; p < axioms.num_qubits(); p++) {
            if ((*r.coefficients)[p]) {
                product = multiply(product, from_proposition(axioms.vectors()[p]).to_operator());
            }
        }
        r.operator_phase_flip = product.phase != j.observable().to_operator().phase;
    }
    return r;
}

DependenceReport full_report(const Proposition &j, const AxiomSet &axioms, const StabilizerTableau &state) {
    DependenceReport r = classify(j, axioms);
    if (r.dependent) {
        r.classical_truth = selected_parity(*r.coefficients, axioms);
        r.quantum_truth = quantum_truth(j, state);
    }
    return r;
}

std::optional<bool> classical_truth(const Proposition &j, const AxiomSet &axioms) {
    DependenceReport r = classify(j, axioms);
    if (!r.dependent) {
        return std::nullopt;
    }
    return selected_parity(*r.coefficients, axioms);
}

std::optional<bool> quantum_truth(const Proposition &j, const StabilizerTableau &state) {
    auto forced = forced_outcome(state, j.observable());
    if (!forced.has_value()) {
        return std::nullopt;
    }
    return *forced < 0;
}

EnumerationCounts enumerate(size_t n, const AxiomSet &axioms, size_t cap) {
    if (n > cap) {
        throw std::invalid_argument(
            "enumerate: N = " + std::to_string(n) + " exceeds the cap of " + std::to_string(cap));
    }
    if (n != axioms.num_qubits()) {
        throw std::invalid_argument("enumerate: N does not match the axiom set");
    }
    BitMatrix basis = axioms.matrix();
    EnumerationCounts counts;
    uint64_t total = uint64_t{1} << (2 * n);
    for (uint64_t code = 0; code < total; code++) {
        BitVector j(2 * n);
        for (size_t b = 0; b < 2 * n; b++) {
            j.set(b, (code >> b) & 1);
        }
        if (in_span(j, basis).has_value()) {
            counts.dependent++;
        } else {
            counts.independent++;
        }
    }
    return counts;
}

std::vector<SignedObservable> ghz_generators() {
    return {
        SignedObservable::parse("+ZZI"),
        SignedObservable::parse("+IZZ"),
        SignedObservable::parse("+XXX"),
    };
}

GhzReport ghz_report(const BlackBoxConfig &cfg) {
    if (cfg.size() != 3) {
        throw std::invalid_argument("ghz_report needs exactly 3 black box functions");
    }
    StabilizerTableau state = apply_blackbox(StabilizerTableau::prepare(ghz_generators()), cfg);

    std::vector<SignedObservable> axiom_obs = {
        SignedObservable::parse("YYX"),
        SignedObservable::parse("YXY"),
        SignedObservable::parse("XYY"),
    };
    std::vector<BitVector> vectors;
    std::vector<bool> parities;
    for (const auto &obs : axiom_obs) {
        auto forced = forced_outcome(state, obs);
        if (!forced.has_value()) {
            throw std::logic_error("GHZ axiom " + obs.str() + " is not fixed by the state");
        }
        vectors.push_back(obs.xz());
        parities.push_back(*forced < 0);
    }
    AxiomSet axioms(vectors, parities);
    Proposition l = Proposition::from_pauli("XXX");
    DependenceReport report = full_report(l, axioms, state);
    bool matches = same_state(axioms.prepare_state(), state);
    return GhzReport{
        cfg,
        axiom_obs,
        parities,
        axioms,
        state,
        matches,
        l,
        report,
        proposition_truth(l.vector(), cfg),
    };
}

std::string GhzReport::str() const {
    std::ostringstream out;
    out << "config: " << config.str() << "\n";
    for (size_t p = 0; p < axiom_observables.size(); p++) {
        out << "axiom K" << (p + 1) << ": " << axiom_observables[p].str().substr(1) << " parity=" << axiom_parities[p]
            << "\n";
    }
    out << "state:";
    for (const auto &g : state.generators()) {
        out << ' ' << g.str();
    }
    out << "\n";
    out << "state_matches_axioms: " << (state_matches_axioms ? "yes" : "no") << "\n";
    out << "proposition L: " << proposition.str() << "\n";
    out << "coefficients: " << tuple_str(*report.coefficients) << "\n";
    out << "phase_flip: " << *report.operator_phase_flip << "\n";
    out << "classical_truth: " << classical() << "\n";
    out << "quantum_truth: " << quantum() << "\n";
    out << "blackbox_truth: " << blackbox_truth << "\n";
    out << "contradiction: " << ((classical() != quantum()) ? "yes" : "no") << "\n";
    return out.str();
}

}  // namespace paulilogic
