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

#include "paulilogic/stabilizer.h"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace paulilogic {

namespace {

// (z | x) for an (x | z) pattern, so that dot(swap(a), b) = <a, b>.
BitVector swapped_halves(const SignedObservable &g) {
    return BitVector::concat(g.z(), g.x());
}

bool anticommutes_with(const PauliOperator &p, const SignedObservable &obs) {
    return p.x.dot(obs.z()) != p.z.dot(obs.x());
}

// Solves <d_p, g_q> = delta_pq, then fixes the destabilizers to commute with
// each other by adding generators (which does not disturb the pairing).
std::vector<PauliOperator> synthesize_destabilizers(const std::vector<SignedObservable> &generators) {
    size_t n = generators.size();
    std::vector<BitVector> rows;
    rows.reserve(n);
    for (const auto &g : generators) {
        rows.push_back(swapped_halves(g));
    }
    BitMatrix system_transposed = BitMatrix(std::move(rows)).transposed();

    std::vector<PauliOperator> destabilizers;
    destabilizers.reserve(n);
    for (size_t p = 0; p < n; p++) {
        auto d = in_span(BitVector::unit(n, p), system_transposed);
        if (!d.has_value()) {
            throw std::invalid_argument("axioms not independent");
        }
        destabilizers.push_back(SignedObservable(d->slice(0, n), d->slice(n, n)).to_operator());
    }
    for (size_t q = 0; q < n; q++) {
        for (size_t p = 0; p < q; p++) {
            if (!commutes(destabilizers[p], destabilizers[q])) {
                PauliOperator fixed = multiply(destabilizers[q], generators[p].to_operator());
                destabilizers[q] = SignedObservable(fixed.x, fixed.z).to_operator();
            }
        }
    }
    return destabilizers;
}

void collect_distribution(
    const StabilizerTableau &state,
    const std::vector<SignedObservable> &observables,
    size_t index,
    OutcomeKey &prefix,
    double weight,
    OutcomeDistribution &out) {
    if (index == observables.size()) {
        out.probabilities[prefix] += weight;
        return;
    }
    bool random = false;
    MeasurementResult plus = measure(state, observables[index], [&]() {
        random = true;
        return false;
    });
    double branch_weight = random ? weight / 2 : weight;
    prefix.push_back(plus.outcome);
    collect_distribution(plus.post_state, observables, index + 1, prefix, branch_weight, out);
    prefix.pop_back();
    if (random) {
        MeasurementResult minus = measure(state, observables[index], []() {
            return true;
        });
        prefix.push_back(minus.outcome);
        collect_distribution(minus.post_state, observables, index + 1, prefix, branch_weight, out);
        prefix.pop_back();
    }
}

}  // namespace

StabilizerTableau StabilizerTableau::prepare(const std::vector<SignedObservable> &generators) {
    if (generators.empty()) {
        throw std::invalid_argument("A stabilizer state needs at least one generator");
    }
    size_t n = generators.front().num_qubits();
    for (const auto &g : generators) {
        if (g.num_qubits() != n) {
            throw std::invalid_argument("Generators act on different numbers of qubits");
        }
    }
    if (generators.size() != n) {
        throw std::invalid_argument(
            "Expected " + std::to_string(n) + " generators for " + std::to_string(n) + " qubits, got " +
            std::to_string(generators.size()));
    }
    for (size_t p = 0; p < n; p++) {
        for (size_t q = p + 1; q < n; q++) {
            if (!commutes(generators[p], generators[q])) {
                throw std::invalid_argument(
                    "axioms not co-measurable: " + generators[p].str() + " anticommutes with " + generators[q].str());
            }
        }
    }
    StabilizerTableau t;
    t.generators_ = generators;
    if (rank(t.generator_matrix()) != n) {
        throw std::invalid_argument("axioms not independent");
    }
    t.destabilizers_ = synthesize_destabilizers(generators);
    return t;
}

StabilizerTableau StabilizerTableau::all_zero(size_t num_qubits) {
    std::vector<SignedObservable> gens;
    gens.reserve(num_qubits);
    for (size_t j = 0; j < num_qubits; j++) {
        gens.emplace_back(BitVector(num_qubits), BitVector::unit(num_qubits, j));
    }
    return prepare(gens);
}

StabilizerTableau StabilizerTableau::parse(std::istream &in) {
    std::vector<SignedObservable> gens;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.resize(hash);
        }
        std::istringstream ss(line);
        std::string token;
        while (ss >> token) {
            gens.push_back(SignedObservable::parse(token));
        }
    }
    return prepare(gens);
}

BitMatrix StabilizerTableau::generator_matrix() const {
    std::vector<BitVector> rows;
    rows.reserve(generators_.size());
    for (const auto &g : generators_) {
        rows.push_back(g.xz());
    }
    return BitMatrix::with_cols(std::move(rows), 2 * num_qubits());
}

BitVector StabilizerTableau::decompose(const SignedObservable &obs) const {
    if (obs.num_qubits() != num_qubits()) {
        throw std::invalid_argument("Observable size does not match the state");
    }
    BitVector k(num_qubits());
    for (size_t p = 0; p < num_qubits(); p++) {
        k.set(p, anticommutes_with(destabilizers_[p], obs));
    }
    return k;
}

std::string StabilizerTableau::validate() const {
    size_t n = num_qubits();
    if (destabilizers_.size() != n) {
        return "destabilizer count differs from generator count";
    }
    for (size_t p = 0; p < n; p++) {
        if (generators_[p].num_qubits() != n || destabilizers_[p].num_qubits() != n) {
            return "row " + std::to_string(p) + " has the wrong width";
        }
        for (size_t q = 0; q < n; q++) {
            if (!commutes(generators_[p], generators_[q])) {
                return "generators " + std::to_string(p) + " and " + std::to_string(q) + " anticommute";
            }
            if (!commutes(destabilizers_[p], destabilizers_[q])) {
                return "destabilizers " + std::to_string(p) + " and " + std::to_string(q) + " anticommute";
            }
            bool paired = anticommutes_with(destabilizers_[p], generators_[q]);
            if (paired != (p == q)) {
                return "destabilizer " + std::to_string(p) + " is mispaired with generator " + std::to_string(q);
            }
        }
    }
    if (rank(generator_matrix()) != n) {
        return "generators are not independent";
    }
    return "";
}

std::string StabilizerTableau::str() const {
    std::string result;
    for (const auto &g : generators_) {
        result += g.str();
        result += '\n';
    }
    return result;
}

double OutcomeDistribution::probability(const OutcomeKey &outcome) const {
    auto it = probabilities.find(outcome);
    return it == probabilities.end() ? 0.0 : it->second;
}

double OutcomeDistribution::total() const {
    double t = 0;
    for (const auto &[k, p] : probabilities) {
        t += p;
    }
    return t;
}

std::vector<OutcomeKey> OutcomeDistribution::all_outcomes() const {
    std::vector<OutcomeKey> result;
    size_t count = size_t{1} << num_observables;
    result.reserve(count);
    for (size_t code = 0; code < count; code++) {
        OutcomeKey key(num_observables);
        for (size_t i = 0; i < num_observables; i++) {
            key[i] = (code >> (num_observables - 1 - i)) & 1 ? -1 : +1;
        }
        result.push_back(std::move(key));
    }
    return result;
}

double OutcomeDistribution::max_deviation(const OutcomeDistribution &other) const {
    double worst = 0;
    for (const auto &[k, p] : probabilities) {
        worst = std::max(worst, std::abs(p - other.probability(k)));
    }
    for (const auto &[k, p] : other.probabilities) {
        worst = std::max(worst, std::abs(p - probability(k)));
    }
    return worst;
}

std::string outcome_label(const OutcomeKey &outcome) {
    std::string s;
    for (int v : outcome) {
        s += v < 0 ? '1' : '0';
    }
    return s;
}

StabilizerTableau apply_blackbox(const StabilizerTableau &t, const BlackBoxConfig &cfg) {
    if (cfg.size() != t.num_qubits()) {
        throw std::invalid_argument(
            "Black box has " + std::to_string(cfg.size()) + " functions but the state has " +
            std::to_string(t.num_qubits()) + " qubits");
    }
    BitVector weights = cfg.truth_weights();
    StabilizerTableau result = t;
    for (auto &g : result.generators_) {
        g = conjugate_by_blackbox(g, cfg);
    }
    for (auto &d : result.destabilizers_) {
        if (d.xz().dot(weights)) {
            d.phase = (d.phase + 2) & 3;
        }
    }
    return result;
}

MeasurementResult measure(const StabilizerTableau &t, const SignedObservable &obs, const std::function<bool()> &coin) {
    size_t n = t.num_qubits();
    if (obs.num_qubits() != n) {
        throw std::invalid_argument(
            "Observable " + obs.str() + " does not act on the " + std::to_string(n) + "-qubit state");
    }

    size_t pivot = n;
    for (size_t p = 0; p < n; p++) {
        if (!commutes(t.generators_[p], obs)) {
            pivot = p;
            break;
        }
    }

    if (pivot == n) {
        PauliOperator product(n);
        for (size_t p = 0; p < n; p++) {
            if (anticommutes_with(t.destabilizers_[p], obs)) {
                product = multiply(product, t.generators_[p].to_operator());
            }
        }
        PauliOperator target = obs.to_operator();
        // product equals obs up to a sign; the state is a +1 eigenvector of product.
        int outcome = product.phase == target.phase ? +1 : -1;
        return MeasurementResult{outcome, MeasurementKind::Deterministic, t};
    }

    bool flip = coin();
    MeasurementResult result{flip ? -1 : +1, MeasurementKind::Random, t};
    StabilizerTableau &post = result.post_state;
    PauliOperator pivot_op = t.generators_[pivot].to_operator();
    for (size_t p = 0; p < n; p++) {
        if (p != pivot && !commutes(post.generators_[p], obs)) {
            post.generators_[p] = SignedObservable::from_operator(multiply(post.generators_[p].to_operator(), pivot_op));
        }
        if (p != pivot && anticommutes_with(post.destabilizers_[p], obs)) {
            post.destabilizers_[p] = multiply(post.destabilizers_[p], pivot_op);
        }
    }
    post.destabilizers_[pivot] = pivot_op;
    post.generators_[pivot] = obs.with_sign_flipped(flip);
    return result;
}

MeasurementResult measure(const StabilizerTableau &t, const PauliOperator &obs, const std::function<bool()> &coin) {
    return measure(t, SignedObservable::from_operator(obs), coin);
}

std::optional<int> forced_outcome(const StabilizerTableau &t, const SignedObservable &obs) {
    bool random = false;
    MeasurementResult r = measure(t, obs, [&]() {
        random = true;
        return false;
    });
    if (random) {
        return std::nullopt;
    }
    return r.outcome;
}

OutcomeDistribution joint_distribution(const StabilizerTableau &t, const std::vector<SignedObservable> &observables) {
    for (size_t a = 0; a < observables.size(); a++) {
        for (size_t b = a + 1; b < observables.size(); b++) {
            if (!commutes(observables[a], observables[b])) {
                throw std::invalid_argument(
                    "observables not co-measurable: " + observables[a].str() + " anticommutes with " +
                    observables[b].str());
            }
        }
    }
    OutcomeDistribution out;
    out.num_observables = observables.size();
    OutcomeKey prefix;
    collect_distribution(t, observables, 0, prefix, 1.0, out);
    return out;
}

std::ostream &operator<<(std::ostream &out, const StabilizerTableau &t) {
    return out << t.str();
}

}  // namespace paulilogic
