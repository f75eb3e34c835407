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

#include "paulilogic/random_states.h"

namespace paulilogic {

SignedObservable random_observable(size_t num_qubits, SplitMix64 &rng) {
    BitVector x(num_qubits);
    BitVector z(num_qubits);
    for (size_t j = 0; j < num_qubits; j++) {
        x.set(j, rng.coin());
        z.set(j, rng.coin());
    }
    return SignedObservable(std::move(x), std::move(z), rng.coin());
}

StabilizerTableau random_stabilizer_state(size_t num_qubits, SplitMix64 &rng) {
    std::vector<SignedObservable> gens;
    for (size_t j = 0; j < num_qubits; j++) {
        gens.emplace_back(BitVector(num_qubits), BitVector::unit(num_qubits, j), rng.coin());
    }
    StabilizerTableau state = StabilizerTableau::prepare(gens);
    size_t steps = 3 * num_qubits + 2;
    for (size_t s = 0; s < steps; s++) {
        SignedObservable obs = random_observable(num_qubits, rng);
        state = measure(state, obs, [&]() {
                    return rng.coin();
                }).post_state;
    }
    return state;
}

std::vector<SignedObservable> random_commuting_observables(size_t num_qubits, size_t count, SplitMix64 &rng) {
    std::vector<SignedObservable> chosen;
    while (chosen.size() < count) {
        SignedObservable candidate = random_observable(num_qubits, rng);
        bool ok = true;
        for (const auto &c : chosen) {
            ok &= commutes(c, candidate);
        }
        if (ok) {
            chosen.push_back(std::move(candidate));
        }
    }
    return chosen;
}

}  // namespace paulilogic
