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

#ifndef PAULILOGIC_RANDOM_STATES_H
#define PAULILOGIC_RANDOM_STATES_H

#include <vector>

#include "paulilogic/pauli.h"
#include "paulilogic/rng.h"
#include "paulilogic/stabilizer.h"

namespace paulilogic {

/// Uniformly random Pauli pattern with a random sign (identity included).
SignedObservable random_observable(size_t num_qubits, SplitMix64 &rng);

/// A random stabilizer state: random-sign |0..0> followed by a sequence of
/// random Pauli measurements with random outcomes.
StabilizerTableau random_stabilizer_state(size_t num_qubits, SplitMix64 &rng);

/// `count` pairwise-commuting random observables. Counts above N force some
/// members to be products of others.
std::vector<SignedObservable> random_commuting_observables(size_t num_qubits, size_t count, SplitMix64 &rng);

}  // namespace paulilogic

#endif
