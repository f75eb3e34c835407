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

#ifndef PAULILOGIC_EXPERIMENT_H
#define PAULILOGIC_EXPERIMENT_H

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "paulilogic/blackbox.h"
#include "paulilogic/pauli.h"
#include "paulilogic/stabilizer.h"

namespace paulilogic {

/// Imperfect readout: every outcome bit flips with probability `flip_prob`,
/// then outcome o is detected with relative weight bias[o] (outcome index as
/// in OutcomeDistribution::all_outcomes). An empty bias means uniform.
struct NoiseModel {
    double flip_prob = 0.0;
    std::vector<double> bias;

    /// Throws std::invalid_argument unless 0 <= flip_prob < 0.5 and the bias
    /// is empty or has `num_outcomes` positive entries.
    void validate(size_t num_outcomes) const;
    std::string str() const;
};

struct RunRecord {
    uint64_t seed = 0;
    uint64_t n_runs = 0;
    std::map<OutcomeKey, uint64_t> counts;
    std::vector<SignedObservable> state;  // generators of the measured state
    std::optional<BlackBoxConfig> config;
    std::vector<SignedObservable> observables;
    NoiseModel noise;

    uint64_t count(const OutcomeKey &outcome) const;
    double frequency(const OutcomeKey &outcome) const;
};

enum class Decision { Dependent, Independent };

struct Verdict {
    Decision decision = Decision::Independent;
    double imbalance = 0;         // |freq(+1) - 1/2|
    double confidence_bound = 1;  // exp(-2 n (imbalance - threshold)^2)
};

constexpr double kDefaultThreshold = 0.25;

/// n_runs independent noisy samples of the joint outcome of `observables`.
/// Run r draws from its own stream SplitMix64::stream(seed, r), so the record
/// does not depend on `threads` (0 picks the hardware concurrency).
///
/// Throws std::invalid_argument for n_runs == 0, bad noise parameters or
/// anticommuting observables.
RunRecord sample(
    const StabilizerTableau &state,
    const std::vector<SignedObservable> &observables,
    uint64_t n_runs,
    uint64_t seed,
    const NoiseModel &noise,
    unsigned threads = 0);

/// The outcome law `sample` draws from: the exact distribution pushed
/// through the bit flips and detector bias.
std::vector<double> noisy_outcome_probabilities(const OutcomeDistribution &exact, const NoiseModel &noise);

/// Dependent iff the imbalance exceeds `threshold`. Needs a single-observable
/// record with at least one run.
Verdict classify_record(const RunRecord &r, double threshold = kDefaultThreshold);

struct DecayRow {
    uint64_t run_length = 0;
    uint64_t trials = 0;
    double dependent_error_rate = 0;
    double independent_error_rate = 0;
    double error_rate = 0;      // mean of the two
    double chernoff_bound = 0;  // Hoeffding bound on error_rate
};

struct DecayTable {
    uint64_t seed = 0;
    NoiseModel noise;
    double threshold = kDefaultThreshold;
    std::vector<DecayRow> rows;

    std::string to_tsv() const;
};

/// Misclassification rate versus outcome-string length. Each trial samples a
/// sigma_z record (dependent) and a sigma_x record (independent) from |z+>
/// and classifies both.
///
/// Throws std::invalid_argument("indistinguishable regime") unless
/// 0 < threshold and flip_prob < 1/2 - threshold.
DecayTable decay_study(
    const NoiseModel &noise,
    const std::vector<uint64_t> &run_lengths,
    uint64_t trials,
    uint64_t seed,
    double threshold = kDefaultThreshold);

struct CountRow {
    std::string state;
    std::string basis;
    std::string outcome_label;
    uint64_t count = 0;
    double frequency = 0;
};

/// Demo output: one comment line with the parameters, a header row, then rows.
struct CountTable {
    std::string comment;
    std::vector<CountRow> rows;

    std::string to_csv() const;
    /// Rows for one (state, basis) cell, in outcome order.
    std::vector<CountRow> cell(const std::string &state, const std::string &basis) const;
};

/// Single qubit: inputs |z+>, |x+>, |y+> through the box, each measured in
/// the z, x and y bases.
CountTable reproduce_q1(const BlackBoxConfig &cfg, uint64_t n_runs, uint64_t seed, const NoiseModel &noise = {});

/// Two qubits from |Phi+> through the box, measured in the Bell basis bE
/// (ZZ, XX), the local basis bF (ZI, IZ) and the mixed basis bD (ZI, IX).
CountTable reproduce_q2(const BlackBoxConfig &cfg, uint64_t n_runs, uint64_t seed, const NoiseModel &noise = {});

/// Shared CSV writer for a sampled record (used by the `sample` command).
CountTable record_table(const RunRecord &r, const std::string &state_label, const std::string &command);

/// "%.6f" formatting used by every table writer.
std::string format_fixed6(double value);

}  // namespace paulilogic

#endif
