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

#include "paulilogic/experiment.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "paulilogic/rng.h"

namespace paulilogic {

namespace {

// Runs per thread below which spawning threads is not worth it.
constexpr uint64_t kRunsPerThread = 1 << 15;

std::string format_general(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%g", value);
    return buf;
}

size_t outcome_code(const OutcomeKey &key) {
    size_t code = 0;
    for (int v : key) {
        code = (code << 1) | (v < 0 ? 1 : 0);
    }
    return code;
}

OutcomeKey outcome_key(size_t code, size_t num_observables) {
    OutcomeKey key(num_observables);
    for (size_t i = 0; i < num_observables; i++) {
        key[i] = (code >> (num_observables - 1 - i)) & 1 ? -1 : +1;
    }
    return key;
}

size_t draw(const std::vector<double> &cumulative, double u) {
    auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    size_t index = size_t(it - cumulative.begin());
    return std::min(index, cumulative.size() - 1);
}

void append_cell(
    CountTable &table,
    const std::string &state_label,
    const std::string &basis_label,
    const StabilizerTableau &state,
    const std::vector<SignedObservable> &basis,
    uint64_t n_runs,
    uint64_t seed,
    const NoiseModel &noise) {
    RunRecord r = sample(state, basis, n_runs, seed, noise);
    OutcomeDistribution shape;
    shape.num_observables = basis.size();
    for (const OutcomeKey &key : shape.all_outcomes()) {
        table.rows.push_back(CountRow{state_label, basis_label, outcome_label(key), r.count(key), r.frequency(key)});
    }
}

}  // namespace

void NoiseModel::validate(size_t num_outcomes) const {
    if (!(flip_prob >= 0.0 && flip_prob < 0.5)) {
        throw std::invalid_argument("flip_prob must lie in [0, 0.5), got " + format_general(flip_prob));
    }
    if (bias.empty()) {
        return;
    }
    if (bias.size() != num_outcomes) {
        throw std::invalid_argument(
            "bias needs " + std::to_string(num_outcomes) + " weights, got " + std::to_string(bias.size()));
    }
    for (double w : bias) {
        if (!(w > 0.0) || !std::isfinite(w)) {
            throw std::invalid_argument("bias weights must be positive");
        }
    }
}

std::string NoiseModel::str() const {
    std::string s = "flip_prob=" + format_general(flip_prob) + " bias=";
    if (bias.empty()) {
        return s + "uniform";
    }
    for (size_t k = 0; k < bias.size(); k++) {
        if (k) {
            s += ':';
        }
        s += format_general(bias[k]);
    }
    return s;
}

uint64_t RunRecord::count(const OutcomeKey &outcome) const {
    auto it = counts.find(outcome);
    return it == counts.end() ? 0 : it->second;
}

double RunRecord::frequency(const OutcomeKey &outcome) const {
    return n_runs == 0 ? 0.0 : double(count(outcome)) / double(n_runs);
}

std::vector<double> noisy_outcome_probabilities(const OutcomeDistribution &exact, const NoiseModel &noise) {
    size_t k = exact.num_observables;
    size_t num_outcomes = size_t{1} << k;
    noise.validate(num_outcomes);
    std::vector<double> clean(num_outcomes, 0.0);
    for (const auto &[key, p] : exact.probabilities) {
        clean[outcome_code(key)] = p;
    }
    std::vector<double> noisy(num_outcomes, 0.0);
    double q = noise.flip_prob;
    for (size_t to = 0; to < num_outcomes; to++) {
        for (size_t from = 0; from < num_outcomes; from++) {
            if (clean[from] == 0.0) {
                continue;
            }
            int flips = std::popcount(to ^ from);
            noisy[to] += clean[from] * std::pow(q, flips) * std::pow(1 - q, int(k) - flips);
        }
    }
    if (!noise.bias.empty()) {
        double z = 0;
        for (size_t o = 0; o < num_outcomes; o++) {
            noisy[o] *= noise.bias[o];
            z += noisy[o];
        }
        for (double &p : noisy) {
            p /= z;
        }
    }
    return noisy;
}

RunRecord sample(
    const StabilizerTableau &state,
    const std::vector<SignedObservable> &observables,
    uint64_t n_runs,
    uint64_t seed,
    const NoiseModel &noise,
    unsigned threads) {
    if (n_runs == 0) {
        throw std::invalid_argument("sample: n_runs must be at least 1");
    }
    OutcomeDistribution exact = joint_distribution(state, observables);
    std::vector<double> law = noisy_outcome_probabilities(exact, noise);
    std::vector<double> cumulative(law.size());
    double acc = 0;
    for (size_t o = 0; o < law.size(); o++) {
        acc += law[o];
        cumulative[o] = acc;
    }

    if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
    }
    uint64_t useful = std::max<uint64_t>(1, n_runs / kRunsPerThread);
    unsigned workers = unsigned(std::min<uint64_t>(threads, useful));

    std::vector<std::vector<uint64_t>> partial(workers, std::vector<uint64_t>(law.size(), 0));
    auto work = [&](unsigned w) {
        uint64_t begin = n_runs * w / workers;
        uint64_t end = n_runs * (w + 1) / workers;
        for (uint64_t run = begin; run < end; run++) {
            SplitMix64 rng = SplitMix64::stream(seed, run);
            partial[w][draw(cumulative, rng.uniform() * acc)]++;
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; w++) {
            pool.emplace_back(work, w);
        }
        for (auto &t : pool) {
            t.join();
        }
    }

    RunRecord r;
    r.seed = seed;
    r.n_runs = n_runs;
    r.state = state.generators();
    r.observables = observables;
    r.noise = noise;
    for (size_t o = 0; o < law.size(); o++) {
        uint64_t total = 0;
        for (const auto &p : partial) {
            total += p[o];
        }
        if (total) {
            r.counts[outcome_key(o, observables.size())] = total;
        }
    }
    return r;
}

Verdict classify_record(const RunRecord &r, double threshold) {
    if (r.n_runs == 0) {
        throw std::invalid_argument("classify_record: empty record");
    }
    if (r.observables.size() != 1) {
        throw std::invalid_argument("classify_record needs a record of a single binary observable");
    }
    Verdict v;
    v.imbalance = std::abs(r.frequency({+1}) - 0.5);
    v.decision = v.imbalance > threshold ? Decision::Dependent : Decision::Independent;
    double gap = v.imbalance - threshold;
    v.confidence_bound = std::exp(-2.0 * double(r.n_runs) * gap * gap);
    return v;
}

DecayTable decay_study(
    const NoiseModel &noise,
    const std::vector<uint64_t> &run_lengths,
    uint64_t trials,
    uint64_t seed,
    double threshold) {
    noise.validate(2);
    if (!(threshold > 0.0) || !(noise.flip_prob < 0.5 - threshold)) {
        throw std::invalid_argument(
            "indistinguishable regime: need 0 < threshold < 1/2 - flip_prob (threshold=" + format_general(threshold) +
            ", flip_prob=" + format_general(noise.flip_prob) + ")");
    }
    if (trials == 0) {
        throw std::invalid_argument("decay_study: trials must be at least 1");
    }
    StabilizerTableau z_plus = StabilizerTableau::prepare({SignedObservable::parse("+Z")});
    std::vector<SignedObservable> dependent_obs = {SignedObservable::parse("Z")};
    std::vector<SignedObservable> independent_obs = {SignedObservable::parse("X")};

    DecayTable table;
    table.seed = seed;
    table.noise = noise;
    table.threshold = threshold;
    uint64_t stream = 0;
    for (uint64_t length : run_lengths) {
        if (length == 0) {
            throw std::invalid_argument("decay_study: run lengths must be positive");
        }
        uint64_t dep_errors = 0;
        uint64_t ind_errors = 0;
        for (uint64_t t = 0; t < trials; t++) {
            uint64_t dep_seed = SplitMix64::stream(seed, stream++)();
            uint64_t ind_seed = SplitMix64::stream(seed, stream++)();
            RunRecord dep = sample(z_plus, dependent_obs, length, dep_seed, noise, 1);
            RunRecord ind = sample(z_plus, independent_obs, length, ind_seed, noise, 1);
            dep_errors += classify_record(dep, threshold).decision != Decision::Dependent;
            ind_errors += classify_record(ind, threshold).decision != Decision::Independent;
        }
        DecayRow row;
        row.run_length = length;
        row.trials = trials;
        row.dependent_error_rate = double(dep_errors) / double(trials);
        row.independent_error_rate = double(ind_errors) / double(trials);
        row.error_rate = 0.5 * (row.dependent_error_rate + row.independent_error_rate);
        double dep_gap = 0.5 - noise.flip_prob - threshold;
        double dep_bound = std::exp(-2.0 * double(length) * dep_gap * dep_gap);
        double ind_bound = std::min(1.0, 2.0 * std::exp(-2.0 * double(length) * threshold * threshold));
        row.chernoff_bound = 0.5 * (dep_bound + ind_bound);
        table.rows.push_back(row);
    }
    return table;
}

std::string DecayTable::to_tsv() const {
    std::ostringstream out;
    out << "# decay-study seed=" << seed << " " << noise.str() << " threshold=" << format_general(threshold) << "\n";
    out << "run_length\ttrials\tdependent_error_rate\tindependent_error_rate\terror_rate\tchernoff_bound\n";
    for (const auto &r : rows) {
        out << r.run_length << '\t' << r.trials << '\t' << format_fixed6(r.dependent_error_rate) << '\t'
            << format_fixed6(r.independent_error_rate) << '\t' << format_fixed6(r.error_rate) << '\t'
            << format_fixed6(r.chernoff_bound) << '\n';
    }
    return out.str();
}

std::string CountTable::to_csv() const {
    std::ostringstream out;
    out << "# " << comment << "\n";
    out << "state,basis,outcome_label,count,frequency\n";
    for (const auto &r : rows) {
        out << r.state << ',' << r.basis << ',' << r.outcome_label << ',' << r.count << ','
            << format_fixed6(r.frequency) << '\n';
    }
    return out.str();
}

std::vector<CountRow> CountTable::cell(const std::string &state, const std::string &basis) const {
    std::vector<CountRow> result;
    for (const auto &r : rows) {
        if (r.state == state && r.basis == basis) {
            result.push_back(r);
        }
    }
    return result;
}

CountTable reproduce_q1(const BlackBoxConfig &cfg, uint64_t n_runs, uint64_t seed, const NoiseModel &noise) {
    if (cfg.size() != 1) {
        throw std::invalid_argument("q1 needs a single-qubit black box");
    }
    const std::vector<std::pair<std::string, std::string>> inputs = {{"z+", "+Z"}, {"x+", "+X"}, {"y+", "+Y"}};
    const std::vector<std::pair<std::string, std::string>> bases = {{"z", "Z"}, {"x", "X"}, {"y", "Y"}};

    CountTable table;
    table.comment = "q1-demo seed=" + std::to_string(seed) + " runs=" + std::to_string(n_runs) + " " + noise.str() +
                    " config=" + cfg.str();
    uint64_t cell = 0;
    for (const auto &[state_label, generator] : inputs) {
        StabilizerTableau state =
            apply_blackbox(StabilizerTableau::prepare({SignedObservable::parse(generator)}), cfg);
        for (const auto &[basis_label, basis] : bases) {
            uint64_t cell_seed = SplitMix64::stream(seed, cell++)();
            append_cell(table, state_label, basis_label, state, {SignedObservable::parse(basis)}, n_runs, cell_seed, noise);
        }
    }
    return table;
}

CountTable reproduce_q2(const BlackBoxConfig &cfg, uint64_t n_runs, uint64_t seed, const NoiseModel &noise) {
    if (cfg.size() != 2) {
        throw std::invalid_argument("q2 needs a two-qubit black box");
    }
    StabilizerTableau state = apply_blackbox(
        StabilizerTableau::prepare({SignedObservable::parse("+ZZ"), SignedObservable::parse("+XX")}), cfg);
    const std::vector<std::pair<std::string, std::vector<std::string>>> bases = {
        {"bE", {"ZZ", "XX"}},
        {"bF", {"ZI", "IZ"}},
        {"bD", {"ZI", "IX"}},
    };

    CountTable table;
    table.comment = "q2-demo seed=" + std::to_string(seed) + " runs=" + std::to_string(n_runs) + " " + noise.str() +
                    " config=" + cfg.str();
    uint64_t cell = 0;
    for (const auto &[basis_label, names] : bases) {
        std::vector<SignedObservable> basis;
        for (const auto &name : names) {
            basis.push_back(SignedObservable::parse(name));
        }
        uint64_t cell_seed = SplitMix64::stream(seed, cell++)();
        append_cell(table, "phi+", basis_label, state, basis, n_runs, cell_seed, noise);
    }
    return table;
}

CountTable record_table(const RunRecord &r, const std::string &state_label, const std::string &command) {
    CountTable table;
    table.comment = command + " seed=" + std::to_string(r.seed) + " runs=" + std::to_string(r.n_runs) + " " +
                    r.noise.str();
    std::string basis_label;
    for (size_t i = 0; i < r.observables.size(); i++) {
        if (i) {
            basis_label += ' ';
        }
        basis_label += r.observables[i].str();
    }
    OutcomeDistribution shape;
    shape.num_observables = r.observables.size();
    for (const OutcomeKey &key : shape.all_outcomes()) {
        table.rows.push_back(CountRow{state_label, basis_label, outcome_label(key), r.count(key), r.frequency(key)});
    }
    return table;
}

std::string format_fixed6(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", value);
    return buf;
}

}  // namespace paulilogic
