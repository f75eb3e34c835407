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

#include "cli.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "paulilogic/experiment.h"
#include "paulilogic/logic.h"
#include "paulilogic/oracle.h"
#include "paulilogic/random_states.h"
#include "paulilogic/rng.h"

namespace paulilogic {

namespace {

using Json = nlohmann::ordered_json;

struct GlobalOptions {
    uint64_t seed = 42;
    uint64_t runs = 10000;
    double noise = 0.0;
    std::string bias;
    std::string out;
    bool json = false;
};

std::string trim(const std::string &s) {
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) {
        return "";
    }
    size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string &text, const std::string &separators) {
    std::vector<std::string> parts;
    std::string current;
    for (char c : text) {
        if (separators.find(c) != std::string::npos) {
            parts.push_back(trim(current));
            current.clear();
        } else {
            current += c;
        }
    }
    parts.push_back(trim(current));
    return parts;
}

// Anything that could not be an inline Pauli list or config is a path.
bool looks_like_path(const std::string &text) {
    return text.find('/') != std::string::npos || text.find('.') != std::string::npos ||
           std::filesystem::exists(text);
}

std::string read_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open file '" + path + "'");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

/// Signed Paulis from a file (one per line, '#' comments) or an inline list
/// such as "+ZZ,+XX".
std::vector<SignedObservable> load_observables(const std::string &source) {
    std::vector<std::string> items;
    if (looks_like_path(source)) {
        std::istringstream in(read_file(source));
        std::string line;
        while (std::getline(in, line)) {
            line = trim(line.substr(0, line.find('#')));
            if (!line.empty()) {
                items.push_back(line);
            }
        }
    } else {
        items = split(source, ",;");
    }
    std::vector<SignedObservable> result;
    for (const auto &item : items) {
        result.push_back(SignedObservable::parse(item));
    }
    if (result.empty()) {
        throw std::invalid_argument("no observables in '" + source + "'");
    }
    return result;
}

BlackBoxConfig load_config(const std::string &source) {
    if (looks_like_path(source)) {
        std::istringstream in(read_file(source));
        return BlackBoxConfig::parse(in);
    }
    return BlackBoxConfig::parse_inline(source);
}

StabilizerTableau load_state(const std::string &source) {
    return StabilizerTableau::prepare(load_observables(source));
}

NoiseModel make_noise(const GlobalOptions &g) {
    NoiseModel noise;
    noise.flip_prob = g.noise;
    if (!g.bias.empty()) {
        for (const auto &part : split(g.bias, ":,")) {
            try {
                size_t used = 0;
                noise.bias.push_back(std::stod(part, &used));
                if (used != part.size()) {
                    throw std::invalid_argument("");
                }
            } catch (const std::exception &) {
                throw std::invalid_argument("bad bias weight '" + part + "'");
            }
        }
    }
    return noise;
}

Json bits_json(const BitVector &v) {
    Json a = Json::array();
    for (size_t k = 0; k < v.size(); k++) {
        a.push_back(int(v[k]));
    }
    return a;
}

Json observables_json(const std::vector<SignedObservable> &obs) {
    Json a = Json::array();
    for (const auto &o : obs) {
        a.push_back(o.str());
    }
    return a;
}

Json report_json(const DependenceReport &r) {
    Json j;
    j["dependent"] = r.dependent;
    if (r.coefficients) {
        j["coefficients"] = bits_json(*r.coefficients);
    }
    if (r.operator_phase_flip) {
        j["phase_flip"] = int(*r.operator_phase_flip);
    }
    if (r.classical_truth) {
        j["classical"] = int(*r.classical_truth);
    }
    if (r.quantum_truth) {
        j["quantum"] = int(*r.quantum_truth);
    }
    return j;
}

std::string state_text(const StabilizerTableau &t, const std::string &comment) {
    std::string s = "# " + comment + "\n" + t.str();
    for (size_t p = 0; p < t.num_qubits(); p++) {
        s += "# destabilizer " + std::to_string(p + 1) + ": " + t.destabilizers()[p].str() + "\n";
    }
    return s;
}

std::string sign_str(int outcome) {
    return outcome > 0 ? "+1" : "-1";
}

std::string format_sci(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.3e", value);
    return buf;
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Stabilizer simulation of logical independence and Pauli measurements", "paulilogic"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions g;
    app.add_option("--seed", g.seed, "Master seed for every random choice")->capture_default_str();
    app.add_option("--runs", g.runs, "Runs per sampled cell")->capture_default_str()->check(CLI::PositiveNumber);
    app.add_option("--noise", g.noise, "Outcome bit-flip probability in [0, 0.5)")->capture_default_str();
    app.add_option("--bias", g.bias, "Per-outcome detector weights, e.g. 1:1.1");
    app.add_option("--out", g.out, "Write the result to this file instead of stdout");
    app.add_flag("--json", g.json, "JSON output where supported");

    std::string axioms_src;
    std::string state_src;
    std::string config_src;
    std::string prop_src;
    std::string obs_src;
    size_t n = 0;
    size_t oracle_n = 3;
    uint64_t oracle_trials = 100;
    uint64_t decay_trials = 10000;
    std::string q1_config = "y0";
    std::string q2_config = "y0,y0";
    double threshold = kDefaultThreshold;
    std::string lengths_src = "10,20,40,80";

    auto *prepare_cmd = app.add_subcommand("prepare", "Prepare the joint eigenstate of N axiom observables");
    prepare_cmd->add_option("--axioms", axioms_src, "Axiom file or inline list (+ZZ,+XX)")->required();

    auto *blackbox_cmd = app.add_subcommand("blackbox", "Send a state through a black box");
    blackbox_cmd->add_option("--state", state_src, "State generators (file or inline)")->required();
    blackbox_cmd->add_option("--config", config_src, "Black box config (file or inline, e.g. y1,y2)")->required();

    auto *check_cmd = app.add_subcommand("check", "Classify a proposition against axioms");
    check_cmd->add_option("--axioms", axioms_src, "Axiom file or inline list")->required();
    check_cmd->add_option("--prop", prop_src, "Proposition as a Pauli pattern, e.g. XXX")->required();
    check_cmd->add_option("--state", state_src, "State for the quantum truth (default: the axioms' eigenstate)");

    auto *measure_cmd = app.add_subcommand("measure", "Measure one observable on a state");
    measure_cmd->add_option("--state", state_src, "State generators (file or inline)")->required();
    measure_cmd->add_option("--obs", obs_src, "Observable, e.g. ZI")->required();
    measure_cmd->add_option("--config", config_src, "Black box applied before measuring");

    auto *sample_cmd = app.add_subcommand("sample", "Sample joint outcomes of commuting observables");
    sample_cmd->add_option("--state", state_src, "State generators (file or inline)")->required();
    sample_cmd->add_option("--obs", obs_src, "Observables, e.g. ZI,IZ")->required();
    sample_cmd->add_option("--config", config_src, "Black box applied before measuring");

    auto *enumerate_cmd = app.add_subcommand("enumerate", "Count dependent and independent propositions");
    enumerate_cmd->add_option("--n", n, "Number of qubits")->required()->check(CLI::PositiveNumber);
    enumerate_cmd->add_option("--axioms", axioms_src, "Axioms (default: sigma_z on every qubit)");

    auto *ghz_cmd = app.add_subcommand("ghz-demo", "Three-qubit GHZ contradiction");
    ghz_cmd->add_option("--config", config_src, "One black box (default: all 64)");

    auto *q1_cmd = app.add_subcommand("q1-demo", "Single-qubit input states versus measurement bases");
    q1_cmd->add_option("--config", q1_config, "Single-qubit black box")->capture_default_str();

    auto *q2_cmd = app.add_subcommand("q2-demo", "Bell state measured in three bases");
    q2_cmd->add_option("--config", q2_config, "Two-qubit black box")->capture_default_str();

    auto *oracle_cmd = app.add_subcommand("oracle-compare", "Cross-check tableau against the dense simulator");
    oracle_cmd->add_option("--n", oracle_n, "Number of qubits")
        ->capture_default_str()
        ->check(CLI::Range(1, int(oracle::kDenseCap)));
    oracle_cmd->add_option("--trials", oracle_trials, "Random cases")->capture_default_str()->check(CLI::PositiveNumber);

    auto *decay_cmd = app.add_subcommand("decay-study", "Misclassification rate versus run length");
    decay_cmd->add_option("--lengths", lengths_src, "Comma-separated run lengths")->capture_default_str();
    decay_cmd->add_option("--trials", decay_trials, "Trials per length")->capture_default_str()->check(CLI::PositiveNumber);
    decay_cmd->add_option("--threshold", threshold, "Imbalance threshold")->capture_default_str();

    for (auto *sub : app.get_subcommands({})) {
        sub->fallthrough();
    }

    std::vector<std::string> argv_storage;
    argv_storage.push_back("paulilogic");
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char *> argv;
    for (const auto &a : argv_storage) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(int(argv.size()), argv.data());
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsageError;
    }

    std::ostringstream result;
    try {
        NoiseModel noise = make_noise(g);
        if (*prepare_cmd) {
            StabilizerTableau t = StabilizerTableau::prepare(load_observables(axioms_src));
            if (g.json) {
                Json j;
                j["generators"] = observables_json(t.generators());
                Json d = Json::array();
                for (const auto &p : t.destabilizers()) {
                    d.push_back(p.str());
                }
                j["destabilizers"] = d;
                result << j.dump(2) << "\n";
            } else {
                result << state_text(t, "prepared from " + axioms_src);
            }
        } else if (*blackbox_cmd) {
            BlackBoxConfig cfg = load_config(config_src);
            StabilizerTableau t = apply_blackbox(load_state(state_src), cfg);
            if (g.json) {
                Json j;
                j["config"] = cfg.str();
                j["generators"] = observables_json(t.generators());
                result << j.dump(2) << "\n";
            } else {
                result << state_text(t, "after black box " + cfg.str());
            }
        } else if (*check_cmd) {
            AxiomSet axioms = AxiomSet::from_observables(load_observables(axioms_src));
            StabilizerTableau state = state_src.empty() ? axioms.prepare_state() : load_state(state_src);
            DependenceReport r = full_report(Proposition::from_pauli(prop_src), axioms, state);
            if (g.json) {
                result << report_json(r).dump(2) << "\n";
            } else {
                result << r.str() << "\n";
            }
        } else if (*measure_cmd) {
            StabilizerTableau state = load_state(state_src);
            if (!config_src.empty()) {
                state = apply_blackbox(state, load_config(config_src));
            }
            SplitMix64 rng(g.seed);
            MeasurementResult m = measure(state, SignedObservable::parse(obs_src), [&] { return rng.coin(); });
            std::string kind = m.deterministic() ? "deterministic" : "random";
            if (g.json) {
                Json j;
                j["kind"] = kind;
                j["outcome"] = m.outcome;
                j["post_state"] = observables_json(m.post_state.generators());
                result << j.dump(2) << "\n";
            } else {
                result << kind << " outcome=" << sign_str(m.outcome) << "\n";
            }
        } else if (*sample_cmd) {
            StabilizerTableau state = load_state(state_src);
            if (!config_src.empty()) {
                state = apply_blackbox(state, load_config(config_src));
            }
            RunRecord r = sample(state, load_observables(obs_src), g.runs, g.seed, noise);
            result << record_table(r, "state", "sample").to_csv();
        } else if (*enumerate_cmd) {
            AxiomSet axioms =
                axioms_src.empty() ? AxiomSet::z_basis(n) : AxiomSet::from_observables(load_observables(axioms_src));
            EnumerationCounts c = enumerate(n, axioms);
            if (g.json) {
                Json j;
                j["n"] = n;
                j["dependent"] = c.dependent;
                j["independent"] = c.independent;
                result << j.dump(2) << "\n";
            } else {
                result << "dependent: " << c.dependent << ", independent: " << c.independent << "\n";
            }
        } else if (*ghz_cmd) {
            if (!config_src.empty()) {
                GhzReport r = ghz_report(load_config(config_src));
                if (g.json) {
                    Json j;
                    j["config"] = r.config.str();
                    j["axioms"] = observables_json(r.axioms.observables());
                    j["state"] = observables_json(r.state.generators());
                    j["report"] = report_json(r.report);
                    j["blackbox_truth"] = int(r.blackbox_truth);
                    j["contradiction"] = r.classical() != r.quantum();
                    result << j.dump(2) << "\n";
                } else {
                    result << r.str();
                }
            } else {
                result << "# ghz-demo configs=64 proposition=XXX\n";
                result << "config,k,classical_truth,quantum_truth,blackbox_truth,contradiction\n";
                size_t contradictions = 0;
                for (size_t index = 0; index < 64; index++) {
                    GhzReport r = ghz_report(BlackBoxConfig::from_index(3, index));
                    bool contradiction = r.classical() != r.quantum();
                    contradictions += contradiction;
                    result << '"' << r.config.str() << "\"," << r.report.coefficients->str() << ','
                           << int(r.classical()) << ',' << int(r.quantum()) << ',' << int(r.blackbox_truth) << ','
                           << int(contradiction) << "\n";
                }
                result << "# contradictions: " << contradictions << "/64\n";
            }
        } else if (*q1_cmd) {
            result << reproduce_q1(load_config(q1_config), g.runs, g.seed, noise).to_csv();
        } else if (*q2_cmd) {
            result << reproduce_q2(load_config(q2_config), g.runs, g.seed, noise).to_csv();
        } else if (*oracle_cmd) {
            double worst = 0;
            for (uint64_t t = 0; t < oracle_trials; t++) {
                SplitMix64 rng = SplitMix64::stream(g.seed, t);
                StabilizerTableau state = random_stabilizer_state(oracle_n, rng);
                auto obs = random_commuting_observables(oracle_n, 1 + rng.below(std::min<size_t>(oracle_n + 1, 4)), rng);
                OutcomeDistribution tableau = joint_distribution(state, obs);
                OutcomeDistribution dense = oracle::distribution(oracle::state_from_axioms(state.generators()), obs);
                worst = std::max(worst, tableau.max_deviation(dense));
            }
            bool ok = worst < oracle::kTolerance;
            if (g.json) {
                Json j;
                j["n"] = oracle_n;
                j["trials"] = oracle_trials;
                j["seed"] = g.seed;
                j["max_deviation"] = worst;
                j["pass"] = ok;
                result << j.dump(2) << "\n";
            } else {
                result << "oracle-compare n=" << oracle_n << " trials=" << oracle_trials << " seed=" << g.seed
                       << " max_deviation=" << format_sci(worst) << " " << (ok ? "PASS" : "FAIL") << "\n";
            }
            if (!ok) {
                out << result.str();
                err << "tableau and dense simulator disagree\n";
                return kExitDomainError;
            }
        } else if (*decay_cmd) {
            std::vector<uint64_t> lengths;
            for (const auto &part : split(lengths_src, ",")) {
                try {
                    lengths.push_back(std::stoull(part));
                } catch (const std::exception &) {
                    throw std::invalid_argument("bad run length '" + part + "'");
                }
            }
            result << decay_study(noise, lengths, decay_trials, g.seed, threshold).to_tsv();
        }
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << "\n";
        return kExitDomainError;
    } catch (const std::out_of_range &e) {
        err << "error: " << e.what() << "\n";
        return kExitDomainError;
    }

    if (g.out.empty()) {
        out << result.str();
    } else {
        std::ofstream file(g.out, std::ios::binary);
        file << result.str();
        if (!file) {
            err << "error: cannot write '" << g.out << "'\n";
            return kExitDomainError;
        }
    }
    return kExitOk;
}

}  // namespace paulilogic
