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

#include "paulilogic/blackbox.h"

#include <sstream>
#include <stdexcept>

namespace paulilogic {

namespace {

std::string trim(std::string_view s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) {
        return "";
    }
    size_t e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

BooleanFunction parse_function(const std::string &token) {
    if (token.size() == 2 && (token[0] == 'y' || token[0] == 'Y')) {
        if (token[1] < '0' || token[1] > '3') {
            throw std::invalid_argument("Boolean function label must be y0..y3, got '" + token + "'");
        }
        return BooleanFunction::from_label(token[1] - '0');
    }
    std::istringstream ss(token);
    std::string a, b, extra;
    ss >> a >> b;
    if (!(ss >> extra) && (a == "0" || a == "1") && (b == "0" || b == "1")) {
        return BooleanFunction{a == "1", b == "1"};
    }
    throw std::invalid_argument("Expected \"f0 f1\" bits or a label y0..y3, got '" + token + "'");
}

}  // namespace

BooleanFunction BooleanFunction::from_label(int label) {
    if (label < 0 || label > 3) {
        throw std::invalid_argument("Boolean function label must be in 0..3");
    }
    return BooleanFunction{(label & 2) != 0, (label & 1) != 0};
}

BlackBoxConfig::BlackBoxConfig(std::vector<BooleanFunction> functions) : functions_(std::move(functions)) {
    if (functions_.empty()) {
        throw std::invalid_argument("A black box config needs at least one function");
    }
}

BlackBoxConfig BlackBoxConfig::uniform(size_t n, BooleanFunction f) {
    return BlackBoxConfig(std::vector<BooleanFunction>(n, f));
}

BlackBoxConfig BlackBoxConfig::identity(size_t n) {
    return uniform(n, BooleanFunction{});
}

BlackBoxConfig BlackBoxConfig::from_index(size_t n, size_t index) {
    std::vector<BooleanFunction> fs(n);
    for (size_t j = n; j-- > 0;) {
        fs[j] = BooleanFunction::from_label(int(index & 3));
        index >>= 2;
    }
    if (index != 0) {
        throw std::invalid_argument("Black box config index out of range");
    }
    return BlackBoxConfig(std::move(fs));
}

BlackBoxConfig BlackBoxConfig::parse(std::istream &in) {
    std::vector<BooleanFunction> fs;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.resize(hash);
        }
        line = trim(line);
        if (!line.empty()) {
            fs.push_back(parse_function(line));
        }
    }
    return BlackBoxConfig(std::move(fs));
}

BlackBoxConfig BlackBoxConfig::parse_inline(std::string_view text) {
    std::string normalized(text);
    for (char &c : normalized) {
        if (c == ',' || c == ';') {
            c = '\n';
        }
    }
    std::istringstream in(normalized);
    return parse(in);
}

BitVector BlackBoxConfig::truth_weights() const {
    size_t n = functions_.size();
    BitVector w(2 * n);
    for (size_t j = 0; j < n; j++) {
        w.set(j, functions_[j].f1);
        w.set(n + j, functions_[j].f0);
    }
    return w;
}

BlackBoxConfig BlackBoxConfig::combined_with(const BlackBoxConfig &other) const {
    if (other.size() != size()) {
        throw std::invalid_argument("Cannot combine black box configs of different sizes");
    }
    std::vector<BooleanFunction> fs(size());
    for (size_t j = 0; j < size(); j++) {
        fs[j] = BooleanFunction{functions_[j].f0 != other[j].f0, functions_[j].f1 != other[j].f1};
    }
    return BlackBoxConfig(std::move(fs));
}

std::string BlackBoxConfig::str() const {
    std::string result;
    for (size_t j = 0; j < functions_.size(); j++) {
        if (j) {
            result += ',';
        }
        result += 'y';
        result += char('0' + functions_[j].label());
    }
    return result;
}

bool proposition_truth(const BitVector &proposition, const BlackBoxConfig &cfg) {
    if (proposition.size() != 2 * cfg.size()) {
        throw std::invalid_argument(
            "Proposition vector of length " + std::to_string(proposition.size()) + " does not match " +
            std::to_string(cfg.size()) + " black box functions");
    }
    return proposition.dot(cfg.truth_weights());
}

std::vector<bool> axiom_truths(const std::vector<BitVector> &axioms, const BlackBoxConfig &cfg) {
    BitVector weights = cfg.truth_weights();
    std::vector<bool> result;
    result.reserve(axioms.size());
    for (const auto &h : axioms) {
        if (h.size() != weights.size()) {
            throw std::invalid_argument("Axiom vector length does not match black box size");
        }
        result.push_back(h.dot(weights));
    }
    return result;
}

}  // namespace paulilogic
