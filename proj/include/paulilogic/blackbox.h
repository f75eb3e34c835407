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

#ifndef PAULILOGIC_BLACKBOX_H
#define PAULILOGIC_BLACKBOX_H

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "paulilogic/gf2.h"

namespace paulilogic {

/// One of the four functions {0,1} -> {0,1}, stored by value table.
///
/// Labels follow k = 2*f(0) + f(1): y0 is constant 0, y1 is the identity,
/// y2 is negation, y3 is constant 1.
struct BooleanFunction {
    bool f0 = false;
    bool f1 = false;

    static BooleanFunction from_label(int label);
    int label() const {
        return 2 * int(f0) + int(f1);
    }
    bool operator()(bool x) const {
        return x ? f1 : f0;
    }
    bool operator==(const BooleanFunction &other) const = default;
};

/// The N functions hidden inside a row of single-qubit black boxes.
/// Qubit j passes through sigma_x^{f_j(0)} sigma_z^{f_j(1)}.
class BlackBoxConfig {
   public:
    explicit BlackBoxConfig(std::vector<BooleanFunction> functions);
    /// N copies of the same function.
    static BlackBoxConfig uniform(size_t n, BooleanFunction f);
    /// The N-qubit config whose functions are all y0.
    static BlackBoxConfig identity(size_t n);
    /// Decodes index in [0, 4^N) as N base-4 labels, qubit 1 most significant.
    static BlackBoxConfig from_index(size_t n, size_t index);

    /// Reads one function per line, either "f0 f1" (two bits) or a label "y2".
    /// Blank lines and '#' comments are ignored.
    static BlackBoxConfig parse(std::istream &in);
    /// Same grammar as `parse`, but with ',' or ';' also separating functions.
    static BlackBoxConfig parse_inline(std::string_view text);

    size_t size() const {
        return functions_.size();
    }
    const BooleanFunction &operator[](size_t j) const {
        return functions_[j];
    }
    const std::vector<BooleanFunction> &functions() const {
        return functions_;
    }

    /// The 2N-bit vector (f_1(1)..f_N(1) | f_1(0)..f_N(0)). A proposition
    /// vector J = (alpha | beta) evaluates to the dot product of J with it.
    BitVector truth_weights() const;

    /// Per-qubit XOR of the value tables; conjugating by the result matches
    /// conjugating by both boxes in turn.
    BlackBoxConfig combined_with(const BlackBoxConfig &other) const;

    bool operator==(const BlackBoxConfig &other) const = default;
    std::string str() const;

   private:
    std::vector<BooleanFunction> functions_;
};

/// Parity sum_j [beta_j f_j(0) + alpha_j f_j(1)] for J = (alpha | beta).
/// Zero means the statement "... = 0" holds.
bool proposition_truth(const BitVector &proposition, const BlackBoxConfig &cfg);

/// proposition_truth applied to each axiom vector.
std::vector<bool> axiom_truths(const std::vector<BitVector> &axioms, const BlackBoxConfig &cfg);

}  // namespace paulilogic

#endif
