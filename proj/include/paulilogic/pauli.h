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

#ifndef PAULILOGIC_PAULI_H
#define PAULILOGIC_PAULI_H

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "paulilogic/blackbox.h"
#include "paulilogic/gf2.h"

namespace paulilogic {

/// The N-qubit operator i^phase * (X^{x_1} Z^{z_1}) (x) ... (x) (X^{x_N} Z^{z_N}).
///
/// Qubit 1 is the leftmost tensor factor and is stored at bit index 0. The
/// phase is relative to the X-before-Z ordering, so for example Y = i X Z has
/// x = 1, z = 1, phase = 1.
struct PauliOperator {
    BitVector x;
    BitVector z;
    uint8_t phase = 0;

    PauliOperator() = default;
    explicit PauliOperator(size_t num_qubits);
    PauliOperator(BitVector x, BitVector z, uint8_t phase = 0);

    size_t num_qubits() const {
        return x.size();
    }
    /// Packed (x | z) vector of length 2N.
    BitVector xz() const;
    bool is_identity() const {
        return x.is_zero() && z.is_zero();
    }
    /// Hermitian iff the phase has the same parity as the number of Y sites.
    bool is_hermitian() const;

    bool operator==(const PauliOperator &other) const = default;
    std::string str() const;
};

/// A Hermitian Pauli observable in canonical form: each qubit carries
/// i^{x_j z_j} X^{x_j} Z^{z_j} (so I, X, Y, Z) and the only freedom left is
/// an overall sign.
class SignedObservable {
   public:
    SignedObservable() = default;
    SignedObservable(BitVector x, BitVector z, bool negative = false);
    /// Normalizes a Hermitian operator. Throws std::invalid_argument when the
    /// operator is not Hermitian (phase +-i relative to canonical).
    static SignedObservable from_operator(const PauliOperator &op);
    /// Parses "[+-]?[IXYZ_]*", e.g. "-YYX".
    static SignedObservable parse(std::string_view text);
    static SignedObservable identity(size_t num_qubits);

    size_t num_qubits() const {
        return x_.size();
    }
    const BitVector &x() const {
        return x_;
    }
    const BitVector &z() const {
        return z_;
    }
    bool negative() const {
        return negative_;
    }
    int sign() const {
        return negative_ ? -1 : +1;
    }
    BitVector xz() const;
    bool is_identity() const {
        return x_.is_zero() && z_.is_zero();
    }

    /// The raw operator, with the sign folded into its phase.
    PauliOperator to_operator() const;
    /// Same Pauli pattern, sign flipped when `flip` is set.
    SignedObservable with_sign_flipped(bool flip) const;
    /// Same Pauli pattern, sign +1.
    SignedObservable unsigned_base() const {
        return SignedObservable(x_, z_, false);
    }

    bool operator==(const SignedObservable &other) const = default;
    /// Signed Pauli text, e.g. "+ZZI".
    std::string str() const;

   private:
    BitVector x_;
    BitVector z_;
    bool negative_ = false;
};

/// The Pauli pattern of character c at one site: 'I', 'X', 'Y' or 'Z'.
char pauli_char(bool x, bool z);

/// The observable for proposition vector (alpha_1..alpha_N, beta_1..beta_N),
/// i.e. (x)_j i^{alpha_j beta_j} X^{alpha_j} Z^{beta_j}, with sign +1.
/// Throws std::invalid_argument on an odd-length vector.
SignedObservable from_proposition(const BitVector &proposition);

/// Phase-exact product P * Q. Throws std::invalid_argument on size mismatch.
PauliOperator multiply(const PauliOperator &p, const PauliOperator &q);

/// True iff P and Q commute. Ignores phases.
bool commutes(const PauliOperator &p, const PauliOperator &q);
bool commutes(const SignedObservable &p, const SignedObservable &q);

/// U obs U^dagger for the black box U = (x)_j X^{f_j(0)} Z^{f_j(1)}. The
/// Pauli pattern is unchanged; the sign picks up
/// (-1)^{sum_j z_j f_j(0) + x_j f_j(1)}.
SignedObservable conjugate_by_blackbox(const SignedObservable &obs, const BlackBoxConfig &cfg);

std::ostream &operator<<(std::ostream &out, const PauliOperator &p);
std::ostream &operator<<(std::ostream &out, const SignedObservable &p);

}  // namespace paulilogic

#endif
