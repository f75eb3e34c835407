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

#include "paulilogic/pauli.h"

#include <stdexcept>

namespace paulilogic {

namespace {

void check_sizes(size_t a, size_t b, const char *what) {
    if (a != b) {
        throw std::invalid_argument(
            std::string(what) + ": qubit count mismatch (" + std::to_string(a) + " vs " + std::to_string(b) + ")");
    }
}

// Phase of the canonical Hermitian form: one factor of i per Y site.
uint8_t canonical_phase(const BitVector &x, const BitVector &z) {
    return uint8_t((x & z).popcount() & 3);
}

}  // namespace

PauliOperator::PauliOperator(size_t num_qubits) : x(num_qubits), z(num_qubits), phase(0) {
}

PauliOperator::PauliOperator(BitVector x_bits, BitVector z_bits, uint8_t phase_exponent)
    : x(std::move(x_bits)), z(std::move(z_bits)), phase(phase_exponent & 3) {
    check_sizes(x.size(), z.size(), "PauliOperator");
}

BitVector PauliOperator::xz() const {
    return BitVector::concat(x, z);
}

bool PauliOperator::is_hermitian() const {
    return ((phase - canonical_phase(x, z)) & 1) == 0;
}

std::string PauliOperator::str() const {
    static const char *prefixes[4] = {"+", "+i", "-", "-i"};
    std::string result = prefixes[(phase - canonical_phase(x, z)) & 3];
    for (size_t j = 0; j < num_qubits(); j++) {
        result += pauli_char(x[j], z[j]);
    }
    return result;
}

SignedObservable::SignedObservable(BitVector x, BitVector z, bool negative)
    : x_(std::move(x)), z_(std::move(z)), negative_(negative) {
    check_sizes(x_.size(), z_.size(), "SignedObservable");
}

SignedObservable SignedObservable::from_operator(const PauliOperator &op) {
    uint8_t relative = (op.phase - canonical_phase(op.x, op.z)) & 3;
    if (relative & 1) {
        throw std::invalid_argument("Observable " + op.str() + " is not Hermitian");
    }
    return SignedObservable(op.x, op.z, relative == 2);
}

SignedObservable SignedObservable::parse(std::string_view text) {
    bool negative = false;
    if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    BitVector x(text.size());
    BitVector z(text.size());
    for (size_t j = 0; j < text.size(); j++) {
        switch (text[j]) {
            case 'I':
            case '_':
                break;
            case 'X':
                x.set(j, true);
                break;
            case 'Y':
                x.set(j, true);
                z.set(j, true);
                break;
            case 'Z':
                z.set(j, true);
                break;
            default:
                throw std::invalid_argument("Unrecognized Pauli character '" + std::string(1, text[j]) + "'");
        }
    }
    if (text.empty()) {
        throw std::invalid_argument("Empty Pauli string");
    }
    return SignedObservable(std::move(x), std::move(z), negative);
}

SignedObservable SignedObservable::identity(size_t num_qubits) {
    return SignedObservable(BitVector(num_qubits), BitVector(num_qubits), false);
}

BitVector SignedObservable::xz() const {
    return BitVector::concat(x_, z_);
}

PauliOperator SignedObservable::to_operator() const {
    return PauliOperator(x_, z_, uint8_t(canonical_phase(x_, z_) + (negative_ ? 2 : 0)));
}

SignedObservable SignedObservable::with_sign_flipped(bool flip) const {
    return SignedObservable(x_, z_, negative_ != flip);
}

std::string SignedObservable::str() const {
    std::string result(1, negative_ ? '-' : '+');
    for (size_t j = 0; j < num_qubits(); j++) {
        result += pauli_char(x_[j], z_[j]);
    }
    return result;
}

char pauli_char(bool x, bool z) {
    return "IZXY"[2 * int(x) + int(z)];
}

SignedObservable from_proposition(const BitVector &proposition) {
    if (proposition.size() % 2 != 0) {
        throw std::invalid_argument("Proposition vectors must have even length 2N");
    }
    size_t n = proposition.size() / 2;
    return SignedObservable(proposition.slice(0, n), proposition.slice(n, n), false);
}

PauliOperator multiply(const PauliOperator &p, const PauliOperator &q) {
    check_sizes(p.num_qubits(), q.num_qubits(), "multiply");
    // X^a Z^b X^c Z^d = (-1)^{b c} X^{a+c} Z^{b+d} at every site.
    uint8_t swaps = uint8_t((p.z & q.x).popcount() & 1);
    return PauliOperator(p.x ^ q.x, p.z ^ q.z, uint8_t(p.phase + q.phase + 2 * swaps));
}

bool commutes(const PauliOperator &p, const PauliOperator &q) {
    check_sizes(p.num_qubits(), q.num_qubits(), "commutes");
    return p.x.dot(q.z) == p.z.dot(q.x);
}

bool commutes(const SignedObservable &p, const SignedObservable &q) {
    check_sizes(p.num_qubits(), q.num_qubits(), "commutes");
    return p.x().dot(q.z()) == p.z().dot(q.x());
}

SignedObservable conjugate_by_blackbox(const SignedObservable &obs, const BlackBoxConfig &cfg) {
    check_sizes(obs.num_qubits(), cfg.size(), "conjugate_by_blackbox");
    return obs.with_sign_flipped(proposition_truth(obs.xz(), cfg));
}

std::ostream &operator<<(std::ostream &out, const PauliOperator &p) {
    return out << p.str();
}

std::ostream &operator<<(std::ostream &out, const SignedObservable &p) {
    return out << p.str();
}

}  // namespace paulilogic
