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

#include "paulilogic/oracle.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace paulilogic::oracle {

namespace {

const Complex kI{0.0, 1.0};

DenseOperator sigma(char which) {
    DenseOperator m(2);
    switch (which) {
        case 'I':
            m.at(0, 0) = 1;
            m.at(1, 1) = 1;
            break;
        case 'X':
            m.at(0, 1) = 1;
            m.at(1, 0) = 1;
            break;
        case 'Z':
            m.at(0, 0) = 1;
            m.at(1, 1) = -1;
            break;
        default:
            throw std::invalid_argument("unknown Pauli factor");
    }
    return m;
}

void check_cap(size_t n) {
    if (n > kDenseCap) {
        throw std::invalid_argument(
            "Dense oracle is limited to " + std::to_string(kDenseCap) + " qubits, got " + std::to_string(n));
    }
}

// X^x Z^z for one site.
DenseOperator site_factor(bool x, bool z) {
    DenseOperator m = DenseOperator::identity(2);
    if (x) {
        m = m * sigma('X');
    }
    if (z) {
        m = m * sigma('Z');
    }
    return m;
}

DenseOperator projector(const SignedObservable &obs, int outcome) {
    DenseOperator p = pauli_matrix(obs);
    DenseOperator id = DenseOperator::identity(p.dim());
    return (id + p * Complex(outcome)) * Complex(0.5);
}

std::vector<Complex> normalized(std::vector<Complex> v) {
    double n = std::sqrt(inner(v, v).real());
    for (auto &a : v) {
        a /= n;
    }
    return v;
}

}  // namespace

DenseOperator::DenseOperator(size_t dim) : dim_(dim), data_(dim * dim, Complex(0)) {
}

DenseOperator DenseOperator::identity(size_t dim) {
    DenseOperator m(dim);
    for (size_t k = 0; k < dim; k++) {
        m.at(k, k) = 1;
    }
    return m;
}

DenseOperator DenseOperator::operator*(const DenseOperator &other) const {
    if (dim_ != other.dim_) {
        throw std::invalid_argument("DenseOperator dimension mismatch");
    }
    DenseOperator result(dim_);
    for (size_t r = 0; r < dim_; r++) {
        for (size_t k = 0; k < dim_; k++) {
            Complex a = at(r, k);
            if (a == Complex(0)) {
                continue;
            }
            for (size_t c = 0; c < dim_; c++) {
                result.at(r, c) += a * other.at(k, c);
            }
        }
    }
    return result;
}

DenseOperator DenseOperator::operator*(Complex scalar) const {
    DenseOperator result = *this;
    for (auto &a : result.data_) {
        a *= scalar;
    }
    return result;
}

DenseOperator DenseOperator::operator+(const DenseOperator &other) const {
    if (dim_ != other.dim_) {
        throw std::invalid_argument("DenseOperator dimension mismatch");
    }
    DenseOperator result = *this;
    for (size_t k = 0; k < data_.size(); k++) {
        result.data_[k] += other.data_[k];
    }
    return result;
}

DenseOperator DenseOperator::operator-(const DenseOperator &other) const {
    return *this + other * Complex(-1);
}

DenseOperator DenseOperator::adjoint() const {
    DenseOperator result(dim_);
    for (size_t r = 0; r < dim_; r++) {
        for (size_t c = 0; c < dim_; c++) {
            result.at(c, r) = std::conj(at(r, c));
        }
    }
    return result;
}

DenseOperator DenseOperator::kron(const DenseOperator &other) const {
    DenseOperator result(dim_ * other.dim_);
    for (size_t r1 = 0; r1 < dim_; r1++) {
        for (size_t c1 = 0; c1 < dim_; c1++) {
            Complex a = at(r1, c1);
            for (size_t r2 = 0; r2 < other.dim_; r2++) {
                for (size_t c2 = 0; c2 < other.dim_; c2++) {
                    result.at(r1 * other.dim_ + r2, c1 * other.dim_ + c2) = a * other.at(r2, c2);
                }
            }
        }
    }
    return result;
}

double DenseOperator::distance(const DenseOperator &other) const {
    if (dim_ != other.dim_) {
        throw std::invalid_argument("DenseOperator dimension mismatch");
    }
    double worst = 0;
    for (size_t k = 0; k < data_.size(); k++) {
        worst = std::max(worst, std::abs(data_[k] - other.data_[k]));
    }
    return worst;
}

size_t DenseState::num_qubits() const {
    size_t n = 0;
    while ((size_t{1} << n) < amplitudes.size()) {
        n++;
    }
    return n;
}

double DenseState::norm() const {
    return std::sqrt(inner(amplitudes, amplitudes).real());
}

std::vector<Complex> apply_operator(const DenseOperator &op, const std::vector<Complex> &v) {
    if (op.dim() != v.size()) {
        throw std::invalid_argument("apply: dimension mismatch");
    }
    std::vector<Complex> out(v.size());
    for (size_t r = 0; r < op.dim(); r++) {
        Complex acc = 0;
        for (size_t c = 0; c < op.dim(); c++) {
            acc += op.at(r, c) * v[c];
        }
        out[r] = acc;
    }
    return out;
}

Complex inner(const std::vector<Complex> &a, const std::vector<Complex> &b) {
    Complex acc = 0;
    for (size_t k = 0; k < a.size(); k++) {
        acc += std::conj(a[k]) * b[k];
    }
    return acc;
}

DenseOperator pauli_matrix(const SignedObservable &obs) {
    check_cap(obs.num_qubits());
    DenseOperator result = DenseOperator::identity(1);
    for (size_t j = 0; j < obs.num_qubits(); j++) {
        bool x = obs.x()[j];
        bool z = obs.z()[j];
        DenseOperator factor = site_factor(x, z);
        if (x && z) {
            factor = factor * kI;
        }
        result = result.kron(factor);
    }
    return obs.negative() ? result * Complex(-1) : result;
}

DenseOperator pauli_matrix(const PauliOperator &op) {
    check_cap(op.num_qubits());
    DenseOperator result = DenseOperator::identity(1);
    for (size_t j = 0; j < op.num_qubits(); j++) {
        result = result.kron(site_factor(op.x[j], op.z[j]));
    }
    const Complex phases[4] = {Complex(1, 0), Complex(0, 1), Complex(-1, 0), Complex(0, -1)};
    return result * phases[op.phase & 3];
}

DenseOperator blackbox_matrix(const BlackBoxConfig &cfg) {
    check_cap(cfg.size());
    DenseOperator result = DenseOperator::identity(1);
    for (const auto &f : cfg.functions()) {
        result = result.kron(site_factor(f.f0, f.f1));
    }
    return result;
}

DenseState state_from_axioms(const std::vector<SignedObservable> &axioms) {
    if (axioms.empty()) {
        throw std::invalid_argument("state_from_axioms needs at least one axiom");
    }
    size_t n = axioms.front().num_qubits();
    check_cap(n);
    size_t dim = size_t{1} << n;
    std::vector<DenseOperator> projectors;
    for (const auto &a : axioms) {
        projectors.push_back(projector(a, +1));
    }
    for (size_t b = 0; b < dim; b++) {
        std::vector<Complex> v(dim, Complex(0));
        v[b] = 1;
        for (const auto &proj : projectors) {
            v = apply_operator(proj, v);
        }
        if (inner(v, v).real() > 1e-6) {
            return DenseState{normalized(std::move(v))};
        }
    }
    throw std::invalid_argument("state_from_axioms: the axiom projector annihilates every basis vector");
}

OutcomeDistribution distribution(const DenseState &state, const std::vector<SignedObservable> &observables) {
    size_t k = observables.size();
    for (size_t a = 0; a < k; a++) {
        for (size_t b = a + 1; b < k; b++) {
            DenseOperator pa = pauli_matrix(observables[a]);
            DenseOperator pb = pauli_matrix(observables[b]);
            if ((pa * pb).distance(pb * pa) > kTolerance) {
                throw std::invalid_argument("oracle distribution: observables not co-measurable");
            }
        }
    }
    std::vector<std::pair<DenseOperator, DenseOperator>> projectors;
    for (const auto &obs : observables) {
        projectors.emplace_back(projector(obs, +1), projector(obs, -1));
    }
    OutcomeDistribution out;
    out.num_observables = k;
    for (const OutcomeKey &key : out.all_outcomes()) {
        std::vector<Complex> v = state.amplitudes;
        for (size_t i = 0; i < k; i++) {
            v = apply_operator(key[i] > 0 ? projectors[i].first : projectors[i].second, v);
        }
        double p = inner(v, v).real();
        if (p > kTolerance) {
            out.probabilities[key] = p;
        }
    }
    return out;
}

double expectation(const DenseState &state, const SignedObservable &obs) {
    return inner(state.amplitudes, apply_operator(pauli_matrix(obs), state.amplitudes)).real();
}

DenseState evolve(const DenseState &state, const DenseOperator &u) {
    return DenseState{apply_operator(u, state.amplitudes)};
}

}  // namespace paulilogic::oracle
