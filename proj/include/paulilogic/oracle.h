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

#ifndef PAULILOGIC_ORACLE_H
#define PAULILOGIC_ORACLE_H

#include <complex>
#include <vector>

#include "paulilogic/blackbox.h"
#include "paulilogic/pauli.h"
#include "paulilogic/stabilizer.h"

// Dense state-vector reference implementation. Everything here works on
// explicit 2^N amplitudes and 2^N x 2^N matrices, sharing nothing with the
// tableau code beyond the Pauli/config value types, so it can serve as an
// independent check of it.
namespace paulilogic::oracle {

using Complex = std::complex<double>;

constexpr size_t kDenseCap = 10;
constexpr double kTolerance = 1e-9;

/// Square matrix, row-major. Basis index bit (N-1-j) belongs to qubit j, so
/// qubit 1 is the leftmost (most significant) tensor factor.
class DenseOperator {
   public:
    DenseOperator() = default;
    explicit DenseOperator(size_t dim);
    static DenseOperator identity(size_t dim);

    size_t dim() const {
        return dim_;
    }
    Complex &at(size_t r, size_t c) {
        return data_[r * dim_ + c];
    }
    const Complex &at(size_t r, size_t c) const {
        return data_[r * dim_ + c];
    }

    DenseOperator operator*(const DenseOperator &other) const;
    DenseOperator operator*(Complex scalar) const;
    DenseOperator operator+(const DenseOperator &other) const;
    DenseOperator operator-(const DenseOperator &other) const;
    DenseOperator adjoint() const;
    DenseOperator kron(const DenseOperator &other) const;

    /// Largest entry-wise absolute difference.
    double distance(const DenseOperator &other) const;

   private:
    size_t dim_ = 0;
    std::vector<Complex> data_;
};

struct DenseState {
    std::vector<Complex> amplitudes;

    size_t num_qubits() const;
    double norm() const;
};

std::vector<Complex> apply_operator(const DenseOperator &op, const std::vector<Complex> &v);
Complex inner(const std::vector<Complex> &a, const std::vector<Complex> &b);

/// Kronecker product of i^{x_j z_j} X^{x_j} Z^{z_j}, times the sign.
/// Throws std::invalid_argument above kDenseCap qubits.
DenseOperator pauli_matrix(const SignedObservable &obs);
/// i^phase times the Kronecker product of X^{x_j} Z^{z_j}.
DenseOperator pauli_matrix(const PauliOperator &op);

/// (x)_j X^{f_j(0)} Z^{f_j(1)}.
DenseOperator blackbox_matrix(const BlackBoxConfig &cfg);

/// Normalized prod_p (1 + lambda_p Omega_p)/2 |b>, trying reference basis
/// vectors b = 0, 1, ... until one survives the projection. Throws
/// std::invalid_argument if none does (inconsistent or dependent axioms).
DenseState state_from_axioms(const std::vector<SignedObservable> &axioms);

/// Outcome probabilities of commuting observables:
/// p(s) = || prod_i (1 + s_i Theta_i)/2 |psi> ||^2. Entries below the
/// tolerance are dropped. Throws std::invalid_argument on anticommuting input.
OutcomeDistribution distribution(const DenseState &state, const std::vector<SignedObservable> &observables);

/// <psi| obs |psi>, real for Hermitian observables.
double expectation(const DenseState &state, const SignedObservable &obs);

/// U |psi>.
DenseState evolve(const DenseState &state, const DenseOperator &u);

}  // namespace paulilogic::oracle

#endif
