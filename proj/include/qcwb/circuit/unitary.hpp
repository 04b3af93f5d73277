// Copyright 2026 The qcwb Authors
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

#pragma once

#include <complex>
#include <span>
#include <vector>

#include "qcwb/circuit/circuit.hpp"

namespace qcwb {

using cplx = std::complex<double>;

/// Dense row-major complex square matrix.
class Matrix {
   public:
    Matrix() = default;
    explicit Matrix(size_t dim) : dim_(dim), data_(dim * dim) {
    }
    Matrix(size_t dim, std::initializer_list<cplx> values);

    static Matrix identity(size_t dim);

    size_t dim() const {
        return dim_;
    }
    cplx &operator()(size_t r, size_t c) {
        return data_[r * dim_ + c];
    }
    const cplx &operator()(size_t r, size_t c) const {
        return data_[r * dim_ + c];
    }
    std::span<const cplx> data() const {
        return data_;
    }

    Matrix operator*(const Matrix &rhs) const;
    Matrix adjoint() const;

    /// Largest absolute entry-wise difference.
    double max_abs_diff(const Matrix &other) const;

   private:
    size_t dim_ = 0;
    std::vector<cplx> data_;
};

using UnitaryMatrix = Matrix;

/// Local matrix of a unitary gate. Local basis index bit j corresponds to the
/// gate's j-th qubit operand; `n_operands` matters only for MCX.
Matrix gate_matrix(GateKind kind, std::span<const double> params, size_t n_operands);

/// Convenience overload for a concrete gate instance.
Matrix gate_matrix(const GateInstance &gate);

/// Full 2^n x 2^n unitary of a circuit: product of gate matrices in circuit
/// order, BARRIER ignored. Throws for MEASURE or n_qubits > 10.
UnitaryMatrix unitary_of(const Circuit &circuit);

bool is_unitary(const Matrix &m, double tol = 1e-8);

/// True when a = e^{i phi} b for some phi, within `tol` entry-wise.
bool equal_up_to_global_phase(const Matrix &a, const Matrix &b, double tol);

inline constexpr int kMaxUnitaryQubits = 10;

}  // namespace qcwb
