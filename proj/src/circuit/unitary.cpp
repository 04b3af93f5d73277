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

#include "qcwb/circuit/unitary.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qcwb {

Matrix::Matrix(size_t dim, std::initializer_list<cplx> values) : dim_(dim), data_(values) {
    data_.resize(dim * dim);
}

Matrix Matrix::identity(size_t dim) {
    Matrix m(dim);
    for (size_t i = 0; i < dim; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

Matrix Matrix::operator*(const Matrix &rhs) const {
    Matrix out(dim_);
    for (size_t r = 0; r < dim_; ++r) {
        for (size_t k = 0; k < dim_; ++k) {
            const cplx a = (*this)(r, k);
            if (a == cplx{}) {
                continue;
            }
            for (size_t c = 0; c < dim_; ++c) {
                out(r, c) += a * rhs(k, c);
            }
        }
    }
    return out;
}

Matrix Matrix::adjoint() const {
    Matrix out(dim_);
    for (size_t r = 0; r < dim_; ++r) {
        for (size_t c = 0; c < dim_; ++c) {
            out(c, r) = std::conj((*this)(r, c));
        }
    }
    return out;
}

double Matrix::max_abs_diff(const Matrix &other) const {
    double worst = 0.0;
    for (size_t i = 0; i < data_.size(); ++i) {
        worst = std::max(worst, std::abs(data_[i] - other.data_[i]));
    }
    return worst;
}

Matrix gate_matrix(GateKind kind, std::span<const double> params, size_t n_operands) {
    using std::numbers::pi;
    const cplx i1{0.0, 1.0};
    const double r2 = 1.0 / std::sqrt(2.0);
    auto angle = [&]() {
        if (params.size() != 1) {
            throw Error("arity_mismatch", "arity mismatch: rotation gate needs one angle");
        }
        return params[0];
    };
    switch (kind) {
        case GateKind::H:
            return Matrix(2, {r2, r2, r2, -r2});
        case GateKind::X:
            return Matrix(2, {0, 1, 1, 0});
        case GateKind::Y:
            return Matrix(2, {0, -i1, i1, 0});
        case GateKind::Z:
            return Matrix(2, {1, 0, 0, -1});
        case GateKind::S:
            return Matrix(2, {1, 0, 0, i1});
        case GateKind::SDG:
            return Matrix(2, {1, 0, 0, -i1});
        case GateKind::T:
            return Matrix(2, {1, 0, 0, std::polar(1.0, pi / 4)});
        case GateKind::TDG:
            return Matrix(2, {1, 0, 0, std::polar(1.0, -pi / 4)});
        case GateKind::RX: {
            const double t = angle();
            const double c = std::cos(t / 2), s = std::sin(t / 2);
            return Matrix(2, {c, -i1 * s, -i1 * s, c});
        }
        case GateKind::RY: {
            const double t = angle();
            const double c = std::cos(t / 2), s = std::sin(t / 2);
            return Matrix(2, {c, -s, s, c});
        }
        case GateKind::RZ: {
            const double t = angle();
            return Matrix(2, {std::polar(1.0, -t / 2), 0, 0, std::polar(1.0, t / 2)});
        }
        case GateKind::SX:
            return Matrix(2, {cplx(0.5, 0.5), cplx(0.5, -0.5), cplx(0.5, -0.5), cplx(0.5, 0.5)});
        case GateKind::CZ: {
            Matrix m = Matrix::identity(4);
            m(3, 3) = -1.0;
            return m;
        }
        case GateKind::SWAP: {
            Matrix m(4);
            m(0, 0) = m(3, 3) = 1.0;
            m(1, 2) = m(2, 1) = 1.0;
            return m;
        }
        case GateKind::CX:
        case GateKind::CCX:
        case GateKind::MCX: {
            // controls are operands 0..k-2, target is the last operand
            const size_t k = kind == GateKind::CX ? 2 : kind == GateKind::CCX ? 3 : n_operands;
            const size_t dim = size_t{1} << k;
            const size_t controls = (size_t{1} << (k - 1)) - 1;
            const size_t target = size_t{1} << (k - 1);
            Matrix m(dim);
            for (size_t col = 0; col < dim; ++col) {
                const size_t row = (col & controls) == controls ? col ^ target : col;
                m(row, col) = 1.0;
            }
            return m;
        }
        case GateKind::BARRIER:
        case GateKind::MEASURE:
            break;
    }
    throw Error("non_unitary", "gate '" + std::string(gate_name(kind)) + "' has no matrix");
}

Matrix gate_matrix(const GateInstance &gate) {
    return gate_matrix(gate.kind, gate.params, gate.qubits.size());
}

namespace {

// Left-multiplies `u` by the embedding of `local` acting on `qubits`.
void apply_on_rows(Matrix &u, const Matrix &local, std::span<const int> qubits) {
    const size_t dim = u.dim();
    const size_t k = qubits.size();
    const size_t ldim = size_t{1} << k;
    size_t mask = 0;
    for (int q : qubits) {
        mask |= size_t{1} << q;
    }
    std::vector<size_t> offsets(ldim);
    for (size_t l = 0; l < ldim; ++l) {
        size_t off = 0;
        for (size_t j = 0; j < k; ++j) {
            if ((l >> j) & 1) {
                off |= size_t{1} << qubits[j];
            }
        }
        offsets[l] = off;
    }
    std::vector<cplx> in(ldim);
    for (size_t col = 0; col < dim; ++col) {
        for (size_t base = 0; base < dim; ++base) {
            if (base & mask) {
                continue;
            }
            for (size_t l = 0; l < ldim; ++l) {
                in[l] = u(base | offsets[l], col);
            }
            for (size_t r = 0; r < ldim; ++r) {
                cplx acc{};
                for (size_t c = 0; c < ldim; ++c) {
                    acc += local(r, c) * in[c];
                }
                u(base | offsets[r], col) = acc;
            }
        }
    }
}

}  // namespace

UnitaryMatrix unitary_of(const Circuit &circuit) {
    if (circuit.n_qubits > kMaxUnitaryQubits) {
        throw Error("too_many_qubits", "unitary_of supports at most " + std::to_string(kMaxUnitaryQubits) + " qubits");
    }
    Matrix u = Matrix::identity(size_t{1} << circuit.n_qubits);
    for (const auto &g : circuit.gates) {
        if (g.kind == GateKind::BARRIER) {
            continue;
        }
        if (g.kind == GateKind::MEASURE) {
            throw Error("measurement_present", "unitary_of: circuit contains a measurement");
        }
        apply_on_rows(u, gate_matrix(g), g.qubits);
    }
    return u;
}

bool is_unitary(const Matrix &m, double tol) {
    return (m * m.adjoint()).max_abs_diff(Matrix::identity(m.dim())) <= tol;
}

bool equal_up_to_global_phase(const Matrix &a, const Matrix &b, double tol) {
    if (a.dim() != b.dim()) {
        return false;
    }
    // Align phases on the largest entry of b.
    size_t best = 0;
    double best_abs = -1.0;
    const auto bd = b.data();
    const auto ad = a.data();
    for (size_t i = 0; i < bd.size(); ++i) {
        if (std::abs(bd[i]) > best_abs) {
            best_abs = std::abs(bd[i]);
            best = i;
        }
    }
    if (best_abs <= 0.0 || std::abs(ad[best]) <= 0.0) {
        return a.max_abs_diff(b) <= tol;
    }
    const cplx ratio = ad[best] / bd[best];
    const cplx phase = ratio / std::abs(ratio);
    double worst = 0.0;
    for (size_t i = 0; i < bd.size(); ++i) {
        worst = std::max(worst, std::abs(ad[i] - phase * bd[i]));
    }
    return worst <= tol;
}

}  // namespace qcwb
