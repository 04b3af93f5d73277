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

#include "qcwb/transpiler/decompose.hpp"

#include <cmath>
#include <numbers>

namespace qcwb {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kAngleTol = 1e-10;

double normalize(double a) {
    a = std::remainder(a, 2 * kPi);
    return a <= -kPi ? a + 2 * kPi : a;
}

bool near(double a, double b) {
    return std::abs(normalize(a - b)) < kAngleTol;
}

void push(Circuit &out, GateKind kind, std::vector<int> qubits, std::vector<double> params = {},
          std::vector<int> clbits = {}) {
    out.gates.push_back({static_cast<int>(out.gates.size()), kind, std::move(qubits), std::move(params),
                         std::move(clbits)});
}

Matrix rz(double a) {
    double p[] = {a};
    return gate_matrix(GateKind::RZ, p, 1);
}

Matrix ry(double a) {
    double p[] = {a};
    return gate_matrix(GateKind::RY, p, 1);
}

Matrix fixed(GateKind k) {
    return gate_matrix(k, {}, 1);
}

void one(Circuit &out, GateKind k, int q) {
    append_1q_unitary(out, fixed(k), q);
}

void cx(Circuit &out, int c, int t) {
    push(out, GateKind::CX, {c, t});
}

void toffoli(Circuit &out, int c0, int c1, int t) {
    one(out, GateKind::H, t);
    cx(out, c1, t);
    one(out, GateKind::TDG, t);
    cx(out, c0, t);
    one(out, GateKind::T, t);
    cx(out, c1, t);
    one(out, GateKind::TDG, t);
    cx(out, c0, t);
    one(out, GateKind::T, c1);
    one(out, GateKind::T, t);
    one(out, GateKind::H, t);
    cx(out, c0, c1);
    one(out, GateKind::T, c0);
    one(out, GateKind::TDG, c1);
    cx(out, c0, c1);
}

void controlled_u(Circuit &out, const std::vector<int> &controls, int t, const Matrix &w);

void mcx(Circuit &out, const std::vector<int> &controls, int t) {
    if (controls.size() == 1) {
        cx(out, controls[0], t);
    } else if (controls.size() == 2) {
        toffoli(out, controls[0], controls[1], t);
    } else {
        controlled_u(out, controls, t, fixed(GateKind::X));
    }
}

void controlled_u(Circuit &out, const std::vector<int> &controls, int t, const Matrix &w) {
    if (controls.size() == 1) {
        const int c = controls[0];
        ZyzAngles a = zyz_angles(w);
        append_1q_unitary(out, rz((a.lambda - a.phi) / 2), t);
        cx(out, c, t);
        append_1q_unitary(out, ry(-a.theta / 2) * rz(-(a.phi + a.lambda) / 2), t);
        cx(out, c, t);
        append_1q_unitary(out, rz(a.phi) * ry(a.theta / 2), t);
        if (!near(a.alpha, 0)) {
            push(out, GateKind::RZ, {c}, {normalize(a.alpha)});
        }
        return;
    }
    const Matrix v = sqrt_2x2(w);
    const int last = controls.back();
    const std::vector<int> rest(controls.begin(), controls.end() - 1);
    controlled_u(out, {last}, t, v);
    mcx(out, rest, last);
    controlled_u(out, {last}, t, v.adjoint());
    mcx(out, rest, last);
    controlled_u(out, rest, t, v);
}

}  // namespace

const BasisSet &default_basis() {
    static const BasisSet basis = {"rz", "sx", "x", "cx"};
    return basis;
}

ZyzAngles zyz_angles(const Matrix &u) {
    const cplx det = u(0, 0) * u(1, 1) - u(0, 1) * u(1, 0);
    const cplx s = std::sqrt(det);
    const cplx v00 = u(0, 0) / s, v10 = u(1, 0) / s, v11 = u(1, 1) / s;
    ZyzAngles a;
    a.theta = 2 * std::atan2(std::abs(v10), std::abs(v00));
    const double sum = std::abs(v11) > 1e-12 ? 2 * std::arg(v11) : 0.0;
    const double diff = std::abs(v10) > 1e-12 ? 2 * std::arg(v10) : 0.0;
    a.phi = (sum + diff) / 2;
    a.lambda = (sum - diff) / 2;
    // Recover the exact phase against the reconstructed product.
    const Matrix m = rz(a.phi) * ry(a.theta) * rz(a.lambda);
    size_t br = 0, bc = 0;
    for (size_t r = 0; r < 2; ++r) {
        for (size_t c = 0; c < 2; ++c) {
            if (std::abs(m(r, c)) > std::abs(m(br, bc))) {
                br = r;
                bc = c;
            }
        }
    }
    a.alpha = std::arg(u(br, bc) / m(br, bc));
    return a;
}

void append_1q_unitary(Circuit &out, const Matrix &u, int q) {
    const ZyzAngles a = zyz_angles(u);
    const size_t start = out.gates.size();
    auto add_rz = [&](double angle) {
        if (!near(angle, 0)) {
            push(out, GateKind::RZ, {q}, {normalize(angle)});
        }
    };
    if (near(a.theta, 0)) {
        add_rz(a.phi + a.lambda);
    } else if (near(a.theta, kPi / 2)) {
        add_rz(a.lambda - kPi / 2);
        push(out, GateKind::SX, {q});
        add_rz(a.phi + kPi / 2);
    } else if (near(a.theta, kPi)) {
        add_rz(a.lambda - kPi / 2);
        push(out, GateKind::X, {q});
        add_rz(a.phi + kPi / 2);
    } else {
        add_rz(a.lambda);
        push(out, GateKind::SX, {q});
        add_rz(a.theta + kPi);
        push(out, GateKind::SX, {q});
        add_rz(a.phi + kPi);
    }
    if (out.gates.size() == start) {
        push(out, GateKind::RZ, {q}, {0.0});
    }
}

Matrix sqrt_2x2(const Matrix &u) {
    cplx s = std::sqrt(u(0, 0) * u(1, 1) - u(0, 1) * u(1, 0));
    cplx t = std::sqrt(u(0, 0) + u(1, 1) + 2.0 * s);
    if (std::abs(t) < 1e-6) {
        s = -s;
        t = std::sqrt(u(0, 0) + u(1, 1) + 2.0 * s);
    }
    Matrix r(2);
    for (size_t i = 0; i < 2; ++i) {
        for (size_t j = 0; j < 2; ++j) {
            r(i, j) = (u(i, j) + (i == j ? s : cplx(0))) / t;
        }
    }
    return r;
}

Decomposition decompose_to_basis(const Circuit &circuit, const BasisSet &basis) {
    for (const char *required : {"rz", "sx", "x", "cx"}) {
        if (!basis.count(required)) {
            throw Error("unsupported_basis", std::string("basis must contain '") + required + "'");
        }
    }
    Decomposition res;
    Circuit &out = res.circuit;
    out.name = circuit.name;
    out.n_qubits = circuit.n_qubits;
    out.n_clbits = circuit.n_clbits;
    for (const auto &g : circuit.gates) {
        const size_t start = out.gates.size();
        const auto &q = g.qubits;
        const bool native = basis.count(std::string(gate_name(g.kind))) && q.size() <= 2 &&
                            g.kind != GateKind::MCX && g.kind != GateKind::CCX;
        if (native || g.kind == GateKind::MEASURE || g.kind == GateKind::BARRIER) {
            push(out, g.kind, q, g.params, g.clbits);
        } else {
            switch (g.kind) {
                case GateKind::CX:
                    cx(out, q[0], q[1]);
                    break;
                case GateKind::CZ:
                    one(out, GateKind::H, q[1]);
                    cx(out, q[0], q[1]);
                    one(out, GateKind::H, q[1]);
                    break;
                case GateKind::SWAP:
                    cx(out, q[0], q[1]);
                    cx(out, q[1], q[0]);
                    cx(out, q[0], q[1]);
                    break;
                case GateKind::CCX:
                    toffoli(out, q[0], q[1], q[2]);
                    break;
                case GateKind::MCX:
                    mcx(out, std::vector<int>(q.begin(), q.end() - 1), q.back());
                    break;
                default:
                    append_1q_unitary(out, gate_matrix(g), q[0]);
                    break;
            }
        }
        for (size_t i = start; i < out.gates.size(); ++i) {
            res.provenance[static_cast<int>(i)] = Origin::logical(g.id);
        }
    }
    return res;
}

}  // namespace qcwb
