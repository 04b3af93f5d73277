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

#include <set>
#include <string>

#include "qcwb/circuit/unitary.hpp"
#include "qcwb/transpiler/transpile.hpp"

namespace qcwb::fixtures {

/// Permutation matrix sending virtual qubit v to physical qubit layout[v].
inline Matrix layout_permutation(const std::vector<int> &layout) {
    const size_t n = layout.size();
    Matrix p(size_t{1} << n);
    for (size_t x = 0; x < (size_t{1} << n); ++x) {
        size_t y = 0;
        for (size_t v = 0; v < n; ++v) {
            if ((x >> v) & 1) {
                y |= size_t{1} << layout[v];
            }
        }
        p(y, x) = 1.0;
    }
    return p;
}

inline Circuit without_measurements(const Circuit &c) {
    Circuit out = c;
    out.gates.clear();
    for (const auto &g : c.gates) {
        if (g.kind != GateKind::MEASURE) {
            out.gates.push_back(g);
        }
    }
    return out;
}

/// unitary(compiled) == P(final) unitary(logical) P(initial)^-1 up to global phase.
inline bool layout_equivalent(const Circuit &logical, const CompiledCircuit &compiled, double tol) {
    Circuit padded = without_measurements(logical);
    padded.n_qubits = compiled.circuit.n_qubits;
    const Matrix expected = layout_permutation(compiled.layout.final) * unitary_of(padded) *
                            layout_permutation(compiled.layout.initial).adjoint();
    return equal_up_to_global_phase(unitary_of(without_measurements(compiled.circuit)), expected, tol);
}

/// Empty string when every structural invariant of a compiled circuit holds,
/// otherwise a description of the first violation.
inline std::string compiled_violation(const Circuit &logical, const CompiledCircuit &c, const MachineProperties &m) {
    const BasisSet basis(m.basis_gates.begin(), m.basis_gates.end());
    std::map<int, const GateInstance *> by_id;
    for (const auto &g : c.circuit.gates) {
        by_id[g.id] = &g;
        if (g.kind != GateKind::MEASURE && g.kind != GateKind::BARRIER && !basis.count(std::string(gate_name(g.kind)))) {
            return "non-basis gate " + std::string(gate_name(g.kind));
        }
        if (g.qubits.size() == 2 && g.kind != GateKind::BARRIER && !m.has_edge(g.qubits[0], g.qubits[1])) {
            return "uncoupled pair in gate " + std::to_string(g.id);
        }
        if (!c.provenance.count(g.id)) {
            return "gate " + std::to_string(g.id) + " has no origin";
        }
    }
    if (c.provenance.size() != c.circuit.gates.size()) {
        return "provenance refers to missing gates";
    }
    std::set<int> covered;
    for (const auto &[id, o] : c.provenance) {
        if (o.kind == Origin::Kind::Logical) {
            covered.insert(o.logical_id);
        }
    }
    for (const auto &g : logical.gates) {
        if (!covered.count(g.id)) {
            return "logical gate " + std::to_string(g.id) + " has no compiled gate";
        }
    }
    std::map<int, size_t> layer_of;
    for (size_t i = 0; i < c.layers.size(); ++i) {
        std::set<int> used;
        for (int id : c.layers[i]) {
            if (!by_id.count(id) || layer_of.count(id)) {
                return "layer entry " + std::to_string(id) + " unknown or repeated";
            }
            layer_of[id] = i;
            for (int q : by_id[id]->qubits) {
                if (!used.insert(q).second) {
                    return "qubit " + std::to_string(q) + " used twice in layer " + std::to_string(i);
                }
            }
        }
    }
    std::vector<long> last(c.circuit.n_qubits, -1);
    for (const auto &g : c.circuit.gates) {
        if (g.kind == GateKind::BARRIER) {
            continue;
        }
        if (!layer_of.count(g.id)) {
            return "gate " + std::to_string(g.id) + " missing from layers";
        }
        for (int q : g.qubits) {
            if (static_cast<long>(layer_of[g.id]) <= last[q]) {
                return "per-qubit order broken at gate " + std::to_string(g.id);
            }
            last[q] = static_cast<long>(layer_of[g.id]);
        }
    }
    return "";
}

}  // namespace qcwb::fixtures
