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

#include "qcwb/transpiler/transpile.hpp"

#include <algorithm>

namespace qcwb {

Layers layerize(const Circuit &circuit) {
    Layers layers;
    std::vector<size_t> next_free(circuit.n_qubits, 0);
    size_t floor = 0;
    for (const auto &g : circuit.gates) {
        if (g.kind == GateKind::BARRIER) {
            floor = layers.size();
            continue;
        }
        size_t at = floor;
        for (int q : g.qubits) {
            at = std::max(at, next_free[q]);
        }
        if (at >= layers.size()) {
            layers.resize(at + 1);
        }
        layers[at].push_back(g.id);
        for (int q : g.qubits) {
            next_free[q] = at + 1;
        }
    }
    return layers;
}

CompiledCircuit transpile(const Circuit &circuit, const MachineProperties &machine) {
    for (const auto &d : validate_circuit(circuit)) {
        if (d.severity == Severity::Error) {
            throw Error(d.code, d.message);
        }
    }
    BasisSet basis(machine.basis_gates.begin(), machine.basis_gates.end());
    for (const char *k : {"rz", "sx", "x", "cx"}) {
        if (!basis.count(k)) {
            throw Error("unsupported_basis", "machine '" + machine.name + "' lacks basis gate '" + k + "'");
        }
    }
    Decomposition first = decompose_to_basis(circuit, basis);
    Routed routed = layout_and_route(first.circuit, machine);
    Decomposition second = decompose_to_basis(routed.circuit, basis);

    CompiledCircuit out;
    out.circuit = std::move(second.circuit);
    out.layout = std::move(routed.layout);
    out.provenance = compose(compose(first.provenance, routed.provenance), second.provenance);
    out.layers = layerize(out.circuit);
    out.machine = machine.name;
    return out;
}

json compiled_to_json(const CompiledCircuit &c) {
    json doc = circuit_to_json(c.circuit);
    doc["layout"] = {{"initial", c.layout.initial}, {"final", c.layout.final}};
    doc["layers"] = c.layers;
    doc["provenance"] = provenance_to_json(c.provenance);
    doc["machine"] = c.machine;
    return doc;
}

}  // namespace qcwb
