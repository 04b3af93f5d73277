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

#include "qcwb/transpiler/esp.hpp"

namespace qcwb {

double gate_error(const MachineProperties &machine, const GateInstance &gate) {
    if (gate.kind == GateKind::BARRIER) {
        return 0.0;
    }
    if (gate.kind == GateKind::MEASURE) {
        const int q = gate.qubits.at(0);
        if (q < 0 || q >= static_cast<int>(machine.qubits.size())) {
            throw Error("missing_error_entry", "no readout error for qubit " + std::to_string(q));
        }
        return machine.qubits[q].readout_error;
    }
    const GateProperties *entry = machine.find_gate(gate_name(gate.kind), gate.qubits);
    if (!entry) {
        std::string where;
        for (size_t i = 0; i < gate.qubits.size(); ++i) {
            where += (i ? "," : "") + std::to_string(gate.qubits[i]);
        }
        throw Error("missing_error_entry", "machine '" + machine.name + "' has no error entry for " +
                                               std::string(gate_name(gate.kind)) + " on (" + where + ")");
    }
    return entry->error;
}

EspReport compute_esp(const CompiledCircuit &compiled, const MachineProperties &machine) {
    const Circuit &c = compiled.circuit;
    std::map<int, const GateInstance *> by_id;
    for (const auto &g : c.gates) {
        by_id[g.id] = &g;
    }
    EspReport r;
    std::vector<double> per_qubit(c.n_qubits, 1.0);
    double running = 1.0;
    for (const auto &layer : compiled.layers) {
        double lw = 1.0;
        for (int id : layer) {
            auto it = by_id.find(id);
            if (it == by_id.end()) {
                throw Error("unknown_gate", "layer references unknown gate id " + std::to_string(id));
            }
            const double success = 1.0 - gate_error(machine, *it->second);
            lw *= success;
            for (int q : it->second->qubits) {
                per_qubit.at(q) *= success;
            }
        }
        running *= lw;
        r.layerwise.push_back(lw);
        r.cumulative.push_back(running);
        r.per_qubit_cumulative.push_back(per_qubit);
    }
    return r;
}

json esp_to_json(const EspReport &r) {
    return {{"layerwise", r.layerwise}, {"cumulative", r.cumulative}, {"per_qubit_cumulative", r.per_qubit_cumulative}};
}

}  // namespace qcwb
