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

#include "qcwb/service/view_model.hpp"

#include <algorithm>

namespace qcwb {

json gate_geometry(const Circuit &circuit, const Layers &layers) {
    std::map<int, size_t> column;
    for (size_t i = 0; i < layers.size(); ++i) {
        for (int id : layers[i]) {
            column[id] = i;
        }
    }
    json out = json::array();
    size_t fence = 0;
    for (const auto &g : circuit.gates) {
        size_t col;
        if (g.kind == GateKind::BARRIER) {
            col = fence;
        } else {
            col = column.at(g.id);
            fence = std::max(fence, col + 1);
        }
        out.push_back({{"id", g.id}, {"column", col}, {"rows", g.qubits}});
    }
    return out;
}

json build_view_model(const Circuit &circuit, const MachineProperties &machine) {
    const CompiledCircuit cc = transpile(circuit, machine);
    const EspReport esp = compute_esp(cc, machine);

    std::map<int, std::vector<int>> derived;  // logical id -> compiled ids
    for (const auto &g : circuit.gates) {
        derived[g.id];
    }
    for (const auto &[id, origin] : cc.provenance) {
        if (origin.kind == Origin::Kind::Logical) {
            derived[origin.logical_id].push_back(id);
        }
    }

    json compiled_details = json::object();
    std::map<int, double> compiled_error;
    for (const auto &g : cc.circuit.gates) {
        const double err = gate_error(machine, g);
        compiled_error[g.id] = err;
        compiled_details[std::to_string(g.id)] = {{"kind", gate_name(g.kind)},
                                                  {"qubits", g.qubits},
                                                  {"params", g.params},
                                                  {"error", err},
                                                  {"origin", origin_to_json(cc.provenance.at(g.id))}};
    }
    json logical_details = json::object();
    json logical_to_compiled = json::object();
    for (const auto &g : circuit.gates) {
        double success = 1.0;
        for (int id : derived[g.id]) {
            success *= 1.0 - compiled_error[id];
        }
        logical_details[std::to_string(g.id)] = {{"kind", gate_name(g.kind)},
                                                 {"qubits", g.qubits},
                                                 {"params", g.params},
                                                 {"error", 1.0 - success},
                                                 {"origin", "logical"}};
        logical_to_compiled[std::to_string(g.id)] = derived[g.id];
    }

    std::map<int, const GateInstance *> by_id;
    for (const auto &g : cc.circuit.gates) {
        by_id[g.id] = &g;
    }
    json animation = json::array();
    for (size_t i = 0; i < cc.layers.size(); ++i) {
        json edges = json::array();
        for (int id : cc.layers[i]) {
            const auto *g = by_id.at(id);
            if (g->qubits.size() == 2) {
                edges.push_back(g->qubits);
            }
        }
        animation.push_back({{"layer", i},
                             {"active_gates", cc.layers[i]},
                             {"edges", std::move(edges)},
                             {"qubit_colors", esp.per_qubit_cumulative[i]}});
    }

    json coupling = json::array();
    for (auto [a, b] : machine.coupling_map) {
        coupling.push_back({a, b});
    }
    return {
        {"logical", {{"circuit", circuit_to_json(circuit)}, {"geometry", gate_geometry(circuit, layerize(circuit))}}},
        {"compiled", {{"circuit", compiled_to_json(cc)}, {"geometry", gate_geometry(cc.circuit, cc.layers)}}},
        {"provenance", provenance_to_json(cc.provenance)},
        {"logical_to_compiled", std::move(logical_to_compiled)},
        {"esp", esp_to_json(esp)},
        {"animation", std::move(animation)},
        {"details", {{"logical", std::move(logical_details)}, {"compiled", std::move(compiled_details)}}},
        {"machine", {{"name", machine.name}, {"n_qubits", machine.n_qubits}, {"coupling_map", std::move(coupling)}}},
    };
}

}  // namespace qcwb
