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

#include "qcwb/circuit/document.hpp"

namespace qcwb {

namespace {

void schema_error(Diagnostics &out, const std::string &msg, std::optional<int> gate = std::nullopt) {
    out.push_back(make_error("schema_violation", "schema violation: " + msg, gate));
}

bool read_int_array(const json &value, std::vector<int> &dst) {
    if (!value.is_array()) {
        return false;
    }
    for (const auto &v : value) {
        if (!v.is_number_integer()) {
            return false;
        }
        dst.push_back(v.get<int>());
    }
    return true;
}

}  // namespace

BuildResult build_circuit(const json &doc) {
    BuildResult result;
    auto &diags = result.diagnostics;
    if (!doc.is_object()) {
        schema_error(diags, "circuit document must be a JSON object");
        return result;
    }
    Circuit c;
    if (!doc.contains("n_qubits") || !doc["n_qubits"].is_number_integer()) {
        schema_error(diags, "'n_qubits' must be an integer");
    } else {
        c.n_qubits = doc["n_qubits"].get<int>();
    }
    if (doc.contains("n_clbits")) {
        if (!doc["n_clbits"].is_number_integer()) {
            schema_error(diags, "'n_clbits' must be an integer");
        } else {
            c.n_clbits = doc["n_clbits"].get<int>();
        }
    }
    if (doc.contains("name")) {
        if (!doc["name"].is_string()) {
            schema_error(diags, "'name' must be a string");
        } else {
            c.name = doc["name"].get<std::string>();
        }
    }
    if (doc.contains("metadata")) {
        const auto &meta = doc["metadata"];
        if (!meta.is_object()) {
            schema_error(diags, "'metadata' must be an object");
        } else {
            for (auto it = meta.begin(); it != meta.end(); ++it) {
                if (!it.value().is_string()) {
                    schema_error(diags, "metadata value '" + it.key() + "' must be a string");
                } else {
                    c.metadata[it.key()] = it.value().get<std::string>();
                }
            }
        }
    }
    if (doc.contains("observables")) {
        const auto &obs = doc["observables"];
        if (!obs.is_array()) {
            schema_error(diags, "'observables' must be an array of strings");
        } else {
            for (const auto &o : obs) {
                if (!o.is_string()) {
                    schema_error(diags, "observable entries must be strings");
                } else {
                    c.observables.push_back(PauliObservable{o.get<std::string>(), 1.0});
                }
            }
        }
    }
    if (doc.contains("gates")) {
        const auto &gates = doc["gates"];
        if (!gates.is_array()) {
            schema_error(diags, "'gates' must be an array");
        } else {
            int id = 0;
            for (const auto &g : gates) {
                GateInstance inst;
                inst.id = id;
                if (!g.is_object()) {
                    schema_error(diags, "gate entries must be objects", id);
                    ++id;
                    continue;
                }
                std::optional<GateKind> kind;
                if (g.contains("kind") && g["kind"].is_string()) {
                    kind = parse_gate_kind(g["kind"].get<std::string>());
                    if (!kind) {
                        diags.push_back(make_error("unknown_gate", "unknown gate kind '" + g["kind"].get<std::string>() + "'", id));
                    }
                } else {
                    schema_error(diags, "gate 'kind' must be a string", id);
                }
                if (!g.contains("qubits") || !read_int_array(g["qubits"], inst.qubits)) {
                    schema_error(diags, "gate 'qubits' must be an array of integers", id);
                }
                if (g.contains("params")) {
                    if (!g["params"].is_array()) {
                        schema_error(diags, "gate 'params' must be an array of numbers", id);
                    } else {
                        for (const auto &p : g["params"]) {
                            if (!p.is_number()) {
                                schema_error(diags, "gate 'params' must be an array of numbers", id);
                                break;
                            }
                            inst.params.push_back(p.get<double>());
                        }
                    }
                }
                if (g.contains("clbits") && !read_int_array(g["clbits"], inst.clbits)) {
                    schema_error(diags, "gate 'clbits' must be an array of integers", id);
                }
                if (kind) {
                    inst.kind = *kind;
                    c.gates.push_back(std::move(inst));
                }
                ++id;
            }
        }
    }
    if (has_errors(diags)) {
        return result;
    }
    auto structural = validate_circuit(c);
    diags.insert(diags.end(), structural.begin(), structural.end());
    if (!has_errors(diags)) {
        result.circuit = std::move(c);
    }
    return result;
}

json circuit_to_json(const Circuit &circuit) {
    json doc;
    if (!circuit.name.empty()) {
        doc["name"] = circuit.name;
    }
    doc["n_qubits"] = circuit.n_qubits;
    doc["n_clbits"] = circuit.n_clbits;
    json gates = json::array();
    for (const auto &g : circuit.gates) {
        json entry;
        entry["kind"] = gate_name(g.kind);
        entry["qubits"] = g.qubits;
        if (!g.params.empty()) {
            entry["params"] = g.params;
        }
        if (!g.clbits.empty()) {
            entry["clbits"] = g.clbits;
        }
        gates.push_back(std::move(entry));
    }
    doc["gates"] = std::move(gates);
    if (!circuit.observables.empty()) {
        json obs = json::array();
        for (const auto &o : circuit.observables) {
            obs.push_back(o.label);
        }
        doc["observables"] = std::move(obs);
    }
    if (!circuit.metadata.empty()) {
        doc["metadata"] = circuit.metadata;
    }
    return doc;
}

json diagnostics_to_json(const Diagnostics &diags) {
    json out = json::array();
    for (const auto &d : diags) {
        json entry{{"severity", d.severity == Severity::Error ? "error" : "warning"},
                   {"code", d.code},
                   {"message", d.message}};
        if (d.gate_id) {
            entry["gate_id"] = *d.gate_id;
        } else {
            entry["gate_id"] = nullptr;
        }
        out.push_back(std::move(entry));
    }
    return out;
}

Circuit build_circuit_or_throw(const json &doc) {
    auto res = build_circuit(doc);
    if (!res.ok()) {
        for (const auto &d : res.diagnostics) {
            if (d.severity == Severity::Error) {
                throw Error(d.code, d.message);
            }
        }
        throw Error("schema_violation", "invalid circuit document");
    }
    return std::move(*res.circuit);
}

}  // namespace qcwb
