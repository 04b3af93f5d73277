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

#include "qcwb/circuit/circuit.hpp"

#include <cmath>
#include <set>
#include <sstream>

namespace qcwb {

namespace {

std::string describe(GateKind kind) {
    return std::string(gate_name(kind));
}

}  // namespace

Diagnostics check_gate(const Circuit &circuit, GateKind kind, std::span<const int> qubits,
                       std::span<const double> params, std::span<const int> clbits) {
    Diagnostics out;
    const auto arity = qubit_arity(kind);
    if (!arity.accepts(qubits.size())) {
        std::ostringstream msg;
        msg << "arity mismatch: " << describe(kind) << " expects ";
        if (arity.max_qubits < 0) {
            msg << "at least " << arity.min_qubits;
        } else {
            msg << arity.min_qubits;
        }
        msg << " qubit(s), got " << qubits.size();
        out.push_back(make_error("arity_mismatch", msg.str()));
    }
    if (static_cast<int>(params.size()) != param_arity(kind)) {
        std::ostringstream msg;
        msg << "arity mismatch: " << describe(kind) << " expects " << param_arity(kind) << " angle parameter(s), got "
            << params.size();
        out.push_back(make_error("arity_mismatch", msg.str()));
    }
    for (double p : params) {
        if (!std::isfinite(p)) {
            out.push_back(make_error("invalid_parameter", "gate parameter is not finite"));
        }
    }
    std::set<int> seen;
    for (int q : qubits) {
        if (q < 0 || q >= circuit.n_qubits) {
            std::ostringstream msg;
            msg << "index out of range: the number of qubits exceeded (qubit " << q << " in a " << circuit.n_qubits
                << "-qubit register)";
            out.push_back(make_error("index_out_of_range", msg.str()));
        } else if (!seen.insert(q).second) {
            out.push_back(make_error("duplicate_qubit", "duplicate qubit in gate (qubit " + std::to_string(q) + ")"));
        }
    }
    if (kind == GateKind::MEASURE) {
        if (clbits.size() != 1) {
            out.push_back(make_error("arity_mismatch", "arity mismatch: measure expects exactly 1 clbit, got " +
                                                           std::to_string(clbits.size())));
        }
        for (int c : clbits) {
            if (c < 0 || c >= circuit.n_clbits) {
                std::ostringstream msg;
                msg << "clbit out of range (clbit " << c << " with " << circuit.n_clbits << " classical bits)";
                out.push_back(make_error("clbit_out_of_range", msg.str()));
            }
        }
    } else if (!clbits.empty()) {
        out.push_back(make_error("arity_mismatch", "arity mismatch: only measure takes classical bits"));
    }
    return out;
}

int append_gate(Circuit &circuit, GateKind kind, std::vector<int> qubits, std::vector<double> params,
                std::vector<int> clbits) {
    auto diags = check_gate(circuit, kind, qubits, params, clbits);
    if (has_errors(diags)) {
        throw Error(diags.front().code, diags.front().message);
    }
    if (kind == GateKind::MEASURE) {
        for (const auto &g : circuit.gates) {
            if (g.kind == GateKind::MEASURE && g.qubits == qubits && g.clbits == clbits) {
                throw Error("duplicate_measurement", "duplicate measurement of qubit " + std::to_string(qubits[0]) +
                                                         " into clbit " + std::to_string(clbits[0]));
            }
        }
    }
    const int id = circuit.next_id();
    circuit.gates.push_back(GateInstance{id, kind, std::move(qubits), std::move(params), std::move(clbits)});
    return id;
}

Diagnostics check_observable(const PauliObservable &obs, int n_qubits) {
    Diagnostics out;
    if (static_cast<int>(obs.label.size()) != n_qubits) {
        std::ostringstream msg;
        msg << "observable length mismatch: '" << obs.label << "' has " << obs.label.size() << " character(s) for "
            << n_qubits << " qubit(s)";
        out.push_back(make_error("observable_length_mismatch", msg.str()));
    }
    for (char c : obs.label) {
        if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z') {
            out.push_back(make_error("invalid_pauli", std::string("invalid Pauli character '") + c + "'"));
            break;
        }
    }
    if (!std::isfinite(obs.coefficient)) {
        out.push_back(make_error("invalid_parameter", "observable coefficient is not finite"));
    }
    return out;
}

Diagnostics validate_circuit(const Circuit &circuit) {
    Diagnostics out;
    if (circuit.n_qubits < 1) {
        out.push_back(make_error("empty_register", "register must contain at least one qubit"));
    }
    if (circuit.n_clbits < 0) {
        out.push_back(make_error("clbit_out_of_range", "negative classical register size"));
    }
    std::set<std::pair<int, int>> measured_pairs;
    std::vector<bool> measured(std::max(circuit.n_qubits, 0), false);
    int prev_id = -1;
    bool warned_order = false;
    for (const auto &g : circuit.gates) {
        if (g.id <= prev_id) {
            out.push_back(make_error("id_order", "gate ids must be strictly increasing", g.id));
        }
        prev_id = g.id;
        for (auto d : check_gate(circuit, g.kind, g.qubits, g.params, g.clbits)) {
            d.gate_id = g.id;
            out.push_back(std::move(d));
        }
        if (g.kind == GateKind::MEASURE && g.qubits.size() == 1 && g.clbits.size() == 1) {
            if (!measured_pairs.insert({g.qubits[0], g.clbits[0]}).second) {
                out.push_back(make_error("duplicate_measurement",
                                         "duplicate measurement of qubit " + std::to_string(g.qubits[0]) +
                                             " into clbit " + std::to_string(g.clbits[0]),
                                         g.id));
            }
        }
        for (int q : g.qubits) {
            if (q < 0 || q >= circuit.n_qubits) {
                continue;
            }
            if (g.kind == GateKind::MEASURE) {
                measured[q] = true;
            } else if (measured[q] && g.kind != GateKind::BARRIER && !warned_order) {
                out.push_back(make_warning("gate_after_measurement",
                                           "gate acts on qubit " + std::to_string(q) +
                                               " after it was measured; measurements are treated as terminal",
                                           g.id));
                warned_order = true;
            }
        }
    }
    for (const auto &obs : circuit.observables) {
        for (auto &d : check_observable(obs, circuit.n_qubits)) {
            out.push_back(std::move(d));
        }
    }
    return out;
}

void renumber(Circuit &circuit) {
    int id = 0;
    for (auto &g : circuit.gates) {
        g.id = id++;
    }
}

}  // namespace qcwb
