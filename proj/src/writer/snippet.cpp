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

#include "qcwb/writer/snippet.hpp"

#include <sstream>

#include "qcwb/circuit/qasm.hpp"

namespace qcwb {

std::optional<SnippetDialect> parse_dialect(std::string_view name) {
    if (name == "openqasm2") {
        return SnippetDialect::OpenQasm2;
    }
    if (name == "qiskit") {
        return SnippetDialect::Qiskit;
    }
    if (name == "workbench-cli") {
        return SnippetDialect::WorkbenchCli;
    }
    return std::nullopt;
}

std::string_view dialect_name(SnippetDialect d) {
    switch (d) {
        case SnippetDialect::OpenQasm2:
            return "openqasm2";
        case SnippetDialect::Qiskit:
            return "qiskit";
        case SnippetDialect::WorkbenchCli:
            return "workbench-cli";
    }
    return "?";
}

namespace {

std::string qubit_list(const std::vector<int> &qs) {
    std::string out;
    for (size_t i = 0; i < qs.size(); ++i) {
        out += (i ? ", " : "") + std::to_string(qs[i]);
    }
    return out;
}

std::string qiskit_snippet(const Circuit &c) {
    bool uses_angles = false;
    for (const auto &g : c.gates) {
        uses_angles |= !g.params.empty();
    }
    std::ostringstream out;
    if (!c.name.empty()) {
        out << "# circuit: " << c.name << "\n";
    }
    if (uses_angles) {
        out << "from math import pi\n\n";
    }
    out << "from qiskit import QuantumCircuit\n";
    if (!c.observables.empty()) {
        out << "from qiskit.quantum_info import SparsePauliOp\n";
    }
    out << "\n";
    out << "qc = QuantumCircuit(" << c.n_qubits;
    if (c.n_clbits > 0) {
        out << ", " << c.n_clbits;
    }
    out << ")\n";
    for (const auto &g : c.gates) {
        switch (g.kind) {
            case GateKind::MEASURE:
                out << "qc.measure(" << g.qubits[0] << ", " << g.clbits[0] << ")\n";
                break;
            case GateKind::MCX: {
                std::vector<int> controls(g.qubits.begin(), g.qubits.end() - 1);
                out << "qc.mcx([" << qubit_list(controls) << "], " << g.qubits.back() << ")\n";
                break;
            }
            default: {
                out << "qc." << gate_name(g.kind) << "(";
                for (double p : g.params) {
                    out << format_angle(p) << ", ";
                }
                out << qubit_list(g.qubits) << ")\n";
            }
        }
    }
    if (!c.observables.empty()) {
        out << "\nobservables = [\n";
        for (const auto &o : c.observables) {
            char coeff[64];
            std::snprintf(coeff, sizeof(coeff), "%.17g", o.coefficient);
            out << "    SparsePauliOp(\"" << o.label << "\", coeffs=[" << coeff << "]),\n";
        }
        out << "]\n";
    }
    return out.str();
}

}  // namespace

std::string emit_snippet(const Circuit &circuit, SnippetDialect dialect) {
    switch (dialect) {
        case SnippetDialect::OpenQasm2:
            return to_openqasm(circuit);
        case SnippetDialect::Qiskit:
            return qiskit_snippet(circuit);
        case SnippetDialect::WorkbenchCli:
            break;
    }
    throw Error("invalid_dialect", "dialect 'workbench-cli' does not apply to circuits");
}

}  // namespace qcwb
