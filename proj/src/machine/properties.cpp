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

#include "qcwb/machine/properties.hpp"

#include <regex>
#include <sstream>

namespace qcwb {

namespace {

const char *const kQubitFields[] = {"t1_us", "t2_us", "frequency_ghz", "readout_error"};
const char *const kGateFields[] = {"error", "duration_ns"};
const char *const kStatusFields[] = {"operational", "pending_jobs", "last_calibrated"};

template <size_t N>
bool one_of(const std::string &s, const char *const (&options)[N]) {
    for (const char *o : options) {
        if (s == o) {
            return true;
        }
    }
    return false;
}

[[noreturn]] void malformed(const std::string &text, const std::string &why) {
    throw Error("malformed_path", "malformed property path '" + text + "': " + why);
}

}  // namespace

PropertyPath parse_property_path(const std::string &text) {
    static const std::regex qubit_re(R"(^qubits\[(\d{1,9})\]\.([a-z0-9_]+)$)");
    static const std::regex gate_re(R"(^gates\[([a-z0-9_]+):(\d{1,9}(,\d{1,9})*)\]\.([a-z0-9_]+)$)");
    static const std::regex status_re(R"(^status\.([a-z0-9_]+)$)");
    PropertyPath p;
    std::smatch m;
    if (text == "name") {
        p.scope = PropertyPath::Scope::Name;
    } else if (text == "basis_gates") {
        p.scope = PropertyPath::Scope::BasisGates;
    } else if (text == "coupling_map") {
        p.scope = PropertyPath::Scope::CouplingMap;
    } else if (std::regex_match(text, m, status_re)) {
        p.scope = PropertyPath::Scope::Status;
        p.field = m[1].str();
        if (!one_of(p.field, kStatusFields)) {
            malformed(text, "unknown status field '" + p.field + "'");
        }
    } else if (std::regex_match(text, m, qubit_re)) {
        p.scope = PropertyPath::Scope::Qubit;
        p.qubit = std::stoi(m[1].str());
        p.field = m[2].str();
        if (!one_of(p.field, kQubitFields)) {
            malformed(text, "unknown qubit field '" + p.field + "'");
        }
    } else if (std::regex_match(text, m, gate_re)) {
        p.scope = PropertyPath::Scope::Gate;
        p.gate_kind = m[1].str();
        std::stringstream qs(m[2].str());
        std::string item;
        while (std::getline(qs, item, ',')) {
            p.gate_qubits.push_back(std::stoi(item));
        }
        p.field = m[4].str();
        if (!one_of(p.field, kGateFields)) {
            malformed(text, "unknown gate field '" + p.field + "'");
        }
    } else {
        malformed(text, "expected qubits[i].<field>, gates[<kind>:<q0>,...].<field>, status.<field>, "
                        "coupling_map, name or basis_gates");
    }
    return p;
}

std::string format_property_path(const PropertyPath &p) {
    switch (p.scope) {
        case PropertyPath::Scope::Name:
            return "name";
        case PropertyPath::Scope::BasisGates:
            return "basis_gates";
        case PropertyPath::Scope::CouplingMap:
            return "coupling_map";
        case PropertyPath::Scope::Status:
            return "status." + p.field;
        case PropertyPath::Scope::Qubit:
            return "qubits[" + std::to_string(p.qubit) + "]." + p.field;
        case PropertyPath::Scope::Gate: {
            std::string s = "gates[" + p.gate_kind + ":";
            for (size_t i = 0; i < p.gate_qubits.size(); ++i) {
                s += (i ? "," : "") + std::to_string(p.gate_qubits[i]);
            }
            return s + "]." + p.field;
        }
    }
    return "";
}

namespace {

SelectedProperty resolve(const MachineProperties &m, const std::string &text) {
    SelectedProperty out;
    out.path = text;
    PropertyPath p;
    try {
        p = parse_property_path(text);
    } catch (const Error &e) {
        out.error = e.what();
        return out;
    }
    switch (p.scope) {
        case PropertyPath::Scope::Name:
            out.value = m.name;
            break;
        case PropertyPath::Scope::BasisGates:
            out.value = m.basis_gates;
            break;
        case PropertyPath::Scope::CouplingMap: {
            json cm = json::array();
            for (auto [a, b] : m.coupling_map) {
                cm.push_back({a, b});
            }
            out.value = std::move(cm);
            break;
        }
        case PropertyPath::Scope::Status:
            if (p.field == "operational") {
                out.value = m.status.operational;
            } else if (p.field == "pending_jobs") {
                out.value = m.status.pending_jobs;
            } else {
                out.value = m.status.last_calibrated;
            }
            break;
        case PropertyPath::Scope::Qubit: {
            if (p.qubit >= static_cast<int>(m.qubits.size())) {
                out.error = "index out of range: qubit " + std::to_string(p.qubit) + " on a " +
                            std::to_string(m.n_qubits) + "-qubit machine";
                break;
            }
            const auto &q = m.qubits[p.qubit];
            if (p.field == "t1_us") {
                out.value = q.t1_us;
                out.unit = "µs";
            } else if (p.field == "t2_us") {
                out.value = q.t2_us;
                out.unit = "µs";
            } else if (p.field == "frequency_ghz") {
                out.value = q.frequency_ghz;
                out.unit = "GHz";
            } else {
                out.value = q.readout_error;
            }
            break;
        }
        case PropertyPath::Scope::Gate: {
            for (int q : p.gate_qubits) {
                if (q >= m.n_qubits) {
                    out.error = "index out of range: qubit " + std::to_string(q) + " on a " +
                                std::to_string(m.n_qubits) + "-qubit machine";
                    return out;
                }
            }
            const GateProperties *g = m.find_gate(p.gate_kind, p.gate_qubits);
            if (!g) {
                out.error = "no gate entry for " + format_property_path(p);
                break;
            }
            if (p.field == "error") {
                out.value = g->error;
            } else {
                out.value = g->duration_ns;
                out.unit = "ns";
            }
            break;
        }
    }
    return out;
}

std::string shell_quote(const std::string &s) {
    bool plain = !s.empty();
    for (char c : s) {
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.')) {
            plain = false;
        }
    }
    if (plain) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\' || c == '$' || c == '`') {
            out += '\\';
        }
        out += c;
    }
    return out + "\"";
}

std::string python_str(const std::string &s) {
    return json(s).dump();
}

std::string qiskit_expression(const PropertyPath &p) {
    const std::string q = std::to_string(p.qubit);
    switch (p.scope) {
        case PropertyPath::Scope::Name:
            return "backend.name";
        case PropertyPath::Scope::BasisGates:
            return "backend.configuration().basis_gates";
        case PropertyPath::Scope::CouplingMap:
            return "backend.configuration().coupling_map";
        case PropertyPath::Scope::Status:
            if (p.field == "last_calibrated") {
                return "props.last_update_date.isoformat()";
            }
            return "backend.status()." + p.field;
        case PropertyPath::Scope::Qubit:
            if (p.field == "t1_us") {
                return "props.t1(" + q + ") * 1e6";
            }
            if (p.field == "t2_us") {
                return "props.t2(" + q + ") * 1e6";
            }
            if (p.field == "frequency_ghz") {
                return "props.frequency(" + q + ") / 1e9";
            }
            return "props.readout_error(" + q + ")";
        case PropertyPath::Scope::Gate: {
            std::string qs = "[";
            for (size_t i = 0; i < p.gate_qubits.size(); ++i) {
                qs += (i ? ", " : "") + std::to_string(p.gate_qubits[i]);
            }
            qs += "]";
            if (p.field == "error") {
                return "props.gate_error(" + python_str(p.gate_kind) + ", " + qs + ")";
            }
            return "props.gate_length(" + python_str(p.gate_kind) + ", " + qs + ") * 1e9";
        }
    }
    return "None";
}

}  // namespace

PropertySelection select_properties(const MachineProperties &machine, const std::vector<std::string> &paths) {
    PropertySelection sel;
    sel.machine = machine.name;
    for (const auto &p : paths) {
        sel.entries.push_back(resolve(machine, p));
    }
    return sel;
}

json selection_to_json(const PropertySelection &s) {
    json entries = json::array();
    for (const auto &e : s.entries) {
        json j = {{"path", e.path}};
        if (e.value) {
            j["value"] = *e.value;
            j["unit"] = e.unit;
        } else {
            j["error"] = e.error.value_or("");
        }
        entries.push_back(std::move(j));
    }
    return {{"machine", s.machine}, {"entries", std::move(entries)}};
}

std::string emit_property_snippet(const PropertySelection &selection, SnippetDialect dialect) {
    std::vector<const SelectedProperty *> resolved;
    for (const auto &e : selection.entries) {
        if (e.value) {
            resolved.push_back(&e);
        }
    }
    if (resolved.empty()) {
        throw Error("empty_selection", "property snippet needs at least one resolved path");
    }
    std::ostringstream out;
    switch (dialect) {
        case SnippetDialect::WorkbenchCli:
            out << "qcwb machines select " << shell_quote(selection.machine);
            for (const auto *e : resolved) {
                out << " --path \"" << e->path << "\"";
            }
            out << "\n";
            break;
        case SnippetDialect::Qiskit:
            out << "# machine: " << selection.machine << "\n"
                << "from qiskit_ibm_runtime import QiskitRuntimeService\n\n"
                << "backend = QiskitRuntimeService().backend(" << python_str(selection.machine) << ")\n"
                << "props = backend.properties()\n"
                << "selected = {}\n";
            for (const auto *e : resolved) {
                out << "selected[" << python_str(e->path) << "] = " << qiskit_expression(parse_property_path(e->path))
                    << "\n";
            }
            break;
        case SnippetDialect::OpenQasm2:
            throw Error("invalid_dialect", "openqasm2 has no property snippet form");
    }
    return out.str();
}

}  // namespace qcwb
