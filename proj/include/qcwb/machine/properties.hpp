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

#include <optional>
#include <string>
#include <vector>

#include "qcwb/machine/machine.hpp"
#include "qcwb/writer/snippet.hpp"

namespace qcwb {

/// Parsed form of a property selector such as `qubits[0].t1_us`,
/// `gates[cx:0,1].error`, `status.pending_jobs`, `coupling_map`, `name` or
/// `basis_gates`.
struct PropertyPath {
    enum class Scope { Name, BasisGates, CouplingMap, Status, Qubit, Gate };
    Scope scope = Scope::Name;
    int qubit = -1;                // Scope::Qubit
    std::string gate_kind;         // Scope::Gate
    std::vector<int> gate_qubits;  // Scope::Gate
    std::string field;             // Status, Qubit, Gate

    bool operator==(const PropertyPath &) const = default;
};

/// Throws Error("malformed_path") for text outside the selector grammar or
/// naming an unknown field.
PropertyPath parse_property_path(const std::string &text);
std::string format_property_path(const PropertyPath &p);

struct SelectedProperty {
    std::string path;
    std::optional<json> value;
    std::string unit;
    std::optional<std::string> error;  // set instead of value when unresolvable
};

struct PropertySelection {
    std::string machine;
    std::vector<SelectedProperty> entries;
};

/// Resolves each path independently, preserving order.
PropertySelection select_properties(const MachineProperties &machine, const std::vector<std::string> &paths);

json selection_to_json(const PropertySelection &s);

/// Source text that re-reads the resolved paths of `selection`. WorkbenchCli is
/// a single `qcwb machines select` command line; Qiskit is a template against a
/// backend of the same name. Throws Error for an empty selection or OpenQasm2.
std::string emit_property_snippet(const PropertySelection &selection, SnippetDialect dialect);

}  // namespace qcwb
