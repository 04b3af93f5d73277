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
#include <utility>
#include <vector>

#include "qcwb/circuit/document.hpp"

namespace qcwb {

struct MachineStatus {
    bool operational = true;
    int pending_jobs = 0;
    std::string last_calibrated;  // ISO-8601

    bool operator==(const MachineStatus &) const = default;
};

struct QubitProperties {
    double t1_us = 100.0;
    double t2_us = 100.0;
    double frequency_ghz = 5.0;
    double readout_error = 0.0;

    bool operator==(const QubitProperties &) const = default;
};

struct GateProperties {
    std::string kind;
    std::vector<int> qubits;
    double error = 0.0;
    double duration_ns = 0.0;

    bool operator==(const GateProperties &) const = default;
};

/// Hardware model: calibration snapshot plus connectivity. The coupling map is
/// directed; loaders expand each authored pair into both directions.
struct MachineProperties {
    std::string name;
    int n_qubits = 0;
    MachineStatus status;
    std::vector<std::pair<int, int>> coupling_map;
    std::vector<QubitProperties> qubits;
    std::vector<GateProperties> gates;
    std::vector<std::string> basis_gates;

    bool operator==(const MachineProperties &) const = default;

    bool has_edge(int from, int to) const;
    /// Exact (kind, qubit tuple) lookup; nullptr when absent.
    const GateProperties *find_gate(std::string_view kind, const std::vector<int> &qubits) const;
    bool supports(std::string_view kind) const;
};

struct MachineParseResult {
    std::optional<MachineProperties> machine;
    Diagnostics diagnostics;
};

/// Hard invariants become errors; soft physical bounds (T2 <= 2*T1) warnings.
Diagnostics validate_machine(const MachineProperties &m);

/// Parses a `*.machine.json` document, expands the coupling map to both
/// directions and validates. Any error leaves `machine` empty.
MachineParseResult machine_from_json(const json &doc);

json machine_to_json(const MachineProperties &m);

/// Sorts and deduplicates, adding the reverse of every pair.
std::vector<std::pair<int, int>> symmetric_coupling(const std::vector<std::pair<int, int>> &pairs);

}  // namespace qcwb
