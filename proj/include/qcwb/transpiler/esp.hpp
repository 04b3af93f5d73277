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

#include <vector>

#include "qcwb/transpiler/transpile.hpp"

namespace qcwb {

struct EspReport {
    std::vector<double> layerwise;
    std::vector<double> cumulative;
    std::vector<std::vector<double>> per_qubit_cumulative;  // [layer][physical qubit]
};

/// Machine error of one compiled gate: the readout error of its qubit for
/// MEASURE, 0 for BARRIER, otherwise the exact (kind, qubits) gate entry.
/// Throws Error("missing_error_entry") when the machine has no entry.
double gate_error(const MachineProperties &machine, const GateInstance &gate);

/// layerwise[i] = prod over layer i of (1 - error); cumulative is the running
/// product; per-qubit values multiply only gates touching that qubit.
EspReport compute_esp(const CompiledCircuit &compiled, const MachineProperties &machine);

json esp_to_json(const EspReport &r);

}  // namespace qcwb
