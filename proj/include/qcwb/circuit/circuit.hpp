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

#include <map>
#include <span>
#include <string>
#include <vector>

#include "qcwb/circuit/gate.hpp"
#include "qcwb/error.hpp"

namespace qcwb {

struct GateInstance {
    int id = 0;
    GateKind kind = GateKind::H;
    std::vector<int> qubits;
    std::vector<double> params;  // radians
    std::vector<int> clbits;     // MEASURE only

    bool operator==(const GateInstance &) const = default;
};

/// Pauli string; the leftmost character acts on the highest qubit index.
struct PauliObservable {
    std::string label;
    double coefficient = 1.0;

    bool operator==(const PauliObservable &) const = default;
};

/// Logical circuit IR. Qubit 0 is the least-significant bit of every basis
/// index and bitstring. Values are treated as immutable once built; use
/// `append_gate` for checked single-owner construction.
struct Circuit {
    std::string name;
    int n_qubits = 1;
    int n_clbits = 0;
    std::vector<GateInstance> gates;
    std::vector<PauliObservable> observables;
    std::map<std::string, std::string> metadata;

    bool operator==(const Circuit &) const = default;

    int next_id() const {
        return gates.empty() ? 0 : gates.back().id + 1;
    }
};

/// Checks a single gate against the circuit's registers without mutating it.
Diagnostics check_gate(const Circuit &circuit, GateKind kind, std::span<const int> qubits,
                       std::span<const double> params, std::span<const int> clbits);

/// Appends a gate with id = previous max id + 1. Throws qcwb::Error and leaves
/// the circuit untouched when the gate violates arity or index rules.
int append_gate(Circuit &circuit, GateKind kind, std::vector<int> qubits, std::vector<double> params = {},
                std::vector<int> clbits = {});

/// Reports every structural violation; an empty result means the circuit is valid.
Diagnostics validate_circuit(const Circuit &circuit);

/// Diagnostics for a Pauli label against a register size (length and alphabet).
Diagnostics check_observable(const PauliObservable &obs, int n_qubits);

/// Renumbers ids to 0..N-1 in order.
void renumber(Circuit &circuit);

}  // namespace qcwb
