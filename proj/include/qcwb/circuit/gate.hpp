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
#include <string_view>
#include <vector>

namespace qcwb {

enum class GateKind {
    H,
    X,
    Y,
    Z,
    S,
    SDG,
    T,
    TDG,
    RX,
    RY,
    RZ,
    SX,
    CX,
    CZ,
    SWAP,
    CCX,
    MCX,
    BARRIER,
    MEASURE,
};

inline constexpr GateKind kAllGateKinds[] = {
    GateKind::H,  GateKind::X,  GateKind::Y,  GateKind::Z,    GateKind::S,   GateKind::SDG,
    GateKind::T,  GateKind::TDG, GateKind::RX, GateKind::RY,  GateKind::RZ,  GateKind::SX,
    GateKind::CX, GateKind::CZ, GateKind::SWAP, GateKind::CCX, GateKind::MCX, GateKind::BARRIER,
    GateKind::MEASURE,
};

/// Lowercase name used by documents, QASM and machine files ("h", "cx", ...).
std::string_view gate_name(GateKind kind);
std::optional<GateKind> parse_gate_kind(std::string_view name);

/// Number of angle parameters the kind takes.
int param_arity(GateKind kind);

/// Inclusive bounds on the number of qubit operands. `max_qubits` is -1 when unbounded.
struct QubitArity {
    int min_qubits;
    int max_qubits;
    bool accepts(size_t n) const {
        return static_cast<int>(n) >= min_qubits && (max_qubits < 0 || static_cast<int>(n) <= max_qubits);
    }
};
QubitArity qubit_arity(GateKind kind);

/// True for kinds whose square is the identity.
bool is_self_inverse(GateKind kind);

/// True for kinds that act unitarily (everything except BARRIER and MEASURE).
bool is_unitary(GateKind kind);

}  // namespace qcwb
