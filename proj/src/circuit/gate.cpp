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

#include "qcwb/circuit/gate.hpp"

namespace qcwb {

std::string_view gate_name(GateKind kind) {
    switch (kind) {
        case GateKind::H:
            return "h";
        case GateKind::X:
            return "x";
        case GateKind::Y:
            return "y";
        case GateKind::Z:
            return "z";
        case GateKind::S:
            return "s";
        case GateKind::SDG:
            return "sdg";
        case GateKind::T:
            return "t";
        case GateKind::TDG:
            return "tdg";
        case GateKind::RX:
            return "rx";
        case GateKind::RY:
            return "ry";
        case GateKind::RZ:
            return "rz";
        case GateKind::SX:
            return "sx";
        case GateKind::CX:
            return "cx";
        case GateKind::CZ:
            return "cz";
        case GateKind::SWAP:
            return "swap";
        case GateKind::CCX:
            return "ccx";
        case GateKind::MCX:
            return "mcx";
        case GateKind::BARRIER:
            return "barrier";
        case GateKind::MEASURE:
            return "measure";
    }
    return "?";
}

std::optional<GateKind> parse_gate_kind(std::string_view name) {
    for (GateKind k : kAllGateKinds) {
        if (gate_name(k) == name) {
            return k;
        }
    }
    return std::nullopt;
}

int param_arity(GateKind kind) {
    switch (kind) {
        case GateKind::RX:
        case GateKind::RY:
        case GateKind::RZ:
            return 1;
        default:
            return 0;
    }
}

QubitArity qubit_arity(GateKind kind) {
    switch (kind) {
        case GateKind::CX:
        case GateKind::CZ:
        case GateKind::SWAP:
            return {2, 2};
        case GateKind::CCX:
            return {3, 3};
        case GateKind::MCX:
            return {2, -1};
        case GateKind::BARRIER:
            return {1, -1};
        default:
            return {1, 1};
    }
}

bool is_self_inverse(GateKind kind) {
    switch (kind) {
        case GateKind::H:
        case GateKind::X:
        case GateKind::Y:
        case GateKind::Z:
        case GateKind::CX:
        case GateKind::CZ:
        case GateKind::SWAP:
        case GateKind::CCX:
        case GateKind::MCX:
            return true;
        default:
            return false;
    }
}

bool is_unitary(GateKind kind) {
    return kind != GateKind::BARRIER && kind != GateKind::MEASURE;
}

}  // namespace qcwb
