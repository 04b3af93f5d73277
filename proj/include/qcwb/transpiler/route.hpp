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

#include "qcwb/machine/machine.hpp"
#include "qcwb/transpiler/provenance.hpp"

namespace qcwb {

/// Virtual -> physical qubit maps. Both vectors span every physical qubit of
/// the machine: entries below the logical register size are the logical
/// qubits, the rest track idle physical wires moved by routing SWAPs.
struct Layout {
    std::vector<int> initial;
    std::vector<int> final;

    bool operator==(const Layout &) const = default;
};

struct Routed {
    Circuit circuit;  // over machine.n_qubits physical qubits
    Layout layout;
    ProvenanceMap provenance;  // output id -> Logical(input id) or Routing
};

/// Places virtual qubit i on physical qubit i and makes every two-qubit gate
/// act on a coupled pair. A gate whose operands are not coupled moves its first
/// operand along a shortest path (lowest-index neighbour first) with SWAPs
/// expanded to three CX gates. A CX present only in reverse direction is
/// wrapped in Hadamards. Input gates must act on at most two qubits.
/// Throws Error("no_route") for unreachable pairs and Error("too_many_qubits")
/// when the circuit does not fit the machine.
Routed layout_and_route(const Circuit &circuit, const MachineProperties &machine);

}  // namespace qcwb
