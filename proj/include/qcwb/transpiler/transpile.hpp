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

#include <string>
#include <vector>

#include "qcwb/transpiler/decompose.hpp"
#include "qcwb/transpiler/route.hpp"

namespace qcwb {

/// Lists of gate ids. Gates go to the earliest layer after every earlier gate
/// on the same qubits; a BARRIER belongs to no layer but forces all later gates
/// past every layer opened so far.
using Layers = std::vector<std::vector<int>>;

Layers layerize(const Circuit &circuit);

struct CompiledCircuit {
    Circuit circuit;
    Layout layout;
    Layers layers;
    ProvenanceMap provenance;  // compiled id -> Logical(logical id) | Routing
    std::string machine;
};

/// decompose -> route (SWAPs expanded to CX) -> decompose -> layerize, with
/// provenance composed back to the logical circuit. Throws Error for invalid
/// circuits or routing failures.
CompiledCircuit transpile(const Circuit &circuit, const MachineProperties &machine);

json compiled_to_json(const CompiledCircuit &c);

}  // namespace qcwb
