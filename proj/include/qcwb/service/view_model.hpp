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

#include "qcwb/transpiler/esp.hpp"

namespace qcwb {

/// Column/row placement of every gate: column = ASAP layer, rows = qubits.
/// Barriers take the column of the next layer they fence.
json gate_geometry(const Circuit &circuit, const Layers &layers);

/// Circuit-viewer data: both circuits with geometry, provenance in both
/// directions, the ESP report, one animation frame per compiled layer and a
/// detail entry per gate. Logical and compiled ids are separate namespaces,
/// so details and geometry are keyed under "logical" and "compiled".
json build_view_model(const Circuit &circuit, const MachineProperties &machine);

}  // namespace qcwb
