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

#include <set>
#include <string>

#include "qcwb/circuit/unitary.hpp"
#include "qcwb/transpiler/provenance.hpp"

namespace qcwb {

using BasisSet = std::set<std::string>;

/// {rz, sx, x, cx}.
const BasisSet &default_basis();

struct Decomposition {
    Circuit circuit;
    ProvenanceMap provenance;  // output id -> Logical(source id)
};

/// Rewrites every gate into `basis` (which must contain rz, sx, x and cx).
/// Gates of at most two qubits already in the basis pass through; MEASURE and
/// BARRIER are kept. Output ids are 0..N-1; observables are dropped.
Decomposition decompose_to_basis(const Circuit &circuit, const BasisSet &basis = default_basis());

/// Euler angles with U = e^{i alpha} RZ(phi) RY(theta) RZ(lambda).
struct ZyzAngles {
    double theta = 0, phi = 0, lambda = 0, alpha = 0;
};
ZyzAngles zyz_angles(const Matrix &u);

/// Appends RZ/SX/X gates on `qubit` equal to `u` up to global phase. Always
/// appends at least one gate.
void append_1q_unitary(Circuit &out, const Matrix &u, int qubit);

/// Principal square root of a 2x2 unitary.
Matrix sqrt_2x2(const Matrix &u);

}  // namespace qcwb
