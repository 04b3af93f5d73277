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

#include "qcwb/circuit/unitary.hpp"

namespace qcwb {

/// Amplitudes of 2^n basis states, qubit 0 least significant.
using State = std::vector<cplx>;

inline constexpr int kMaxSimQubits = 16;

/// Serial runs the plain reference loops; Parallel runs the OpenMP kernels.
enum class ExecPolicy { Serial, Parallel };

State zero_state(int n_qubits);

/// Applies a unitary gate in place. MEASURE and BARRIER are no-ops.
void apply_gate(State &state, const GateInstance &gate, ExecPolicy policy = ExecPolicy::Parallel);

/// Applies a 2^k x 2^k matrix whose local bit j is operand j.
void apply_matrix(State &state, std::span<const int> qubits, const Matrix &m,
                  ExecPolicy policy = ExecPolicy::Parallel);

/// Evolves |0...0> through every gate; MEASURE gates are skipped. Throws
/// Error("too_many_qubits") above kMaxSimQubits.
State statevector(const Circuit &circuit, ExecPolicy policy = ExecPolicy::Parallel);

std::vector<double> probabilities(const State &state);
double norm_squared(const State &state);

/// coefficient * <psi|P|psi>, computed by rotating X/Y factors to Z and
/// summing the parity-weighted probabilities.
double pauli_expectation(const Circuit &circuit, const PauliObservable &obs,
                         ExecPolicy policy = ExecPolicy::Parallel);

}  // namespace qcwb
