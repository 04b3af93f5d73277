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
#include <string>
#include <vector>

#include "qcwb/circuit/circuit.hpp"
#include "qcwb/writer/bool_expr.hpp"

namespace qcwb {

/// Gate list acting on data qubits plus ancillas numbered from `first_ancilla`.
/// Every ancilla starts and ends in |0>.
struct OracleFragment {
    std::vector<GateInstance> gates;
    int first_ancilla = 0;
    int ancilla_count = 0;

    /// Number of qubits the fragment spans (data qubits must lie below first_ancilla).
    int width() const {
        return first_ancilla + ancilla_count;
    }
};

/// Phase oracle |x>|0..0> -> (-1)^{f(x)} |x>|0..0> built by computing f into
/// a result ancilla (AND as CCX, OR by De Morgan, XOR as CX), applying Z there
/// and uncomputing. Throws on unmapped variables or a non-injective mapping.
OracleFragment compile_phase_oracle(const BoolExpr &expr, const std::map<std::string, int> &var_to_qubit,
                                    int first_ancilla);

/// Multi-controlled X using a clean-ancilla V-chain for three or more controls
/// (k-2 ancillas from `first_ancilla`). Returns the gates with ids unset.
std::vector<GateInstance> mcx_v_chain(const std::vector<int> &controls, int target, int first_ancilla);

/// Ancillas needed by `mcx_v_chain` for `n_controls` controls.
inline int v_chain_ancillas(int n_controls) {
    return n_controls >= 3 ? n_controls - 2 : 0;
}

}  // namespace qcwb
