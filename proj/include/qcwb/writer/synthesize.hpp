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
#include <string>
#include <variant>
#include <vector>

#include "qcwb/circuit/document.hpp"

namespace qcwb {

/// Validated observable; throws qcwb::Error on a length mismatch or a
/// character outside IXYZ.
PauliObservable parse_pauli_observable(std::string_view text, int n_qubits);

namespace ops {

struct Superposition {
    std::vector<int> qubits;  // empty = whole register
};
struct BellPair {
    int q0 = 0;
    int q1 = 1;
};
struct Ghz {
    std::vector<int> qubits;  // empty = whole register
};
struct Qft {
    std::vector<int> qubits;  // qubits[0] is least significant; empty = whole register
};
struct GroverSearch {
    std::string expression;
    std::vector<std::string> var_order;  // empty = sorted free variables; variable i -> qubit i
    std::optional<int> iterations;
};
struct RawGate {
    GateInstance gate;
};

}  // namespace ops

using ConceptualOp = std::variant<ops::Superposition, ops::BellPair, ops::Ghz, ops::Qft, ops::GroverSearch, ops::RawGate>;

struct ConceptualSpec {
    std::string name;
    int register_size = 1;
    std::vector<ConceptualOp> ops;
    std::vector<std::string> observables;
    bool measure_all = false;
};

struct SynthesisResult {
    Circuit circuit;
    Diagnostics diagnostics;
};

/// Expands conceptual operations into gates. Never throws for content
/// problems; everything is reported through diagnostics.
SynthesisResult synthesize(const ConceptualSpec &spec);

/// Textbook optimum floor(pi/4 * sqrt(2^v / M)); 0 when M = 0.
int default_grover_iterations(int n_vars, long long n_solutions);

/// Reads the JSON form ({register_size, ops:[{op:"bell_pair",...}], ...}).
/// Throws qcwb::Error("schema_violation") for malformed documents.
ConceptualSpec parse_conceptual_spec(const json &doc);

}  // namespace qcwb
