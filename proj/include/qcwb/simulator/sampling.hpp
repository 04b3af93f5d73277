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

#include <cstdint>
#include <map>
#include <string>

#include "qcwb/circuit/document.hpp"
#include "qcwb/transpiler/transpile.hpp"

namespace qcwb {

/// Outcome counts keyed by classical-register bitstrings printed with the
/// highest clbit first. Only observed outcomes are stored.
struct Counts {
    int n_bits = 0;
    int64_t shots = 0;
    std::map<std::string, int64_t> counts;

    bool operator==(const Counts &) const = default;
};

/// Measures the final ideal state: each MEASURE copies its qubit into its
/// clbit, unmeasured clbits read 0. Deterministic per seed. Throws
/// Error("no_measurements") when the circuit measures nothing.
Counts sample_counts(const Circuit &circuit, int64_t shots, uint64_t seed);

/// 1 - prod over compiled gates other than MEASURE/BARRIER of (1 - error),
/// times prod over measured qubits of (1 - readout error).
double shot_error_probability(const CompiledCircuit &compiled, const MachineProperties &machine);

std::string to_bitstring(uint64_t value, int n_bits);

json counts_to_json(const Counts &c);
/// Checks keys (equal length, 0/1 only) and that shots equals the sum.
Counts counts_from_json(const json &doc);

}  // namespace qcwb
