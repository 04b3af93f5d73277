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

#include "qcwb/circuit/document.hpp"
#include "qcwb/machine/machine.hpp"
#include "qcwb/simulator/adjust.hpp"
#include "qcwb/writer/synthesize.hpp"

namespace qcwb {

/// Document-level engine calls shared by the HTTP API and the CLI, so both
/// front ends emit identical bytes for identical inputs.

/// Circuit from either a circuit document (object) or OpenQASM 2.0 text (string).
BuildResult circuit_from_value(const json &value);

/// {circuit, diagnostics, snippets:{openqasm2, qiskit}}; snippets is null when
/// the diagnostics contain errors.
json synthesize_document(const ConceptualSpec &spec);

/// {compiled, esp}.
json transpile_document(const Circuit &circuit, const MachineProperties &machine);

/// Counts document plus {expectations:{label: value}} for attached observables.
json simulate_document(const Circuit &circuit, int64_t shots, uint64_t seed);

struct ErrorAdjustRun {
    Counts ideal;
    double p_err = 0;
    AdjustedOutcomes adjusted;
};

/// Ideal counts from the logical circuit, p_err from its compiled form on
/// `machine`, then the Monte-Carlo adjustment over the classical register.
ErrorAdjustRun run_error_adjust(const Circuit &circuit, const MachineProperties &machine, int64_t shots, int trials,
                                uint64_t seed, int threads);

/// {ideal, p_err, adjusted, overlaps}; overlaps lists string pairs whose CIs
/// overlap (omitted above 64 strings).
json error_adjust_document(const ErrorAdjustRun &run);

}  // namespace qcwb
