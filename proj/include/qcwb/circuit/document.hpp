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

#include <json.hpp>

#include "qcwb/circuit/circuit.hpp"

namespace qcwb {

using json = nlohmann::json;

/// Result of deserializing a circuit document: either a valid circuit or error diagnostics.
struct BuildResult {
    std::optional<Circuit> circuit;
    Diagnostics diagnostics;  // may hold warnings even on success

    bool ok() const {
        return circuit.has_value();
    }
};

/// Builds a Circuit from the JSON circuit document. Gate ids are assigned
/// 0..N-1 in document order; any error yields no circuit.
BuildResult build_circuit(const json &doc);

json circuit_to_json(const Circuit &circuit);

json diagnostics_to_json(const Diagnostics &diags);

/// Convenience for callers that treat diagnostics as fatal: throws on errors.
Circuit build_circuit_or_throw(const json &doc);

}  // namespace qcwb
