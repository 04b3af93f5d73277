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

#include "qcwb/circuit/document.hpp"

namespace qcwb {

/// Where a compiled gate came from.
struct Origin {
    enum class Kind { Logical, Routing, LayoutBookkeeping };
    Kind kind = Kind::Logical;
    int logical_id = -1;  // Kind::Logical only

    static Origin logical(int id) {
        return {Kind::Logical, id};
    }
    static Origin routing() {
        return {Kind::Routing, -1};
    }
    static Origin bookkeeping() {
        return {Kind::LayoutBookkeeping, -1};
    }

    bool operator==(const Origin &) const = default;
};

/// Output gate id -> origin in the stage's input circuit.
using ProvenanceMap = std::map<int, Origin>;

/// Chains two stages: `later` maps into the ids of the circuit `earlier`
/// produced, the result maps straight to `earlier`'s source.
ProvenanceMap compose(const ProvenanceMap &earlier, const ProvenanceMap &later);

/// Logical origins become their integer id, others "routing" / "layout".
json origin_to_json(const Origin &o);
json provenance_to_json(const ProvenanceMap &p);

}  // namespace qcwb
