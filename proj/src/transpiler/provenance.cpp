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

#include "qcwb/transpiler/provenance.hpp"

namespace qcwb {

ProvenanceMap compose(const ProvenanceMap &earlier, const ProvenanceMap &later) {
    ProvenanceMap out;
    for (const auto &[id, origin] : later) {
        if (origin.kind != Origin::Kind::Logical) {
            out[id] = origin;
            continue;
        }
        auto it = earlier.find(origin.logical_id);
        if (it == earlier.end()) {
            throw Error("provenance_gap", "gate " + std::to_string(id) + " points at unknown gate " +
                                              std::to_string(origin.logical_id));
        }
        out[id] = it->second;
    }
    return out;
}

json origin_to_json(const Origin &o) {
    switch (o.kind) {
        case Origin::Kind::Logical:
            return o.logical_id;
        case Origin::Kind::Routing:
            return "routing";
        case Origin::Kind::LayoutBookkeeping:
            return "layout";
    }
    return nullptr;
}

json provenance_to_json(const ProvenanceMap &p) {
    json out = json::object();
    for (const auto &[id, o] : p) {
        out[std::to_string(id)] = origin_to_json(o);
    }
    return out;
}

}  // namespace qcwb
