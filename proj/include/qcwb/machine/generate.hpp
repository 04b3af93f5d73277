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
#include <string>
#include <string_view>

#include "qcwb/machine/machine.hpp"

namespace qcwb {

struct Topology {
    enum class Kind { Line, Ring, Grid };
    Kind kind = Kind::Line;
    int rows = 0;  // grid only
    int cols = 0;

    bool operator==(const Topology &) const = default;
};

/// Accepts "line", "ring" and "grid:RxC". Throws Error("invalid_topology").
Topology parse_topology(std::string_view text);
std::string topology_name(const Topology &t);

/// Undirected edge list (a < b) for `n` qubits laid out per `t`.
std::vector<std::pair<int, int>> topology_edges(const Topology &t, int n_qubits);

/// Synthetic machine. The random draws do not depend on `noise_scale`, so
/// error fields scale linearly for a fixed seed. Empty `name` defaults to
/// "line3"/"ring4" style names, or "grid2x3" for grids.
MachineProperties generate_machine(uint64_t seed, int n_qubits, const Topology &topology, double noise_scale,
                                   std::string name = "");

}  // namespace qcwb
