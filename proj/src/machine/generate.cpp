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

#include "qcwb/machine/generate.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <random>

namespace qcwb {

namespace {

bool parse_positive(std::string_view s, int &out) {
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && p == s.data() + s.size() && out > 0;
}

}  // namespace

Topology parse_topology(std::string_view text) {
    if (text == "line") {
        return {Topology::Kind::Line};
    }
    if (text == "ring") {
        return {Topology::Kind::Ring};
    }
    if (text.rfind("grid:", 0) == 0) {
        std::string_view dims = text.substr(5);
        size_t x = dims.find('x');
        Topology t{Topology::Kind::Grid};
        if (x != std::string_view::npos && parse_positive(dims.substr(0, x), t.rows) &&
            parse_positive(dims.substr(x + 1), t.cols)) {
            return t;
        }
    }
    throw Error("invalid_topology", "invalid topology '" + std::string(text) + "' (expected line, ring or grid:RxC)");
}

std::string topology_name(const Topology &t) {
    switch (t.kind) {
        case Topology::Kind::Line:
            return "line";
        case Topology::Kind::Ring:
            return "ring";
        case Topology::Kind::Grid:
            return "grid:" + std::to_string(t.rows) + "x" + std::to_string(t.cols);
    }
    return "";
}

std::vector<std::pair<int, int>> topology_edges(const Topology &t, int n) {
    std::vector<std::pair<int, int>> edges;
    switch (t.kind) {
        case Topology::Kind::Line:
        case Topology::Kind::Ring:
            for (int i = 0; i + 1 < n; ++i) {
                edges.emplace_back(i, i + 1);
            }
            if (t.kind == Topology::Kind::Ring && n >= 3) {
                edges.emplace_back(0, n - 1);
            }
            break;
        case Topology::Kind::Grid:
            if (t.rows * t.cols != n) {
                throw Error("invalid_topology", "grid " + std::to_string(t.rows) + "x" + std::to_string(t.cols) +
                                                    " does not hold " + std::to_string(n) + " qubits");
            }
            for (int r = 0; r < t.rows; ++r) {
                for (int c = 0; c < t.cols; ++c) {
                    int q = r * t.cols + c;
                    if (c + 1 < t.cols) {
                        edges.emplace_back(q, q + 1);
                    }
                    if (r + 1 < t.rows) {
                        edges.emplace_back(q, q + t.cols);
                    }
                }
            }
            break;
    }
    std::sort(edges.begin(), edges.end());
    return edges;
}

MachineProperties generate_machine(uint64_t seed, int n, const Topology &topology, double scale, std::string name) {
    if (n < 1) {
        throw Error("invalid_argument", "n_qubits must be at least 1");
    }
    if (!(scale >= 0) || !std::isfinite(scale)) {
        throw Error("invalid_argument", "noise_scale must be a non-negative number");
    }
    auto edges = topology_edges(topology, n);

    std::mt19937_64 rng(seed);
    auto uniform = [&](double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); };
    auto scaled = [&](double lo, double hi) { return std::clamp(uniform(lo, hi) * scale, 0.0, 1.0); };
    auto round_to = [](double v, double step) { return std::round(v / step) * step; };

    MachineProperties m;
    if (name.empty()) {
        name = topology.kind == Topology::Kind::Grid
                   ? "grid" + std::to_string(topology.rows) + "x" + std::to_string(topology.cols)
                   : topology_name(topology) + std::to_string(n);
    }
    m.name = std::move(name);
    m.n_qubits = n;
    m.basis_gates = {"rz", "sx", "x", "cx"};
    m.status.operational = true;
    m.status.last_calibrated = "2026-01-01T00:00:00Z";

    for (int q = 0; q < n; ++q) {
        QubitProperties qp;
        qp.t1_us = round_to(uniform(50.0, 300.0), 0.1);
        qp.t2_us = round_to(qp.t1_us * uniform(0.3, 1.5), 0.1);
        qp.frequency_ghz = round_to(uniform(4.5, 5.5), 1e-4);
        qp.readout_error = scaled(1e-2, 4e-2);
        m.qubits.push_back(qp);
    }
    for (int q = 0; q < n; ++q) {
        double err = scaled(1e-4, 1e-3);
        m.gates.push_back({"rz", {q}, 0.0, 0.0});
        m.gates.push_back({"sx", {q}, err, 35.5});
        m.gates.push_back({"x", {q}, err, 35.5});
    }
    for (auto [a, b] : symmetric_coupling(edges)) {
        double err = scaled(5e-3, 2e-2);
        double duration = round_to(uniform(250.0, 550.0), 0.5);
        m.gates.push_back({"cx", {a, b}, err, duration});
    }
    m.coupling_map = symmetric_coupling(edges);
    m.status.pending_jobs = static_cast<int>(rng() % 50);
    return m;
}

}  // namespace qcwb
