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

#include "qcwb/simulator/sampling.hpp"

#include <algorithm>
#include <set>

#include "qcwb/simulator/rng.hpp"
#include "qcwb/simulator/statevector.hpp"
#include "qcwb/transpiler/esp.hpp"

namespace qcwb {

std::string to_bitstring(uint64_t value, int n_bits) {
    std::string s(n_bits, '0');
    for (int b = 0; b < n_bits; ++b) {
        if ((value >> b) & 1) {
            s[n_bits - 1 - b] = '1';
        }
    }
    return s;
}

Counts sample_counts(const Circuit &circuit, int64_t shots, uint64_t seed) {
    if (shots < 0) {
        throw Error("invalid_argument", "shots must be non-negative");
    }
    std::vector<std::pair<int, int>> wiring;  // (qubit, clbit)
    for (const auto &g : circuit.gates) {
        if (g.kind == GateKind::MEASURE) {
            wiring.emplace_back(g.qubits.at(0), g.clbits.at(0));
        }
    }
    if (wiring.empty()) {
        throw Error("no_measurements", "circuit has no measured qubits");
    }
    Counts out;
    out.n_bits = circuit.n_clbits;
    out.shots = shots;
    if (shots == 0) {
        return out;
    }
    const std::vector<double> p = probabilities(statevector(circuit));
    std::map<uint64_t, double> marginal;
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] == 0.0) {
            continue;
        }
        uint64_t key = 0;
        for (auto [q, c] : wiring) {
            if ((i >> q) & 1) {
                key |= uint64_t{1} << c;
            } else {
                key &= ~(uint64_t{1} << c);
            }
        }
        marginal[key] += p[i];
    }
    std::vector<uint64_t> keys;
    std::vector<double> cdf;
    double acc = 0;
    for (auto [k, w] : marginal) {
        acc += w;
        keys.push_back(k);
        cdf.push_back(acc);
    }
    std::vector<int64_t> hits(keys.size(), 0);
    CounterRng rng(seed, ~uint64_t{0});
    for (int64_t s = 0; s < shots; ++s) {
        const double u = rng.uniform() * acc;
        size_t j = std::upper_bound(cdf.begin(), cdf.end(), u) - cdf.begin();
        ++hits[std::min(j, keys.size() - 1)];
    }
    for (size_t j = 0; j < keys.size(); ++j) {
        if (hits[j]) {
            out.counts[to_bitstring(keys[j], out.n_bits)] = hits[j];
        }
    }
    return out;
}

double shot_error_probability(const CompiledCircuit &compiled, const MachineProperties &machine) {
    double clean = 1.0;
    std::set<int> measured;
    for (const auto &g : compiled.circuit.gates) {
        if (g.kind == GateKind::MEASURE) {
            measured.insert(g.qubits.at(0));
        } else if (g.kind != GateKind::BARRIER) {
            clean *= 1.0 - gate_error(machine, g);
        }
    }
    for (int q : measured) {
        if (q < 0 || q >= static_cast<int>(machine.qubits.size())) {
            throw Error("missing_error_entry", "no readout error for qubit " + std::to_string(q));
        }
        clean *= 1.0 - machine.qubits[q].readout_error;
    }
    return 1.0 - clean;
}

json counts_to_json(const Counts &c) {
    json counts = json::object();
    for (const auto &[k, v] : c.counts) {
        counts[k] = v;
    }
    return {{"shots", c.shots}, {"counts", std::move(counts)}};
}

Counts counts_from_json(const json &doc) {
    if (!doc.is_object() || !doc.contains("counts") || !doc["counts"].is_object()) {
        throw Error("schema_violation", "counts document needs a 'counts' object");
    }
    Counts c;
    c.n_bits = -1;
    int64_t total = 0;
    for (const auto &[key, value] : doc["counts"].items()) {
        if (!value.is_number_integer() || value.get<int64_t>() < 0) {
            throw Error("schema_violation", "count for '" + key + "' must be a non-negative integer");
        }
        if (key.empty() || key.find_first_not_of("01") != std::string::npos) {
            throw Error("schema_violation", "bitstring '" + key + "' must contain only 0 and 1");
        }
        if (c.n_bits >= 0 && static_cast<int>(key.size()) != c.n_bits) {
            throw Error("schema_violation", "bitstrings have inconsistent lengths");
        }
        c.n_bits = static_cast<int>(key.size());
        c.counts[key] = value.get<int64_t>();
        total += value.get<int64_t>();
    }
    c.n_bits = std::max(c.n_bits, 0);
    c.shots = total;
    if (doc.contains("shots")) {
        if (!doc["shots"].is_number_integer() || doc["shots"].get<int64_t>() != total) {
            throw Error("schema_violation", "shots does not equal the sum of counts");
        }
    }
    return c;
}

}  // namespace qcwb
