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

#include "qcwb/transpiler/route.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "qcwb/transpiler/decompose.hpp"

namespace qcwb {

namespace {

class Router {
   public:
    Router(const MachineProperties &m, Routed &res) : m_(m), res_(res), adj_(m.n_qubits) {
        for (auto [a, b] : m.coupling_map) {
            adj_[a].push_back(b);
            adj_[b].push_back(a);
        }
        for (auto &list : adj_) {
            std::sort(list.begin(), list.end());
            list.erase(std::unique(list.begin(), list.end()), list.end());
        }
        v2p_.resize(m.n_qubits);
        std::iota(v2p_.begin(), v2p_.end(), 0);
        p2v_ = v2p_;
    }

    const std::vector<int> &mapping() const {
        return v2p_;
    }

    void route(const GateInstance &g) {
        origin_ = Origin::logical(g.id);
        std::vector<int> phys;
        for (int v : g.qubits) {
            phys.push_back(v2p_[v]);
        }
        if (g.kind == GateKind::BARRIER || g.qubits.size() == 1) {
            emit(g.kind, phys, g.params, g.clbits);
            return;
        }
        if (g.qubits.size() != 2) {
            throw Error("unsupported_gate", "routing expects gates on at most two qubits, got '" +
                                                std::string(gate_name(g.kind)) + "' on " +
                                                std::to_string(g.qubits.size()));
        }
        if (!coupled(phys[0], phys[1])) {
            std::vector<int> path = shortest_path(phys[0], phys[1]);
            origin_ = Origin::routing();
            for (size_t i = 0; i + 2 < path.size(); ++i) {
                swap(path[i], path[i + 1]);
            }
            origin_ = Origin::logical(g.id);
            phys = {v2p_[g.qubits[0]], v2p_[g.qubits[1]]};
        }
        if (g.kind == GateKind::CX) {
            emit_cx(phys[0], phys[1]);
        } else if (m_.has_edge(phys[0], phys[1]) || g.kind == GateKind::CZ || g.kind == GateKind::SWAP) {
            if (!m_.has_edge(phys[0], phys[1])) {
                std::swap(phys[0], phys[1]);  // symmetric gates
            }
            emit(g.kind, phys, g.params, g.clbits);
        } else {
            throw Error("no_route", "gate '" + std::string(gate_name(g.kind)) + "' cannot run on pair (" +
                                        std::to_string(phys[0]) + "," + std::to_string(phys[1]) + ")");
        }
    }

   private:
    bool coupled(int a, int b) const {
        return m_.has_edge(a, b) || m_.has_edge(b, a);
    }

    std::vector<int> shortest_path(int from, int to) const {
        std::vector<int> prev(m_.n_qubits, -1);
        std::vector<bool> seen(m_.n_qubits, false);
        std::queue<int> q;
        q.push(from);
        seen[from] = true;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            if (u == to) {
                break;
            }
            for (int w : adj_[u]) {
                if (!seen[w]) {
                    seen[w] = true;
                    prev[w] = u;
                    q.push(w);
                }
            }
        }
        if (!seen[to]) {
            throw Error("no_route", "no route between physical qubits " + std::to_string(from) + " and " +
                                        std::to_string(to));
        }
        std::vector<int> path;
        for (int u = to; u != -1; u = prev[u]) {
            path.push_back(u);
        }
        std::reverse(path.begin(), path.end());
        return path;
    }

    void swap(int a, int b) {
        emit_cx(a, b);
        emit_cx(b, a);
        emit_cx(a, b);
        std::swap(p2v_[a], p2v_[b]);
        v2p_[p2v_[a]] = a;
        v2p_[p2v_[b]] = b;
    }

    void emit_cx(int c, int t) {
        if (m_.has_edge(c, t)) {
            emit(GateKind::CX, {c, t});
            return;
        }
        hadamard(c);
        hadamard(t);
        emit(GateKind::CX, {t, c});
        hadamard(c);
        hadamard(t);
    }

    void hadamard(int q) {
        const size_t start = res_.circuit.gates.size();
        append_1q_unitary(res_.circuit, gate_matrix(GateKind::H, {}, 1), q);
        for (size_t i = start; i < res_.circuit.gates.size(); ++i) {
            res_.provenance[static_cast<int>(i)] = origin_;
        }
    }

    void emit(GateKind kind, std::vector<int> qubits, std::vector<double> params = {}, std::vector<int> clbits = {}) {
        const int id = static_cast<int>(res_.circuit.gates.size());
        res_.circuit.gates.push_back({id, kind, std::move(qubits), std::move(params), std::move(clbits)});
        res_.provenance[id] = origin_;
    }

    const MachineProperties &m_;
    Routed &res_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> v2p_, p2v_;
    Origin origin_;
};

}  // namespace

Routed layout_and_route(const Circuit &circuit, const MachineProperties &machine) {
    if (circuit.n_qubits > machine.n_qubits) {
        throw Error("too_many_qubits", "circuit needs " + std::to_string(circuit.n_qubits) + " qubits but machine '" +
                                           machine.name + "' has " + std::to_string(machine.n_qubits));
    }
    Routed res;
    res.circuit.name = circuit.name;
    res.circuit.n_qubits = machine.n_qubits;
    res.circuit.n_clbits = circuit.n_clbits;
    Router router(machine, res);
    res.layout.initial = router.mapping();
    for (const auto &g : circuit.gates) {
        router.route(g);
    }
    res.layout.final = router.mapping();
    return res;
}

}  // namespace qcwb
