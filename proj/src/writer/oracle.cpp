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

#include "qcwb/writer/oracle.hpp"

#include <set>

namespace qcwb {

namespace {

struct Wire {
    int qubit;
    bool negated;
};

class OracleBuilder {
   public:
    OracleBuilder(const std::map<std::string, int> &vars, int first_ancilla)
        : vars_(vars), next_ancilla_(first_ancilla) {
    }

    Wire compute(const BoolExpr &e) {
        switch (e.op) {
            case BoolExpr::Op::Var: {
                auto it = vars_.find(e.name);
                if (it == vars_.end()) {
                    throw Error("unmapped_variable", "variable '" + e.name + "' is not mapped to a qubit");
                }
                return {it->second, false};
            }
            case BoolExpr::Op::Const:
                // A fresh ancilla reads as 0; a negated one as 1.
                return {fresh(), e.value};
            case BoolExpr::Op::Not: {
                Wire w = compute(*e.lhs);
                w.negated = !w.negated;
                return w;
            }
            case BoolExpr::Op::And:
                return conjunction(compute(*e.lhs), compute(*e.rhs));
            case BoolExpr::Op::Or: {
                Wire a = compute(*e.lhs);
                Wire b = compute(*e.rhs);
                a.negated = !a.negated;
                b.negated = !b.negated;
                Wire r = conjunction(a, b);
                r.negated = !r.negated;
                return r;
            }
            case BoolExpr::Op::Xor: {
                Wire a = compute(*e.lhs);
                Wire b = compute(*e.rhs);
                if (a.qubit == b.qubit) {
                    return {fresh(), a.negated != b.negated};
                }
                const int t = fresh();
                emit(GateKind::CX, {a.qubit, t});
                emit(GateKind::CX, {b.qubit, t});
                return {t, a.negated != b.negated};
            }
        }
        throw Error("internal", "unknown expression node");
    }

    std::vector<GateInstance> &gates() {
        return gates_;
    }
    int allocated(int first) const {
        return next_ancilla_ - first;
    }

   private:
    Wire conjunction(Wire a, Wire b) {
        if (a.qubit == b.qubit) {
            if (a.negated == b.negated) {
                return a;
            }
            return {fresh(), false};
        }
        const int t = fresh();
        if (a.negated) {
            emit(GateKind::X, {a.qubit});
        }
        if (b.negated) {
            emit(GateKind::X, {b.qubit});
        }
        emit(GateKind::CCX, {a.qubit, b.qubit, t});
        if (b.negated) {
            emit(GateKind::X, {b.qubit});
        }
        if (a.negated) {
            emit(GateKind::X, {a.qubit});
        }
        return {t, false};
    }

    int fresh() {
        return next_ancilla_++;
    }

    void emit(GateKind kind, std::vector<int> qubits) {
        gates_.push_back(GateInstance{0, kind, std::move(qubits), {}, {}});
    }

    const std::map<std::string, int> &vars_;
    int next_ancilla_;
    std::vector<GateInstance> gates_;
};

}  // namespace

OracleFragment compile_phase_oracle(const BoolExpr &expr, const std::map<std::string, int> &var_to_qubit,
                                    int first_ancilla) {
    std::set<int> used;
    for (const auto &[name, q] : var_to_qubit) {
        if (q < 0 || q >= first_ancilla) {
            throw Error("index_out_of_range", "variable '" + name + "' maps to qubit " + std::to_string(q) +
                                                  " outside the data range below the first ancilla");
        }
        if (!used.insert(q).second) {
            throw Error("non_injective", "variable mapping is not injective (qubit " + std::to_string(q) + ")");
        }
    }
    for (const auto &v : free_variables(expr)) {
        if (!var_to_qubit.count(v)) {
            throw Error("unmapped_variable", "variable '" + v + "' is not mapped to a qubit");
        }
    }

    OracleBuilder builder(var_to_qubit, first_ancilla);
    const Wire result = builder.compute(expr);
    std::vector<GateInstance> compute = std::move(builder.gates());

    OracleFragment frag;
    frag.first_ancilla = first_ancilla;
    frag.ancilla_count = builder.allocated(first_ancilla);
    frag.gates = compute;
    auto push = [&](GateKind k, int q) { frag.gates.push_back(GateInstance{0, k, {q}, {}, {}}); };
    if (result.negated) {
        // X Z X = diag(-1, 1): phase on the result reading 0.
        push(GateKind::X, result.qubit);
        push(GateKind::Z, result.qubit);
        push(GateKind::X, result.qubit);
    } else {
        push(GateKind::Z, result.qubit);
    }
    // Every compute gate is self-inverse.
    frag.gates.insert(frag.gates.end(), compute.rbegin(), compute.rend());
    for (size_t i = 0; i < frag.gates.size(); ++i) {
        frag.gates[i].id = static_cast<int>(i);
    }
    return frag;
}

std::vector<GateInstance> mcx_v_chain(const std::vector<int> &controls, int target, int first_ancilla) {
    std::vector<GateInstance> out;
    auto emit = [&](GateKind k, std::vector<int> qs) { out.push_back(GateInstance{0, k, std::move(qs), {}, {}}); };
    const size_t k = controls.size();
    if (k == 0) {
        emit(GateKind::X, {target});
        return out;
    }
    if (k == 1) {
        emit(GateKind::CX, {controls[0], target});
        return out;
    }
    if (k == 2) {
        emit(GateKind::CCX, {controls[0], controls[1], target});
        return out;
    }
    std::vector<GateInstance> ladder;
    auto rung = [&](int a, int b, int t) { ladder.push_back(GateInstance{0, GateKind::CCX, {a, b, t}, {}, {}}); };
    rung(controls[0], controls[1], first_ancilla);
    for (size_t i = 2; i + 1 < k; ++i) {
        rung(controls[i], first_ancilla + static_cast<int>(i) - 2, first_ancilla + static_cast<int>(i) - 1);
    }
    out = ladder;
    emit(GateKind::CCX, {controls[k - 1], first_ancilla + static_cast<int>(k) - 3, target});
    out.insert(out.end(), ladder.rbegin(), ladder.rend());
    return out;
}

}  // namespace qcwb
