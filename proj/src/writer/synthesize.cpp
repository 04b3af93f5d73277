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

#include "qcwb/writer/synthesize.hpp"

#include <cmath>
#include <numbers>
#include <set>
#include <sstream>

#include "qcwb/writer/bool_expr.hpp"
#include "qcwb/writer/oracle.hpp"

namespace qcwb {

PauliObservable parse_pauli_observable(std::string_view text, int n_qubits) {
    size_t b = 0, e = text.size();
    while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) {
        ++b;
    }
    while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) {
        --e;
    }
    PauliObservable obs{std::string(text.substr(b, e - b)), 1.0};
    auto diags = check_observable(obs, n_qubits);
    if (!diags.empty()) {
        throw Error(diags.front().code, diags.front().message);
    }
    return obs;
}

int default_grover_iterations(int n_vars, long long n_solutions) {
    if (n_solutions <= 0) {
        return 0;
    }
    const double space = std::ldexp(1.0, n_vars);
    return static_cast<int>(std::floor(std::numbers::pi / 4.0 * std::sqrt(space / static_cast<double>(n_solutions))));
}

namespace {

struct PreparedGrover {
    BoolExpr expr;
    std::vector<std::string> vars;
    std::map<std::string, int> var_to_qubit;
    int iterations = 0;
    int oracle_ancillas = 0;
    int diffuser_ancillas = 0;
};

class Synthesizer {
   public:
    explicit Synthesizer(const ConceptualSpec &spec) : spec_(spec) {
    }

    SynthesisResult run() {
        SynthesisResult result;
        if (spec_.register_size < 1) {
            diags_.push_back(make_error("empty_register", "register size must be at least 1"));
            result.circuit.n_qubits = 1;
            result.diagnostics = diags_;
            return result;
        }
        // First pass: prepare Grover ops so ancilla demand is known up front.
        prepared_.resize(spec_.ops.size());
        int ancillas = 0;
        for (size_t i = 0; i < spec_.ops.size(); ++i) {
            if (const auto *g = std::get_if<ops::GroverSearch>(&spec_.ops[i])) {
                prepared_[i] = prepare(i, *g);
                if (prepared_[i]) {
                    ancillas = std::max({ancillas, prepared_[i]->oracle_ancillas, prepared_[i]->diffuser_ancillas});
                }
            }
        }
        circuit_.name = spec_.name;
        circuit_.n_qubits = spec_.register_size + ancillas;
        circuit_.n_clbits = spec_.measure_all ? spec_.register_size : 0;
        for (const auto &op : spec_.ops) {
            if (const auto *raw = std::get_if<ops::RawGate>(&op)) {
                for (int c : raw->gate.clbits) {
                    circuit_.n_clbits = std::max(circuit_.n_clbits, c + 1);
                }
            }
        }
        circuit_.metadata["data_qubits"] = std::to_string(spec_.register_size);
        circuit_.metadata["ancillas"] = std::to_string(ancillas);

        for (size_t i = 0; i < spec_.ops.size(); ++i) {
            std::visit([&](const auto &op) { expand(i, op); }, spec_.ops[i]);
        }
        if (spec_.measure_all) {
            for (int q = 0; q < spec_.register_size; ++q) {
                append_gate(circuit_, GateKind::MEASURE, {q}, {}, {q});
            }
        }
        for (const auto &text : spec_.observables) {
            try {
                PauliObservable obs = parse_pauli_observable(text, spec_.register_size);
                obs.label = std::string(ancillas, 'I') + obs.label;
                circuit_.observables.push_back(std::move(obs));
            } catch (const Error &e) {
                diags_.push_back(make_error(e.code(), std::string("observable '") + text + "': " + e.what()));
            }
        }
        for (auto &d : validate_circuit(circuit_)) {
            if (std::find(diags_.begin(), diags_.end(), d) == diags_.end()) {
                diags_.push_back(std::move(d));
            }
        }
        result.circuit = std::move(circuit_);
        result.diagnostics = std::move(diags_);
        return result;
    }

   private:
    std::string where(size_t i) const {
        return "ops[" + std::to_string(i) + "]: ";
    }

    void error(size_t i, const std::string &code, const std::string &msg) {
        diags_.push_back(make_error(code, where(i) + msg));
    }

    bool check_qubits(size_t i, const std::vector<int> &qubits) {
        std::set<int> seen;
        for (int q : qubits) {
            if (q < 0 || q >= spec_.register_size) {
                error(i, "index_out_of_range",
                      "index out of range: the number of qubits exceeded (qubit " + std::to_string(q) + " in a " +
                          std::to_string(spec_.register_size) + "-qubit register)");
                return false;
            }
            if (!seen.insert(q).second) {
                error(i, "duplicate_qubit", "duplicate qubit " + std::to_string(q));
                return false;
            }
        }
        return true;
    }

    std::vector<int> or_register(const std::vector<int> &qubits) const {
        if (!qubits.empty()) {
            return qubits;
        }
        std::vector<int> all(spec_.register_size);
        for (int q = 0; q < spec_.register_size; ++q) {
            all[q] = q;
        }
        return all;
    }

    void gate(GateKind k, std::vector<int> qs, std::vector<double> params = {}) {
        append_gate(circuit_, k, std::move(qs), std::move(params));
    }

    void controlled_phase(int control, int target, double lambda) {
        gate(GateKind::RZ, {control}, {lambda / 2});
        gate(GateKind::CX, {control, target});
        gate(GateKind::RZ, {target}, {-lambda / 2});
        gate(GateKind::CX, {control, target});
        gate(GateKind::RZ, {target}, {lambda / 2});
    }

    void expand(size_t i, const ops::Superposition &op) {
        const auto qs = or_register(op.qubits);
        if (!check_qubits(i, qs)) {
            return;
        }
        for (int q : qs) {
            gate(GateKind::H, {q});
        }
    }

    void expand(size_t i, const ops::BellPair &op) {
        if (!check_qubits(i, {op.q0, op.q1})) {
            return;
        }
        gate(GateKind::H, {op.q0});
        gate(GateKind::CX, {op.q0, op.q1});
    }

    void expand(size_t i, const ops::Ghz &op) {
        const auto qs = or_register(op.qubits);
        if (!check_qubits(i, qs)) {
            return;
        }
        gate(GateKind::H, {qs[0]});
        for (size_t j = 1; j < qs.size(); ++j) {
            gate(GateKind::CX, {qs[j - 1], qs[j]});
        }
    }

    void expand(size_t i, const ops::Qft &op) {
        const auto qs = or_register(op.qubits);
        if (!check_qubits(i, qs)) {
            return;
        }
        const int m = static_cast<int>(qs.size());
        for (int a = m - 1; a >= 0; --a) {
            gate(GateKind::H, {qs[a]});
            for (int b = a - 1; b >= 0; --b) {
                controlled_phase(qs[b], qs[a], std::numbers::pi / std::ldexp(1.0, a - b));
            }
        }
        for (int a = 0; a < m / 2; ++a) {
            gate(GateKind::SWAP, {qs[a], qs[m - 1 - a]});
        }
    }

    void expand(size_t i, const ops::RawGate &op) {
        if (!check_qubits(i, op.gate.qubits)) {
            return;
        }
        try {
            append_gate(circuit_, op.gate.kind, op.gate.qubits, op.gate.params, op.gate.clbits);
        } catch (const Error &e) {
            error(i, e.code(), e.what());
        }
    }

    void expand(size_t i, const ops::GroverSearch &) {
        if (!prepared_[i]) {
            return;
        }
        const auto &g = *prepared_[i];
        const int v = static_cast<int>(g.vars.size());
        const int first_ancilla = spec_.register_size;
        std::vector<int> data(v);
        for (int q = 0; q < v; ++q) {
            data[q] = q;
        }
        for (int q : data) {
            gate(GateKind::H, {q});
        }
        const OracleFragment oracle = compile_phase_oracle(g.expr, g.var_to_qubit, first_ancilla);
        for (int it = 0; it < g.iterations; ++it) {
            for (const auto &og : oracle.gates) {
                gate(og.kind, og.qubits);
            }
            // Diffuser: H X (multi-controlled Z) X H.
            for (int q : data) {
                gate(GateKind::H, {q});
            }
            for (int q : data) {
                gate(GateKind::X, {q});
            }
            if (v == 1) {
                gate(GateKind::Z, {0});
            } else if (v == 2) {
                gate(GateKind::CZ, {0, 1});
            } else {
                const int target = v - 1;
                std::vector<int> controls(data.begin(), data.end() - 1);
                gate(GateKind::H, {target});
                for (const auto &mg : mcx_v_chain(controls, target, first_ancilla)) {
                    gate(mg.kind, mg.qubits);
                }
                gate(GateKind::H, {target});
            }
            for (int q : data) {
                gate(GateKind::X, {q});
            }
            for (int q : data) {
                gate(GateKind::H, {q});
            }
        }
    }

    std::optional<PreparedGrover> prepare(size_t i, const ops::GroverSearch &op) {
        PreparedGrover g;
        try {
            g.expr = parse_bool_expr(op.expression);
        } catch (const Error &e) {
            error(i, e.code(), e.what());
            return std::nullopt;
        }
        const auto free = free_variables(g.expr);
        g.vars = op.var_order.empty() ? free : op.var_order;
        std::set<std::string> order_set(g.vars.begin(), g.vars.end());
        if (order_set.size() != g.vars.size()) {
            error(i, "var_order_mismatch", "var_order lists a variable more than once");
            return std::nullopt;
        }
        if (order_set != std::set<std::string>(free.begin(), free.end())) {
            error(i, "var_order_mismatch", "var_order must cover exactly the free variables of the expression");
            return std::nullopt;
        }
        if (g.vars.empty()) {
            error(i, "no_variables", "grover search needs at least one variable");
            return std::nullopt;
        }
        bool fits = true;
        for (size_t v = 0; v < g.vars.size(); ++v) {
            if (static_cast<int>(v) >= spec_.register_size) {
                error(i, "variable_exceeds_register",
                      "variable " + g.vars[v] + " exceeds register (needs qubit " + std::to_string(v) + ", register has " +
                          std::to_string(spec_.register_size) + ")");
                fits = false;
            }
            g.var_to_qubit[g.vars[v]] = static_cast<int>(v);
        }
        if (!fits) {
            return std::nullopt;
        }
        const int v = static_cast<int>(g.vars.size());
        long long solutions = 0;
        for (long long x = 0; x < (1LL << v); ++x) {
            std::map<std::string, bool> assignment;
            for (int b = 0; b < v; ++b) {
                assignment[g.vars[b]] = (x >> b) & 1;
            }
            solutions += evaluate(g.expr, assignment) ? 1 : 0;
        }
        if (op.iterations) {
            if (*op.iterations < 0) {
                error(i, "invalid_iterations", "iterations must be non-negative");
                return std::nullopt;
            }
            g.iterations = *op.iterations;
        } else {
            g.iterations = default_grover_iterations(v, solutions);
        }
        if (solutions == 0) {
            diags_.push_back(make_warning("no_solutions", where(i) + "expression has no satisfying assignment; " +
                                                              "amplitude amplification has nothing to find"));
            if (!op.iterations) {
                g.iterations = 0;
            }
        }
        g.oracle_ancillas = compile_phase_oracle(g.expr, g.var_to_qubit, spec_.register_size).ancilla_count;
        g.diffuser_ancillas = v >= 3 ? v_chain_ancillas(v - 1) : 0;
        return g;
    }

    const ConceptualSpec &spec_;
    Circuit circuit_;
    Diagnostics diags_;
    std::vector<std::optional<PreparedGrover>> prepared_;
};

[[noreturn]] void schema(const std::string &msg) {
    throw Error("schema_violation", "schema violation: " + msg);
}

std::vector<int> int_list(const json &j, const char *key) {
    if (!j.contains(key)) {
        return {};
    }
    if (!j[key].is_array()) {
        schema(std::string("'") + key + "' must be an array of integers");
    }
    std::vector<int> out;
    for (const auto &v : j[key]) {
        if (!v.is_number_integer()) {
            schema(std::string("'") + key + "' must be an array of integers");
        }
        out.push_back(v.get<int>());
    }
    return out;
}

}  // namespace

SynthesisResult synthesize(const ConceptualSpec &spec) {
    return Synthesizer(spec).run();
}

ConceptualSpec parse_conceptual_spec(const json &doc) {
    if (!doc.is_object()) {
        schema("conceptual spec must be an object");
    }
    ConceptualSpec spec;
    if (!doc.contains("register_size") || !doc["register_size"].is_number_integer()) {
        schema("'register_size' must be an integer");
    }
    spec.register_size = doc["register_size"].get<int>();
    if (doc.contains("name")) {
        if (!doc["name"].is_string()) {
            schema("'name' must be a string");
        }
        spec.name = doc["name"].get<std::string>();
    }
    if (doc.contains("measure_all")) {
        if (!doc["measure_all"].is_boolean()) {
            schema("'measure_all' must be a boolean");
        }
        spec.measure_all = doc["measure_all"].get<bool>();
    }
    if (doc.contains("observables")) {
        if (!doc["observables"].is_array()) {
            schema("'observables' must be an array of strings");
        }
        for (const auto &o : doc["observables"]) {
            if (!o.is_string()) {
                schema("'observables' must be an array of strings");
            }
            spec.observables.push_back(o.get<std::string>());
        }
    }
    if (doc.contains("ops")) {
        if (!doc["ops"].is_array()) {
            schema("'ops' must be an array");
        }
        for (const auto &op : doc["ops"]) {
            if (!op.is_object() || !op.contains("op") || !op["op"].is_string()) {
                schema("every op needs a string 'op' tag");
            }
            const auto tag = op["op"].get<std::string>();
            if (tag == "superposition") {
                spec.ops.emplace_back(ops::Superposition{int_list(op, "qubits")});
            } else if (tag == "bell_pair") {
                auto qs = int_list(op, "qubits");
                if (qs.empty()) {
                    qs = {0, 1};
                }
                if (qs.size() != 2) {
                    schema("bell_pair takes exactly two qubits");
                }
                spec.ops.emplace_back(ops::BellPair{qs[0], qs[1]});
            } else if (tag == "ghz") {
                spec.ops.emplace_back(ops::Ghz{int_list(op, "qubits")});
            } else if (tag == "qft") {
                spec.ops.emplace_back(ops::Qft{int_list(op, "qubits")});
            } else if (tag == "grover_search") {
                ops::GroverSearch g;
                if (!op.contains("expr") || !op["expr"].is_string()) {
                    schema("grover_search needs a string 'expr'");
                }
                g.expression = op["expr"].get<std::string>();
                if (op.contains("var_order")) {
                    if (!op["var_order"].is_array()) {
                        schema("'var_order' must be an array of names");
                    }
                    for (const auto &v : op["var_order"]) {
                        if (!v.is_string()) {
                            schema("'var_order' must be an array of names");
                        }
                        g.var_order.push_back(v.get<std::string>());
                    }
                }
                if (op.contains("iterations") && !op["iterations"].is_null()) {
                    if (!op["iterations"].is_number_integer()) {
                        schema("'iterations' must be an integer");
                    }
                    g.iterations = op["iterations"].get<int>();
                }
                spec.ops.emplace_back(std::move(g));
            } else if (tag == "raw_gate") {
                if (!op.contains("gate") || !op["gate"].is_object()) {
                    schema("raw_gate needs a 'gate' object");
                }
                const auto &g = op["gate"];
                if (!g.contains("kind") || !g["kind"].is_string()) {
                    schema("raw_gate 'kind' must be a string");
                }
                auto kind = parse_gate_kind(g["kind"].get<std::string>());
                if (!kind) {
                    schema("unknown gate kind '" + g["kind"].get<std::string>() + "'");
                }
                GateInstance inst;
                inst.kind = *kind;
                inst.qubits = int_list(g, "qubits");
                inst.clbits = int_list(g, "clbits");
                if (g.contains("params")) {
                    if (!g["params"].is_array()) {
                        schema("'params' must be an array of numbers");
                    }
                    for (const auto &p : g["params"]) {
                        if (!p.is_number()) {
                            schema("'params' must be an array of numbers");
                        }
                        inst.params.push_back(p.get<double>());
                    }
                }
                spec.ops.emplace_back(ops::RawGate{std::move(inst)});
            } else {
                schema("unknown op '" + tag + "'");
            }
        }
    }
    return spec;
}

}  // namespace qcwb
