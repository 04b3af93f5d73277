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

#include <gtest/gtest.h>

#include <cmath>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>

#include "classical_sim.hpp"
#include "oracle_fixtures.hpp"
#include "qcwb/circuit/unitary.hpp"
#include "qcwb/writer/bool_expr.hpp"
#include "qcwb/writer/oracle.hpp"
#include "qcwb/writer/snippet.hpp"
#include "qcwb/writer/synthesize.hpp"

using namespace qcwb;
using Op = BoolExpr::Op;
using fixtures::enumerate_exprs;
using fixtures::fragment_circuit;

namespace {

BoolExpr v(const char *n) {
    return BoolExpr::var(n);
}

// Probability of each data-register value from column 0 of the circuit's unitary.
std::vector<double> data_distribution(const Circuit &c, int data_qubits) {
    Circuit unitary_part = c;
    std::erase_if(unitary_part.gates, [](const GateInstance &g) { return g.kind == GateKind::MEASURE; });
    const auto u = unitary_of(unitary_part);
    std::vector<double> probs(size_t{1} << data_qubits, 0.0);
    const size_t mask = probs.size() - 1;
    for (size_t r = 0; r < u.dim(); ++r) {
        probs[r & mask] += std::norm(u(r, 0));
    }
    return probs;
}

std::string read_file(const std::string &path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST(BoolExprParse, Examples) {
    EXPECT_EQ(parse_bool_expr("a & b"), BoolExpr::binary(Op::And, v("a"), v("b")));
    EXPECT_EQ(parse_bool_expr("!a | b & c"),
              BoolExpr::binary(Op::Or, BoolExpr::negate(v("a")), BoolExpr::binary(Op::And, v("b"), v("c"))));
    try {
        parse_bool_expr("a &");
        FAIL();
    } catch (const ExprSyntaxError &e) {
        EXPECT_EQ(e.offset(), 3u);
    }
}

TEST(BoolExprParse, PrecedenceAndAssociativity) {
    // XOR binds tighter than OR, AND tighter than XOR.
    EXPECT_EQ(parse_bool_expr("a | b ^ c"),
              BoolExpr::binary(Op::Or, v("a"), BoolExpr::binary(Op::Xor, v("b"), v("c"))));
    EXPECT_EQ(parse_bool_expr("a ^ b & c"),
              BoolExpr::binary(Op::Xor, v("a"), BoolExpr::binary(Op::And, v("b"), v("c"))));
    EXPECT_EQ(parse_bool_expr("a & b & c"),
              BoolExpr::binary(Op::And, BoolExpr::binary(Op::And, v("a"), v("b")), v("c")));
    EXPECT_EQ(parse_bool_expr("(a | b) & 1"),
              BoolExpr::binary(Op::And, BoolExpr::binary(Op::Or, v("a"), v("b")), BoolExpr::constant(true)));
    EXPECT_EQ(parse_bool_expr("!!x_1"), BoolExpr::negate(BoolExpr::negate(v("x_1"))));
}

TEST(BoolExprParse, Errors) {
    auto offset_of = [](const char *text) -> long {
        try {
            parse_bool_expr(text);
        } catch (const ExprSyntaxError &e) {
            return static_cast<long>(e.offset());
        }
        return -1;
    };
    EXPECT_EQ(offset_of(""), 0);
    EXPECT_EQ(offset_of("(a"), 2);
    EXPECT_EQ(offset_of("a b"), 2);
    EXPECT_EQ(offset_of("a & 2"), 4);
    EXPECT_EQ(offset_of("a)"), 1);
    EXPECT_THROW(parse_bool_expr("a&b&c&d&e&f&g&h&i&j&k"), Error);
    EXPECT_NO_THROW(parse_bool_expr("a&b&c&d&e&f&g&h&i&j&a"));
}

namespace {

BoolExpr random_expr(std::mt19937_64 &rng, int depth, int n_vars) {
    std::uniform_int_distribution<int> pick(0, depth <= 0 ? 1 : 5);
    switch (pick(rng)) {
        case 0:
            return BoolExpr::var("v" + std::to_string(rng() % n_vars));
        case 1:
            return rng() % 4 == 0 ? BoolExpr::constant(rng() % 2) : BoolExpr::var("v" + std::to_string(rng() % n_vars));
        case 2:
            return BoolExpr::negate(random_expr(rng, depth - 1, n_vars));
        default: {
            const Op ops[] = {Op::And, Op::Or, Op::Xor};
            return BoolExpr::binary(ops[rng() % 3], random_expr(rng, depth - 1, n_vars),
                                    random_expr(rng, depth - 1, n_vars));
        }
    }
}

}  // namespace

TEST(BoolExprProperty, PrettyPrintRoundTrip) {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 2000; ++i) {
        const BoolExpr e = random_expr(rng, 6, 10);
        const std::string text = pretty_print(e);
        EXPECT_EQ(parse_bool_expr(text), e) << text;
    }
}

TEST(BoolExpr, FreeVariablesAndEvaluate) {
    const auto e = parse_bool_expr("b & !a | c ^ b");
    EXPECT_EQ(free_variables(e), (std::vector<std::string>{"a", "b", "c"}));
    EXPECT_TRUE(evaluate(e, {{"a", false}, {"b", true}, {"c", true}}));
    EXPECT_FALSE(evaluate(e, {{"a", true}, {"b", true}, {"c", true}}));
    EXPECT_THROW(evaluate(e, {{"a", true}}), Error);
}


TEST(PhaseOracle, AndIsDiagWithMinusOneOnEleven) {
    const auto f = compile_phase_oracle(parse_bool_expr("a & b"), {{"a", 0}, {"b", 1}}, 2);
    const auto u = unitary_of(fragment_circuit(f));
    // Restricted to ancillas in |0>: diag(1,1,1,-1).
    const double expect[4] = {1, 1, 1, -1};
    for (size_t x = 0; x < 4; ++x) {
        for (size_t r = 0; r < u.dim(); ++r) {
            const cplx want = r == x ? cplx(expect[x]) : cplx(0.0);
            EXPECT_NEAR(std::abs(u(r, x) - want), 0.0, 1e-12);
        }
    }
}

TEST(PhaseOracle, SingleVariableIsZ) {
    const auto f = compile_phase_oracle(parse_bool_expr("a"), {{"a", 0}}, 1);
    EXPECT_EQ(f.ancilla_count, 0);
    EXPECT_LE(unitary_of(fragment_circuit(f)).max_abs_diff(Matrix(2, {1, 0, 0, -1})), 1e-12);
}

TEST(PhaseOracle, ConstantFalseIsIdentity) {
    const auto f = compile_phase_oracle(BoolExpr::constant(false), {}, 1);
    const auto u = unitary_of(fragment_circuit(f));
    for (size_t x = 0; x < 2; ++x) {
        EXPECT_NEAR(std::abs(u(x, x) - cplx(1.0)), 0.0, 1e-12);
    }
}

TEST(PhaseOracle, Errors) {
    EXPECT_THROW(compile_phase_oracle(parse_bool_expr("a & z"), {{"a", 0}}, 1), Error);
    EXPECT_THROW(compile_phase_oracle(parse_bool_expr("a & b"), {{"a", 0}, {"b", 0}}, 2), Error);
    EXPECT_THROW(compile_phase_oracle(parse_bool_expr("a"), {{"a", 3}}, 2), Error);
}


TEST(PhaseOracleProperty, SoundnessOverFourVariables) {
    const std::vector<std::string> names{"a", "b", "c", "d"};
    std::map<std::string, int> mapping;
    for (int i = 0; i < 4; ++i) {
        mapping[names[i]] = i;
    }
    const auto exprs = enumerate_exprs(names, 3);
    ASSERT_GT(exprs.size(), 40000u);
    size_t checked_with_unitary = 0;
    for (const auto &e : exprs) {
        const auto frag = compile_phase_oracle(e, mapping, 4);
        for (uint64_t x = 0; x < 16; ++x) {
            std::map<std::string, bool> assignment;
            for (int i = 0; i < 4; ++i) {
                assignment[names[i]] = (x >> i) & 1;
            }
            const auto out = fixtures::run_classical(frag.gates, {x, 1});
            ASSERT_EQ(out.bits, x) << pretty_print(e);
            ASSERT_EQ(out.sign, evaluate(e, assignment) ? -1 : 1) << pretty_print(e);
        }
        // Dense cross-check on a sample that fits the unitary oracle.
        if (frag.width() <= 7 && checked_with_unitary < 200 && (std::hash<std::string>{}(pretty_print(e)) % 97 == 0)) {
            const auto u = unitary_of(fragment_circuit(frag));
            for (size_t x = 0; x < 16; ++x) {
                std::map<std::string, bool> assignment;
                for (int i = 0; i < 4; ++i) {
                    assignment[names[i]] = (x >> i) & 1;
                }
                const double sign = evaluate(e, assignment) ? -1.0 : 1.0;
                EXPECT_NEAR(std::abs(u(x, x) - cplx(sign)), 0.0, 1e-9);
            }
            ++checked_with_unitary;
        }
    }
    EXPECT_GT(checked_with_unitary, 20u);
}

TEST(MultiControlledX, VChainMatchesTruthTable) {
    for (int k = 1; k <= 6; ++k) {
        std::vector<int> controls(k);
        for (int i = 0; i < k; ++i) {
            controls[i] = i;
        }
        const int target = k;
        const auto gates = mcx_v_chain(controls, target, k + 1);
        for (uint64_t x = 0; x < (uint64_t{1} << (k + 1)); ++x) {
            const auto out = fixtures::run_classical(gates, {x, 1});
            const bool all = (x & ((uint64_t{1} << k) - 1)) == ((uint64_t{1} << k) - 1);
            EXPECT_EQ(out.bits, all ? x ^ (uint64_t{1} << target) : x);
        }
    }
}

TEST(Pauli, Examples) {
    const auto zz = parse_pauli_observable("ZZ", 2);
    EXPECT_EQ(zz.label, "ZZ");
    EXPECT_EQ(zz.coefficient, 1.0);
    try {
        parse_pauli_observable("ZZI", 2);
        FAIL();
    } catch (const Error &e) {
        EXPECT_NE(std::string(e.what()).find("observable length mismatch"), std::string::npos);
    }
    try {
        parse_pauli_observable("ZA", 2);
        FAIL();
    } catch (const Error &e) {
        EXPECT_NE(std::string(e.what()).find("invalid Pauli character 'A'"), std::string::npos);
    }
}

TEST(Synthesize, BellPairWithMeasurement) {
    ConceptualSpec spec;
    spec.register_size = 2;
    spec.ops = {ops::BellPair{0, 1}};
    spec.measure_all = true;
    const auto res = synthesize(spec);
    EXPECT_TRUE(res.diagnostics.empty());
    const auto &g = res.circuit.gates;
    ASSERT_EQ(g.size(), 4u);
    EXPECT_EQ(g[0].kind, GateKind::H);
    EXPECT_EQ(g[1].kind, GateKind::CX);
    EXPECT_EQ(g[1].qubits, (std::vector<int>{0, 1}));
    EXPECT_EQ(g[2].kind, GateKind::MEASURE);
    EXPECT_EQ(g[3].kind, GateKind::MEASURE);
    EXPECT_EQ(res.circuit.n_clbits, 2);
}

TEST(Synthesize, GroverTwoQubitsFindsElevenWithCertainty) {
    ConceptualSpec spec;
    spec.register_size = 2;
    spec.ops = {ops::GroverSearch{"a & b", {}, 1}};
    spec.measure_all = true;
    const auto res = synthesize(spec);
    ASSERT_FALSE(has_errors(res.diagnostics));
    const auto probs = data_distribution(res.circuit, 2);
    EXPECT_NEAR(probs[3], 1.0, 1e-9);
    EXPECT_EQ(res.circuit.metadata.at("ancillas"), "1");
}

TEST(Synthesize, GroverVariableExceedsRegister) {
    ConceptualSpec spec;
    spec.register_size = 2;
    spec.ops = {ops::GroverSearch{"a & b & c", {}, std::nullopt}};
    const auto res = synthesize(spec);
    ASSERT_TRUE(has_errors(res.diagnostics));
    bool found = false;
    for (const auto &d : res.diagnostics) {
        found |= d.message.find("variable c exceeds register") != std::string::npos;
    }
    EXPECT_TRUE(found);
}

TEST(Synthesize, GroverDiagnostics) {
    ConceptualSpec spec;
    spec.register_size = 3;
    spec.ops = {ops::GroverSearch{"a & !a", {}, std::nullopt}};
    auto res = synthesize(spec);
    EXPECT_FALSE(has_errors(res.diagnostics));
    ASSERT_FALSE(res.diagnostics.empty());
    EXPECT_EQ(res.diagnostics[0].code, "no_solutions");

    spec.ops = {ops::GroverSearch{"a & b", {"a"}, 1}};
    EXPECT_TRUE(has_errors(synthesize(spec).diagnostics));
    spec.ops = {ops::GroverSearch{"a & (", {}, 1}};
    EXPECT_TRUE(has_errors(synthesize(spec).diagnostics));
    spec.ops = {ops::GroverSearch{"a & b", {}, -1}};
    EXPECT_TRUE(has_errors(synthesize(spec).diagnostics));
}

TEST(Synthesize, DefaultIterations) {
    EXPECT_EQ(default_grover_iterations(2, 1), 1);
    EXPECT_EQ(default_grover_iterations(3, 1), 2);
    EXPECT_EQ(default_grover_iterations(4, 1), 3);
    EXPECT_EQ(default_grover_iterations(2, 4), 0);
    EXPECT_EQ(default_grover_iterations(3, 0), 0);
}

TEST(SynthesizeProperty, GroverSingleMarkedStateAtOptimalIterations) {
    for (int n : {2, 3}) {
        for (int marked = 0; marked < (1 << n); ++marked) {
            std::string expr;
            const char names[] = {'a', 'b', 'c'};
            for (int i = 0; i < n; ++i) {
                if (i) {
                    expr += " & ";
                }
                if (!((marked >> i) & 1)) {
                    expr += "!";
                }
                expr += names[i];
            }
            ConceptualSpec spec;
            spec.register_size = n;
            spec.ops = {ops::GroverSearch{expr, {}, std::nullopt}};
            const auto res = synthesize(spec);
            ASSERT_FALSE(has_errors(res.diagnostics)) << expr;
            const auto probs = data_distribution(res.circuit, n);
            EXPECT_GE(probs[marked], 0.9) << expr;
        }
    }
}

TEST(Synthesize, FourVariableGroverUsesVChain) {
    ConceptualSpec spec;
    spec.register_size = 4;
    spec.ops = {ops::GroverSearch{"a & b & c & d", {}, std::nullopt}};
    const auto res = synthesize(spec);
    ASSERT_FALSE(has_errors(res.diagnostics));
    EXPECT_LE(res.circuit.n_qubits, 10);
    const auto probs = data_distribution(res.circuit, 4);
    EXPECT_GE(probs[15], 0.9);
}

TEST(Synthesize, SuperpositionGhzAndRegisterDefaults) {
    ConceptualSpec spec;
    spec.register_size = 3;
    spec.ops = {ops::Ghz{}};
    auto res = synthesize(spec);
    auto probs = data_distribution(res.circuit, 3);
    EXPECT_NEAR(probs[0], 0.5, 1e-12);
    EXPECT_NEAR(probs[7], 0.5, 1e-12);

    spec.ops = {ops::Superposition{{0, 2}}};
    res = synthesize(spec);
    probs = data_distribution(res.circuit, 3);
    EXPECT_NEAR(probs[0] + probs[1] + probs[4] + probs[5], 1.0, 1e-12);
    EXPECT_NEAR(probs[0], 0.25, 1e-12);
    EXPECT_NEAR(probs[5], 0.25, 1e-12);

    spec.ops = {ops::Superposition{{0, 5}}};
    EXPECT_TRUE(has_errors(synthesize(spec).diagnostics));
}

TEST(Synthesize, QftMatchesDiscreteFourierTransform) {
    for (int n = 1; n <= 4; ++n) {
        ConceptualSpec spec;
        spec.register_size = n;
        spec.ops = {ops::Qft{}};
        const auto res = synthesize(spec);
        ASSERT_TRUE(res.diagnostics.empty());
        const size_t dim = size_t{1} << n;
        Matrix dft(dim);
        for (size_t r = 0; r < dim; ++r) {
            for (size_t c = 0; c < dim; ++c) {
                dft(r, c) = std::polar(1.0 / std::sqrt(double(dim)), 2.0 * std::numbers::pi * double(r * c) / double(dim));
            }
        }
        EXPECT_TRUE(equal_up_to_global_phase(unitary_of(res.circuit), dft, 1e-9)) << n;
    }
}

TEST(Synthesize, ObservablesAndRawGates) {
    ConceptualSpec spec;
    spec.register_size = 2;
    spec.ops = {ops::RawGate{GateInstance{0, GateKind::RZ, {1}, {0.5}, {}}},
                ops::RawGate{GateInstance{0, GateKind::RZ, {1}, {}, {}}}};
    spec.observables = {"ZZ", "ZZZ", "XQ"};
    const auto res = synthesize(spec);
    EXPECT_EQ(res.circuit.gates.size(), 1u);
    EXPECT_EQ(res.circuit.observables.size(), 1u);
    int errors = 0;
    for (const auto &d : res.diagnostics) {
        errors += d.severity == Severity::Error;
    }
    EXPECT_EQ(errors, 3);
}

TEST(Synthesize, ObservablesPaddedForAncillas) {
    ConceptualSpec spec;
    spec.register_size = 2;
    spec.ops = {ops::GroverSearch{"a & b", {}, 1}};
    spec.observables = {"ZX"};
    const auto res = synthesize(spec);
    EXPECT_TRUE(res.diagnostics.empty());
    ASSERT_EQ(res.circuit.observables.size(), 1u);
    EXPECT_EQ(res.circuit.observables[0].label, "IZX");
}

TEST(SynthesizeProperty, Deterministic) {
    ConceptualSpec spec;
    spec.register_size = 3;
    spec.ops = {ops::Qft{}, ops::GroverSearch{"a ^ b | c", {"c", "a", "b"}, std::nullopt}, ops::BellPair{2, 0}};
    spec.measure_all = true;
    const auto a = synthesize(spec);
    const auto b = synthesize(spec);
    EXPECT_EQ(a.circuit, b.circuit);
    EXPECT_EQ(a.diagnostics, b.diagnostics);
}

TEST(ConceptualSpecJson, ParsesAllVariants) {
    const auto doc = json::parse(R"({
        "name": "demo", "register_size": 3, "measure_all": true, "observables": ["ZZI"],
        "ops": [
            {"op": "superposition", "qubits": [0]},
            {"op": "bell_pair", "qubits": [1, 2]},
            {"op": "ghz"},
            {"op": "qft", "qubits": [0, 1]},
            {"op": "grover_search", "expr": "a | b", "var_order": ["b", "a"], "iterations": 1},
            {"op": "raw_gate", "gate": {"kind": "rx", "qubits": [2], "params": [0.25]}}
        ]})");
    const auto spec = parse_conceptual_spec(doc);
    EXPECT_EQ(spec.ops.size(), 6u);
    EXPECT_EQ(spec.name, "demo");
    EXPECT_TRUE(std::holds_alternative<ops::GroverSearch>(spec.ops[4]));
    EXPECT_EQ(std::get<ops::GroverSearch>(spec.ops[4]).var_order, (std::vector<std::string>{"b", "a"}));
    EXPECT_FALSE(has_errors(synthesize(spec).diagnostics));

    EXPECT_THROW(parse_conceptual_spec(json::parse(R"({"ops": []})")), Error);
    EXPECT_THROW(parse_conceptual_spec(json::parse(R"({"register_size": 2, "ops": [{"op": "teleport"}]})")), Error);
    EXPECT_THROW(parse_conceptual_spec(json::parse(R"({"register_size": 2, "ops": [{"op": "grover_search"}]})")),
                 Error);
}

namespace {

Circuit bell_measured() {
    ConceptualSpec spec;
    spec.name = "bell";
    spec.register_size = 2;
    spec.ops = {ops::BellPair{0, 1}};
    spec.measure_all = true;
    return synthesize(spec).circuit;
}

}  // namespace

TEST(Snippet, OpenQasmDelegates) {
    const auto c = bell_measured();
    const auto text = emit_snippet(c, SnippetDialect::OpenQasm2);
    EXPECT_NE(text.find("h q[0];\ncx q[0],q[1];\n"), std::string::npos);
    EXPECT_EQ(text, emit_snippet(c, SnippetDialect::OpenQasm2));
}

TEST(Snippet, QiskitGoldenFiles) {
    const auto c = bell_measured();
    EXPECT_EQ(emit_snippet(c, SnippetDialect::Qiskit), read_file(QCWB_GOLDEN_DIR "/bell_qiskit.py"));
    ConceptualSpec spec;
    spec.name = "grover";
    spec.register_size = 2;
    spec.ops = {ops::GroverSearch{"a & b", {}, 1}, ops::RawGate{GateInstance{0, GateKind::RZ, {0}, {std::numbers::pi / 4}, {}}}};
    spec.observables = {"ZZ"};
    spec.measure_all = true;
    const auto grover = synthesize(spec).circuit;
    EXPECT_EQ(emit_snippet(grover, SnippetDialect::Qiskit), read_file(QCWB_GOLDEN_DIR "/grover_qiskit.py"));
    EXPECT_EQ(emit_snippet(grover, SnippetDialect::Qiskit), emit_snippet(grover, SnippetDialect::Qiskit));
}

TEST(Snippet, DialectNames) {
    for (auto d : {SnippetDialect::OpenQasm2, SnippetDialect::Qiskit, SnippetDialect::WorkbenchCli}) {
        EXPECT_EQ(parse_dialect(dialect_name(d)), d);
    }
    EXPECT_FALSE(parse_dialect("cirq"));
    EXPECT_THROW(emit_snippet(bell_measured(), SnippetDialect::WorkbenchCli), Error);
}
