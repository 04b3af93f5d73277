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

// Acceptance run: one PASS/FAIL line per numbered criterion.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <regex>
#include <sstream>

#include "adjust_oracle.hpp"
#include "equivalence.hpp"
#include "oracle_fixtures.hpp"
#include "qcwb/machine/catalog.hpp"
#include "qcwb/machine/generate.hpp"
#include "qcwb/machine/properties.hpp"
#include "qcwb/service/api.hpp"
#include "qcwb/service/cli.hpp"
#include "qcwb/service/operations.hpp"
#include "qcwb/simulator/adjust.hpp"
#include "qcwb/simulator/statevector.hpp"
#include "qcwb/transpiler/esp.hpp"
#include "qcwb/writer/synthesize.hpp"
#include "temp_dir.hpp"
#include "test_util.hpp"

using namespace qcwb;

namespace {

const std::string kSourceDir = QCWB_SOURCE_DIR;
const std::string kBinDir = QCWB_BIN_DIR;

/// Collects failures for one criterion; the first few are reported.
struct Check {
    int failures = 0;
    std::string first;

    void expect(bool ok, const std::string &what) {
        if (!ok) {
            if (failures++ == 0) {
                first = what;
            }
        }
    }
    void near(double got, double want, double tol, const std::string &what) {
        std::ostringstream s;
        s.precision(17);
        s << what << ": got " << got << ", want " << want << " +- " << tol;
        expect(std::abs(got - want) <= tol, s.str());
    }
};

Circuit bell() {
    Circuit c;
    c.n_qubits = 2;
    c.n_clbits = 2;
    append_gate(c, GateKind::H, {0});
    append_gate(c, GateKind::CX, {0, 1});
    append_gate(c, GateKind::MEASURE, {0}, {}, {0});
    append_gate(c, GateKind::MEASURE, {1}, {}, {1});
    return c;
}

Counts make_counts(int n_bits, std::map<std::string, int64_t> m) {
    Counts c;
    c.n_bits = n_bits;
    c.counts = std::move(m);
    for (auto &[k, v] : c.counts) {
        c.shots += v;
    }
    return c;
}

// Success factor of a compiled gate, read straight from the machine tables.
double success_from_tables(const MachineProperties &m, const GateInstance &g) {
    if (g.kind == GateKind::BARRIER) {
        return 1.0;
    }
    if (g.kind == GateKind::MEASURE) {
        return 1.0 - m.qubits.at(g.qubits[0]).readout_error;
    }
    for (const auto &entry : m.gates) {
        if (entry.kind == gate_name(g.kind) && entry.qubits == g.qubits) {
            return 1.0 - entry.error;
        }
    }
    throw std::runtime_error("no table entry");
}

Check esp_fidelity() {
    Check ck;
    MachineProperties m = generate_machine(7, 2, parse_topology("line"), 1.0);
    for (auto &g : m.gates) {
        if (g.kind == "sx") {
            g.error = g.qubits[0] == 0 ? 0.001 : 0.01;
        }
    }
    CompiledCircuit cc;
    cc.circuit.n_qubits = 2;
    for (int rep = 0; rep < 2; ++rep) {
        append_gate(cc.circuit, GateKind::SX, {0});
        append_gate(cc.circuit, GateKind::SX, {1});
    }
    cc.layers = layerize(cc.circuit);
    const EspReport r = compute_esp(cc, m);
    ck.expect(r.layerwise.size() == 2 && r.cumulative.size() == 2, "fixture must have two layers");
    if (ck.failures) {
        return ck;
    }
    const double layer = (1 - 0.001) * (1 - 0.01);
    ck.near(layer, 0.98901, 1e-12, "oracle layer product");
    ck.near(r.layerwise[0], 0.98901, 1e-9, "layerwise[0]");
    ck.near(r.layerwise[1], 0.98901, 1e-9, "layerwise[1]");
    ck.near(r.cumulative[0], 0.98901, 1e-9, "cumulative[0]");
    ck.near(r.cumulative[1], 0.98901 * 0.98901, 1e-9, "cumulative[1]");
    ck.near(r.cumulative[1], 0.978141, 5e-7, "cumulative[1] rounded");

    std::mt19937_64 rng(101);
    const auto ring = generate_machine(3, 5, parse_topology("ring"), 2.0);
    for (int i = 0; i < 100; ++i) {
        fixtures::RandomCircuitOptions opt;
        opt.allow_measure = true;
        const CompiledCircuit c = transpile(fixtures::random_circuit(rng, opt), ring);
        const EspReport e = compute_esp(c, ring);
        std::map<int, const GateInstance *> by_id;
        for (const auto &g : c.circuit.gates) {
            by_id[g.id] = &g;
        }
        ck.expect(e.cumulative.size() == c.layers.size(), "one cumulative entry per layer");
        double running = 1.0;
        for (size_t l = 0; l < c.layers.size() && l < e.cumulative.size(); ++l) {
            for (int id : c.layers[l]) {
                running *= success_from_tables(ring, *by_id.at(id));
            }
            ck.near(e.cumulative[l], running, 1e-10, "circuit " + std::to_string(i) + " layer " + std::to_string(l));
        }
    }
    return ck;
}

Check transpiler_correctness() {
    Check ck;
    const std::vector<std::pair<std::string, int>> shapes = {
        {"line", 2}, {"line", 3}, {"line", 5}, {"line", 6}, {"ring", 3},
        {"ring", 4}, {"ring", 5}, {"ring", 6}, {"grid:2x2", 4}, {"grid:2x3", 6}};
    std::mt19937_64 rng(2025);
    int circuits = 0;
    for (size_t mi = 0; mi < shapes.size(); ++mi) {
        const auto &[topo, n] = shapes[mi];
        const auto m = generate_machine(100 + mi, n, parse_topology(topo), 1.0);
        fixtures::RandomCircuitOptions opt;
        opt.max_qubits = std::min(5, n);
        opt.max_gates = 15;
        opt.allow_measure = true;
        for (int i = 0; i < 20; ++i, ++circuits) {
            const Circuit c = fixtures::random_circuit(rng, opt);
            const std::string where = topo + std::to_string(n) + " circuit " + std::to_string(i);
            const CompiledCircuit cc = transpile(c, m);
            const std::string violation = fixtures::compiled_violation(c, cc, m);
            ck.expect(violation.empty(), where + ": " + violation);
            ck.expect(fixtures::layout_equivalent(c, cc, 1e-8), where + ": not equivalent");
        }
    }
    ck.expect(circuits == 200, "expected 200 circuits");
    return ck;
}

Check oracle_and_grover() {
    Check ck;
    const std::vector<std::string> names{"a", "b", "c"};
    const std::map<std::string, int> mapping{{"a", 0}, {"b", 1}, {"c", 2}};
    const auto exprs = fixtures::enumerate_exprs(names, 3);
    for (const auto &e : exprs) {
        const auto frag = compile_phase_oracle(e, mapping, 3);
        const Circuit c = fixtures::fragment_circuit(frag);
        for (size_t x = 0; x < 8; ++x) {
            State s(size_t{1} << c.n_qubits, 0.0);
            s[x] = 1.0;
            for (const auto &g : c.gates) {
                apply_gate(s, g, ExecPolicy::Parallel);
            }
            const bool f = evaluate(e, {{"a", x & 1}, {"b", (x >> 1) & 1}, {"c", (x >> 2) & 1}});
            const cplx want = f ? -1.0 : 1.0;
            double leak = 0;
            for (size_t r = 0; r < s.size(); ++r) {
                if (r != x) {
                    leak += std::norm(s[r]);
                }
            }
            ck.expect(std::abs(s[x] - want) <= 1e-9 && leak <= 1e-18,
                      pretty_print(e) + " wrong on basis state " + std::to_string(x));
        }
    }
    ck.expect(exprs.size() > 20000, "enumeration too small");

    ConceptualSpec spec;
    spec.register_size = 2;
    spec.ops = {ops::GroverSearch{"a & b", {}, 1}};
    const auto res = synthesize(spec);
    ck.expect(!has_errors(res.diagnostics), "grover synthesis reported errors");
    const auto probs = probabilities(statevector(res.circuit, ExecPolicy::Serial));
    double p11 = 0;
    for (size_t i = 0; i < probs.size(); ++i) {
        if ((i & 3) == 3) {
            p11 += probs[i];
        }
    }
    ck.near(p11, 1.0, 1e-9, "P(11)");
    return ck;
}

Check monte_carlo() {
    Check ck;
    const int trials = 10000;
    {
        const auto ideal = make_counts(2, {{"00", 300}, {"10", 211}, {"11", 13}});
        const auto a = adjust_counts(ideal, 0.0, 2, trials, 1, {.keep_raw = true});
        const std::vector<uint32_t> want{300, 0, 211, 13};
        bool all = a.raw.size() == static_cast<size_t>(trials);
        for (const auto &row : a.raw) {
            all = all && row == want;
        }
        ck.expect(all, "(a) p_err=0 changed a trial");
    }
    {
        const auto a = adjust_counts(make_counts(1, {{"0", 100}}), 1.0, 1, trials, 2, {.keep_raw = true});
        bool all = a.raw.size() == static_cast<size_t>(trials);
        for (const auto &row : a.raw) {
            all = all && row == std::vector<uint32_t>{0, 100};
        }
        ck.expect(all, "(b) p_err=1 did not flip every shot");
    }
    {
        const auto a = adjust_counts(make_counts(2, {{"00", 1000}}), 0.2, 2, trials, 3);
        // Per-trial counts are binomial: 00 ~ B(1000, 0.8); each other ~ B(1000, 0.2/3).
        const double se_keep = std::sqrt(1000 * 0.8 * 0.2 / trials);
        const double q = 0.2 / 3;
        const double se_move = std::sqrt(1000 * q * (1 - q) / trials);
        ck.near(a.outcomes.at("00").mean, 800, 4 * se_keep, "(c) mean 00");
        for (const char *s : {"01", "10", "11"}) {
            ck.near(a.outcomes.at(s).mean, 1000 * q, 4 * se_move, std::string("(c) mean ") + s);
        }
    }
    {
        struct Case {
            Counts ideal;
            double p;
            int n;
        };
        const std::vector<Case> cases = {
            {make_counts(1, {{"0", 40}, {"1", 24}}), 0.3, 1},
            {make_counts(2, {{"00", 32}, {"11", 32}}), 0.1, 2},
            {make_counts(3, {{"000", 8}, {"011", 24}, {"110", 16}}), 0.25, 3},
            {make_counts(3, {{"101", 64}}), 0.6, 3},
            {make_counts(2, {{"01", 5}}), 0.5, 2},
        };
        const int ks_trials = 4000;
        for (size_t ci = 0; ci < cases.size(); ++ci) {
            const auto &cs = cases[ci];
            const auto batched = adjust_counts(cs.ideal, cs.p, cs.n, ks_trials, 40 + ci, {.keep_raw = true});
            const auto brute = fixtures::brute_force_adjust(cs.ideal, cs.p, cs.n, ks_trials, 80 + ci);
            for (size_t v = 0; v < brute.size(); ++v) {
                std::vector<double> mine(ks_trials);
                for (int t = 0; t < ks_trials; ++t) {
                    mine[t] = batched.raw[t][v];
                }
                const double d = fixtures::ks_statistic(mine, brute[v]);
                ck.expect(d < 0.05, "(d) case " + std::to_string(ci) + " string " + std::to_string(v) +
                                        " KS=" + std::to_string(d));
            }
        }
    }
    return ck;
}

Check shots_reproduction() {
    Check ck;
    const auto m = generate_machine(7, 2, parse_topology("line"), 1.0);
    const uint64_t seed = 7;
    const auto enough = run_error_adjust(bell(), m, 2000, 10000, seed, 0).adjusted.outcomes;
    ck.expect(!ci_overlap(enough.at("00"), enough.at("01")), "shots=2000: 00 and 01 intervals overlap");

    const auto few = run_error_adjust(bell(), m, 8, 10000, seed, 0).adjusted.outcomes;
    bool any = false;
    for (const char *a : {"00", "11"}) {
        for (const char *b : {"01", "10"}) {
            any = any || ci_overlap(few.at(a), few.at(b));
        }
    }
    ck.expect(any, "shots=8: no cross-pair overlap");
    return ck;
}

std::string run_cli_text(const std::vector<std::string> &args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return std::to_string(code) + "\n" + out.str() + "\n" + err.str();
}

Check determinism() {
    Check ck;
    const std::string cat = kSourceDir + "/catalog";
    const std::string demo = kSourceDir + "/demo";
    const std::vector<std::vector<std::string>> commands = {
        {"synth", "--spec", demo + "/bell_spec.json"},
        {"synth", "--spec", demo + "/grover_spec.json", "--dialect", "qiskit"},
        {"machines", "list"},
        {"--json", "machines", "list"},
        {"machines", "show", "ring5"},
        {"machines", "select", "grid2x3", "--path", "qubits[4].t2_us", "--path", "gates[cx:1,4].error"},
        {"machines", "snippet", "line3", "--path", "qubits[0].t1_us", "--path", "coupling_map"},
        {"machines", "snippet", "line3", "--path", "qubits[0].t1_us", "--dialect", "qiskit"},
        {"machines", "generate", "--seed", "5", "--qubits", "4", "--topology", "ring"},
        {"transpile", "--circuit", demo + "/ghz3.qasm", "--machine", "ring5"},
        {"esp", "--circuit", demo + "/bell.json", "--machine", "line3"},
        {"--json", "esp", "--circuit", demo + "/bell.json", "--machine", "line3"},
        {"simulate", "--circuit", demo + "/bell.json", "--shots", "500", "--seed", "3"},
        {"adjust", "--circuit", demo + "/bell.json", "--machine", "line2", "--shots", "400", "--trials", "3000",
         "--seed", "11"},
        {"adjust", "--circuit", demo + "/ghz3.qasm", "--machine", "line3", "--shots", "100", "--trials", "2000",
         "--seed", "4", "--table"},
        {"viewmodel", "--circuit", demo + "/bell.json", "--machine", "grid2x3"},
        {"machines", "show", "nosuch"},
    };
    for (auto args : commands) {
        args.insert(args.begin(), {"--catalog", cat});
        std::string joined;
        for (const auto &a : args) {
            joined += a + " ";
        }
        const std::string first = run_cli_text(args);
        ck.expect(first == run_cli_text(args), "cli differs across runs: " + joined);
    }
    for (const char *file : {"/bell.json", "/ghz3.qasm"}) {
        std::vector<std::string> base = {"--catalog", cat, "adjust", "--circuit", demo + file, "--machine", "line3",
                                         "--shots", "700", "--trials", "5000", "--seed", "21", "--threads"};
        auto one = base, four = base;
        one.push_back("1");
        four.push_back("4");
        ck.expect(run_cli_text(one) == run_cli_text(four), std::string("adjust 1 vs 4 threads differs for ") + file);
    }

    auto catalog = std::make_shared<Catalog>(load_catalog(cat));
    ServiceConfig cfg;
    cfg.catalog_dir = cat;
    const Api api(cfg, catalog);
    std::ifstream bell_in(demo + "/bell.json");
    const json bell_doc = json::parse(bell_in);
    std::ifstream spec_in(demo + "/grover_spec.json");
    const json spec_doc = json::parse(spec_in);
    const std::vector<ApiRequest> requests = {
        {"GET", "/machines", {}, ""},
        {"GET", "/machines", {{"diagnostics", "1"}}, ""},
        {"GET", "/machines/line3", {}, ""},
        {"POST", "/machines/grid2x3/snippet", {}, json{{"paths", {"qubits[1].t1_us", "status.pending_jobs"}}}.dump()},
        {"POST", "/circuits/synthesize", {}, json{{"spec", spec_doc}}.dump()},
        {"POST", "/transpile", {}, json{{"circuit", bell_doc}, {"machine", "ring5"}}.dump()},
        {"POST", "/simulate", {}, json{{"circuit", bell_doc}, {"shots", 900}, {"seed", 2}}.dump()},
        {"POST", "/simulate", {}, json{{"circuit", bell_doc}, {"shots", 900}}.dump()},
        {"POST", "/error-adjust", {}, json{{"circuit", bell_doc}, {"machine", "line2"}, {"trials", 3000}, {"seed", 8}}.dump()},
        {"POST", "/viewmodel", {}, json{{"circuit", bell_doc}, {"machine", "line3"}}.dump()},
        {"POST", "/transpile", {}, "{broken"},
    };
    for (const auto &req : requests) {
        const auto a = api.handle(req);
        const auto b = api.handle(req);
        ck.expect(a.status == b.status && a.body == b.body, "api differs across runs: " + req.method + " " + req.path);
    }
    return ck;
}

// Looks a property path up in the raw machine document.
std::optional<json> raw_lookup(const json &doc, const std::string &path) {
    static const std::regex qubit(R"(qubits\[(\d+)\]\.(\w+))");
    static const std::regex gate(R"(gates\[(\w+):([\d,]+)\]\.(\w+))");
    static const std::regex status(R"(status\.(\w+))");
    std::smatch mt;
    if (path == "name" || path == "basis_gates" || path == "coupling_map") {
        return doc.at(path);
    }
    if (std::regex_match(path, mt, status)) {
        return doc.at("status").at(mt[1].str());
    }
    if (std::regex_match(path, mt, qubit)) {
        const size_t i = std::stoul(mt[1]);
        if (i >= doc.at("qubits").size()) {
            return std::nullopt;
        }
        return doc["qubits"][i].at(mt[2].str());
    }
    if (std::regex_match(path, mt, gate)) {
        std::vector<int> qs;
        std::stringstream ss(mt[2].str());
        for (std::string part; std::getline(ss, part, ',');) {
            qs.push_back(std::stoi(part));
        }
        for (const auto &g : doc.at("gates")) {
            if (g.at("kind") == mt[1].str() && g.at("qubits").get<std::vector<int>>() == qs) {
                return g.at(mt[3].str() == "duration_ns" ? "duration_ns" : "error");
            }
        }
    }
    return std::nullopt;
}

std::pair<int, std::string> run_shell(const std::string &script_path, const std::string &catalog) {
    const std::string cmd = "PATH='" + kBinDir + "':\"$PATH\" QCWB_CATALOG_DIR='" + catalog + "' sh '" + script_path +
                            "' 2>/dev/null";
    FILE *pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        return {-1, ""};
    }
    std::string out;
    std::array<char, 4096> buf;
    while (size_t n = fread(buf.data(), 1, buf.size(), pipe)) {
        out.append(buf.data(), n);
    }
    return {pclose(pipe), out};
}

Check snippet_faithfulness() {
    Check ck;
    const std::string cat = kSourceDir + "/catalog";
    const CatalogSnapshot snap = load_catalog(cat);
    std::map<std::string, json> raw;
    for (const auto &[name, m] : snap.machines) {
        std::ifstream in(cat + "/" + name + ".machine.json");
        raw[name] = json::parse(in);
    }
    ck.expect(raw.size() >= 2, "catalog fixture missing");
    if (ck.failures) {
        return ck;
    }
    fixtures::TempDir tmp;
    std::mt19937_64 rng(77);
    for (int sel = 0; sel < 50; ++sel) {
        auto it = snap.machines.begin();
        std::advance(it, rng() % snap.machines.size());
        const MachineProperties &m = it->second;
        std::vector<std::string> pool = {"name", "basis_gates", "coupling_map", "status.operational",
                                         "status.pending_jobs", "status.last_calibrated"};
        for (int q = 0; q < m.n_qubits; ++q) {
            for (const char *f : {"t1_us", "t2_us", "frequency_ghz", "readout_error"}) {
                pool.push_back("qubits[" + std::to_string(q) + "]." + f);
            }
        }
        for (const auto &g : m.gates) {
            std::string qs;
            for (size_t i = 0; i < g.qubits.size(); ++i) {
                qs += (i ? "," : "") + std::to_string(g.qubits[i]);
            }
            pool.push_back("gates[" + g.kind + ":" + qs + "].error");
            pool.push_back("gates[" + g.kind + ":" + qs + "].duration_ns");
        }
        std::vector<std::string> paths;
        const size_t k = 1 + rng() % 4;
        for (size_t i = 0; i < k; ++i) {
            paths.push_back(pool[rng() % pool.size()]);
        }
        if (rng() % 5 == 0) {
            paths.push_back("qubits[" + std::to_string(m.n_qubits + 3) + "].t1_us");
        }
        const std::string snippet = emit_property_snippet(select_properties(m, paths), SnippetDialect::WorkbenchCli);
        const auto script = tmp.path() / ("snippet" + std::to_string(sel) + ".sh");
        std::ofstream(script) << snippet;
        const auto [status, out] = run_shell(script.string(), cat);
        const std::string where = "selection " + std::to_string(sel) + " on " + m.name;
        ck.expect(status == 0, where + ": snippet exited with " + std::to_string(status));

        std::vector<std::pair<std::string, json>> expected;
        for (const auto &p : paths) {
            if (auto v = raw_lookup(raw[m.name], p)) {
                expected.emplace_back(p, *v);
            }
        }
        std::vector<std::pair<std::string, json>> got;
        std::stringstream lines(out);
        for (std::string line; std::getline(lines, line);) {
            const size_t t1 = line.find('\t');
            const size_t t2 = line.find('\t', t1 + 1);
            if (t1 == std::string::npos || t2 == std::string::npos) {
                ck.expect(false, where + ": unparsable line '" + line + "'");
                continue;
            }
            got.emplace_back(line.substr(0, t1), json::parse(line.substr(t1 + 1, t2 - t1 - 1)));
        }
        ck.expect(got == expected, where + ": values differ from the catalog file");
    }
    return ck;
}

}  // namespace

int main() {
    struct Criterion {
        int number;
        const char *title;
        double limit_s;  // 0: none
        std::function<Check()> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "ESP formula fidelity", 1.0, esp_fidelity},
        {2, "transpiler correctness", 60.0, transpiler_correctness},
        {3, "phase oracle and Grover", 30.0, oracle_and_grover},
        {4, "Monte-Carlo adjustment procedure", 60.0, monte_carlo},
        {5, "overlap with few shots, separation with many", 30.0, shots_reproduction},
        {6, "determinism of CLI and API", 0.0, determinism},
        {7, "snippet faithfulness", 0.0, snippet_faithfulness},
    };
    int failed = 0;
    for (const auto &c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Check ck;
        try {
            ck = c.run();
        } catch (const std::exception &e) {
            ck.expect(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.limit_s > 0 && secs >= c.limit_s) {
            ck.expect(false, "runtime " + std::to_string(secs) + " s over the " + std::to_string(c.limit_s) + " s limit");
        }
        char timing[32];
        std::snprintf(timing, sizeof timing, "%.2fs", secs);
        std::cout << "criterion " << c.number << " [" << c.title << "]: " << (ck.failures ? "FAIL" : "PASS") << " ("
                  << timing << ")";
        if (ck.failures) {
            std::cout << " " << ck.failures << " failure(s), first: " << ck.first;
            ++failed;
        }
        std::cout << std::endl;
    }
    return failed ? 1 : 0;
}
