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

#include "qcwb/service/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <sstream>

#include "qcwb/circuit/qasm.hpp"
#include "qcwb/machine/catalog.hpp"
#include "qcwb/machine/generate.hpp"
#include "qcwb/machine/properties.hpp"
#include "qcwb/service/operations.hpp"
#include "qcwb/service/server.hpp"
#include "qcwb/service/view_model.hpp"
#include "qcwb/transpiler/esp.hpp"
#include "qcwb/writer/snippet.hpp"

namespace qcwb {

namespace {

/// Diagnostics already reported to the user; maps to exit code 1.
struct Reported {};

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("unreadable_file", "cannot read " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json read_json(const std::string &path) {
    json doc = json::parse(read_file(path), nullptr, false);
    if (doc.is_discarded()) {
        throw Error("malformed_json", "malformed JSON in " + path);
    }
    return doc;
}

bool ends_with(const std::string &s, const std::string &suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

void print_diagnostics(std::ostream &err, const Diagnostics &diags) {
    for (const auto &d : diags) {
        err << (d.severity == Severity::Error ? "error" : "warning") << " [" << d.code << "]";
        if (d.gate_id) {
            err << " gate " << *d.gate_id;
        }
        err << ": " << d.message << "\n";
    }
}

class Cli {
   public:
    Cli(std::ostream &out, std::ostream &err) : out_(out), err_(err), config_(config_from_env()) {
    }

    int run(const std::vector<std::string> &args);

   private:
    Circuit load_circuit(const std::string &path) const {
        BuildResult r = ends_with(path, ".qasm") ? parse_openqasm(read_file(path)) : build_circuit(read_json(path));
        Diagnostics all = r.diagnostics;
        if (r.ok()) {
            Diagnostics checks = validate_circuit(*r.circuit);
            all.insert(all.end(), checks.begin(), checks.end());
        }
        print_diagnostics(err_, all);
        if (!r.ok() || has_errors(all)) {
            throw Reported{};
        }
        return *r.circuit;
    }

    const CatalogSnapshot &catalog() {
        if (!snap_) {
            snap_ = std::make_unique<CatalogSnapshot>(load_catalog(config_.catalog_dir));
        }
        return *snap_;
    }

    MachineProperties load_machine(const std::string &ref) {
        if (ends_with(ref, ".json")) {
            MachineParseResult r = machine_from_json(read_json(ref));
            print_diagnostics(err_, r.diagnostics);
            if (!r.machine) {
                throw Reported{};
            }
            return *r.machine;
        }
        const MachineProperties *m = catalog().find(ref);
        if (!m) {
            throw Error("unknown_machine", "unknown machine '" + ref + "' in catalog " + config_.catalog_dir);
        }
        return *m;
    }

    void emit(const json &doc) {
        out_ << doc.dump(2) << "\n";
    }

    std::ostream &out_;
    std::ostream &err_;
    ServiceConfig config_;
    std::unique_ptr<CatalogSnapshot> snap_;
};

int Cli::run(const std::vector<std::string> &args) {
    CLI::App app{"Gate-based quantum workbench", "qcwb"};
    app.require_subcommand(1);
    bool as_json = false;
    std::string catalog_dir = config_.catalog_dir;
    app.add_flag("--json", as_json, "Machine-readable JSON output");
    app.add_option("--catalog", catalog_dir, "Machine catalog directory (default: $QCWB_CATALOG_DIR or ./catalog)");

    std::string spec_path, dialect = "openqasm2", circuit_path, machine_ref;
    int64_t shots = config_.default_shots;
    int trials = config_.default_trials;
    uint64_t seed = config_.seed;
    int threads = 0;
    bool table = false;

    auto *synth = app.add_subcommand("synth", "Synthesize a circuit from a conceptual spec");
    synth->add_option("--spec", spec_path, "Conceptual spec JSON file")->required();
    synth->add_option("--dialect", dialect, "openqasm2 | qiskit");

    auto *machines = app.add_subcommand("machines", "Inspect the machine catalog");
    machines->require_subcommand(1);
    auto *m_list = machines->add_subcommand("list", "List catalog machines");
    std::string name;
    std::vector<std::string> paths;
    auto *m_show = machines->add_subcommand("show", "Print a machine document");
    m_show->add_option("name", name)->required();
    auto *m_select = machines->add_subcommand("select", "Read selected properties");
    m_select->add_option("name", name)->required();
    m_select->add_option("--path", paths, "Property path, repeatable")->required();
    auto *m_snippet = machines->add_subcommand("snippet", "Emit a snippet that re-reads selected properties");
    std::string snippet_dialect = "workbench-cli";
    m_snippet->add_option("name", name)->required();
    m_snippet->add_option("--path", paths, "Property path, repeatable")->required();
    m_snippet->add_option("--dialect", snippet_dialect, "workbench-cli | qiskit");
    auto *m_generate = machines->add_subcommand("generate", "Generate a synthetic machine document");
    uint64_t gen_seed = 0;
    int gen_qubits = 0;
    std::string gen_topology = "line", gen_name, gen_output;
    double gen_scale = 1.0;
    m_generate->add_option("--seed", gen_seed)->required();
    m_generate->add_option("--qubits", gen_qubits)->required();
    m_generate->add_option("--topology", gen_topology, "line | ring | grid:RxC");
    m_generate->add_option("--noise-scale", gen_scale)->check(CLI::NonNegativeNumber);
    m_generate->add_option("--name", gen_name);
    m_generate->add_option("--output", gen_output, "Write to a file instead of stdout");

    auto add_circuit = [&](CLI::App *sub) { sub->add_option("--circuit", circuit_path, "Circuit .json or .qasm")->required(); };
    auto add_machine = [&](CLI::App *sub) {
        sub->add_option("--machine", machine_ref, "Catalog name or *.machine.json path")->required();
    };
    auto *transpile_cmd = app.add_subcommand("transpile", "Compile a circuit for a machine");
    add_circuit(transpile_cmd);
    add_machine(transpile_cmd);
    auto *esp_cmd = app.add_subcommand("esp", "Layer-wise and cumulative estimated success probabilities");
    add_circuit(esp_cmd);
    add_machine(esp_cmd);
    auto *simulate_cmd = app.add_subcommand("simulate", "Ideal simulation and sampling");
    add_circuit(simulate_cmd);
    simulate_cmd->add_option("--shots", shots)->check(CLI::Range(int64_t{0}, config_.max_shots));
    simulate_cmd->add_option("--seed", seed);
    auto *adjust_cmd = app.add_subcommand("adjust", "Monte-Carlo error-adjusted outcome counts");
    add_circuit(adjust_cmd);
    add_machine(adjust_cmd);
    adjust_cmd->add_option("--shots", shots)->check(CLI::Range(int64_t{0}, config_.max_shots));
    adjust_cmd->add_option("--trials", trials)->check(CLI::Range(1, config_.max_trials));
    adjust_cmd->add_option("--seed", seed);
    adjust_cmd->add_option("--threads", threads, "Worker threads (0 = all)")->check(CLI::NonNegativeNumber);
    adjust_cmd->add_flag("--table", table, "Tab-separated table instead of JSON");
    auto *view_cmd = app.add_subcommand("viewmodel", "Circuit-viewer data for a circuit on a machine");
    add_circuit(view_cmd);
    add_machine(view_cmd);
    auto *serve_cmd = app.add_subcommand("serve", "Run the HTTP service");
    serve_cmd->add_option("--port", config_.port)->check(CLI::Range(0, 65535));
    serve_cmd->add_option("--host", config_.host);
    serve_cmd->add_option("--static", config_.static_dir, "Directory served at /");

    for (auto *sub : {synth, machines, m_list, m_show, m_select, m_snippet, m_generate, transpile_cmd, esp_cmd,
                      simulate_cmd, adjust_cmd, view_cmd, serve_cmd}) {
        sub->fallthrough();
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out_, err_);
        return code == 0 ? 0 : 2;
    }
    config_.catalog_dir = catalog_dir;

    try {
        if (synth->parsed()) {
            auto d = parse_dialect(dialect);
            if (!d || *d == SnippetDialect::WorkbenchCli) {
                err_ << "error: unknown circuit dialect '" << dialect << "'\n";
                return 2;
            }
            json doc = synthesize_document(parse_conceptual_spec(read_json(spec_path)));
            Diagnostics diags;
            for (const auto &d : doc["diagnostics"]) {
                diags.push_back({d["severity"] == "error" ? Severity::Error : Severity::Warning,
                                 d["code"].get<std::string>(), d["message"].get<std::string>(), std::nullopt});
            }
            if (as_json) {
                emit(doc);
            } else {
                print_diagnostics(err_, diags);
                if (!doc["snippets"].is_null()) {
                    out_ << doc["snippets"][std::string(dialect_name(*d))].get<std::string>();
                }
            }
            return has_errors(diags) ? 1 : 0;
        }
        if (m_list->parsed()) {
            const auto &snap = catalog();
            for (const auto &f : snap.files) {
                if (!f.loaded) {
                    err_ << f.file << ":\n";
                    print_diagnostics(err_, f.diagnostics);
                }
            }
            if (as_json) {
                json arr = json::array();
                for (const auto &[n, m] : snap.machines) {
                    arr.push_back(machine_to_json(m));
                }
                emit(arr);
            } else {
                for (const auto &[n, m] : snap.machines) {
                    out_ << n << "\t" << m.n_qubits << "\t" << (m.status.operational ? "operational" : "down")
                         << "\n";
                }
            }
            return 0;
        }
        if (m_show->parsed()) {
            emit(machine_to_json(load_machine(name)));
            return 0;
        }
        if (m_select->parsed()) {
            PropertySelection sel = select_properties(load_machine(name), paths);
            bool failed = false;
            for (const auto &e : sel.entries) {
                if (e.error) {
                    err_ << "error: " << e.path << ": " << *e.error << "\n";
                    failed = true;
                }
            }
            if (as_json) {
                emit(selection_to_json(sel));
            } else {
                for (const auto &e : sel.entries) {
                    if (e.value) {
                        out_ << e.path << "\t" << e.value->dump() << "\t" << e.unit << "\n";
                    }
                }
            }
            return failed ? 1 : 0;
        }
        if (m_snippet->parsed()) {
            auto d = parse_dialect(snippet_dialect);
            if (!d || *d == SnippetDialect::OpenQasm2) {
                err_ << "error: unknown property-snippet dialect '" << snippet_dialect << "'\n";
                return 2;
            }
            PropertySelection sel = select_properties(load_machine(name), paths);
            for (const auto &e : sel.entries) {
                if (e.error) {
                    err_ << "warning: skipping " << e.path << ": " << *e.error << "\n";
                }
            }
            out_ << emit_property_snippet(sel, *d);
            return 0;
        }
        if (m_generate->parsed()) {
            const std::string text =
                machine_to_json(generate_machine(gen_seed, gen_qubits, parse_topology(gen_topology), gen_scale,
                                                 gen_name))
                    .dump(2) +
                "\n";
            if (gen_output.empty()) {
                out_ << text;
            } else {
                std::ofstream(gen_output) << text;
            }
            return 0;
        }
        if (transpile_cmd->parsed()) {
            Circuit c = load_circuit(circuit_path);
            MachineProperties m = load_machine(machine_ref);
            if (as_json) {
                emit(transpile_document(c, m));
            } else {
                out_ << to_openqasm(transpile(c, m).circuit);
            }
            return 0;
        }
        if (esp_cmd->parsed()) {
            Circuit c = load_circuit(circuit_path);
            MachineProperties m = load_machine(machine_ref);
            EspReport r = compute_esp(transpile(c, m), m);
            if (as_json) {
                emit(esp_to_json(r));
            } else {
                out_ << "layer\tlayerwise\tcumulative\n";
                for (size_t i = 0; i < r.layerwise.size(); ++i) {
                    out_ << i << "\t" << json(r.layerwise[i]).dump() << "\t" << json(r.cumulative[i]).dump() << "\n";
                }
            }
            return 0;
        }
        if (simulate_cmd->parsed()) {
            Circuit c = load_circuit(circuit_path);
            json doc = simulate_document(c, shots, seed);
            if (as_json) {
                emit(doc);
            } else {
                for (const auto &[k, v] : doc["counts"].items()) {
                    out_ << k << "\t" << v.dump() << "\n";
                }
                for (const auto &[k, v] : doc["expectations"].items()) {
                    out_ << "<" << k << ">\t" << v.dump() << "\n";
                }
            }
            return 0;
        }
        if (adjust_cmd->parsed()) {
            Circuit c = load_circuit(circuit_path);
            MachineProperties m = load_machine(machine_ref);
            ErrorAdjustRun run = run_error_adjust(c, m, shots, trials, seed, threads);
            if (table) {
                out_ << "# p_err\t" << json(run.p_err).dump() << "\n";
                out_ << "bitstring\tideal\tmean\tci_low\tci_high\n";
                for (const auto &[k, s] : run.adjusted.outcomes) {
                    auto it = run.ideal.counts.find(k);
                    out_ << k << "\t" << (it == run.ideal.counts.end() ? 0 : it->second) << "\t"
                         << json(s.mean).dump() << "\t" << json(s.ci_low).dump() << "\t" << json(s.ci_high).dump()
                         << "\n";
                }
            } else {
                emit(adjusted_to_json(run.adjusted));
            }
            return 0;
        }
        if (view_cmd->parsed()) {
            emit(build_view_model(load_circuit(circuit_path), load_machine(machine_ref)));
            return 0;
        }
        if (serve_cmd->parsed()) {
            check_config(config_);
            auto catalog = std::make_shared<Catalog>(load_catalog(config_.catalog_dir));
            for (const auto &f : catalog->snapshot()->files) {
                if (!f.loaded) {
                    err_ << f.file << ":\n";
                    print_diagnostics(err_, f.diagnostics);
                }
            }
            HttpServer server(std::make_shared<Api>(config_, catalog));
            const int port = server.bind();
            out_ << "listening on http://" << config_.host << ":" << port << "\n" << std::flush;
            server.run();
            return 0;
        }
    } catch (const Reported &) {
        return 1;
    } catch (const Error &e) {
        err_ << "error [" << e.code() << "]: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    try {
        Cli cli(out, err);
        return cli.run(args);
    } catch (const Error &e) {
        err << "error [" << e.code() << "]: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace qcwb
