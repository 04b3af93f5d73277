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

#include "qcwb/service/api.hpp"

#include <regex>

#include "qcwb/machine/properties.hpp"
#include "qcwb/service/operations.hpp"
#include "qcwb/service/view_model.hpp"

namespace qcwb {

namespace {

struct Failure {
    int status;
    Diagnostics diagnostics;
};

[[noreturn]] void fail(int status, std::string code, std::string message) {
    throw Failure{status, {make_error(std::move(code), std::move(message))}};
}

json file_reports(const CatalogSnapshot &snap) {
    json files = json::array();
    for (const auto &f : snap.files) {
        files.push_back({{"file", f.file}, {"loaded", f.loaded}, {"diagnostics", diagnostics_to_json(f.diagnostics)}});
    }
    return files;
}

class Handler {
   public:
    Handler(const ServiceConfig &config, const std::shared_ptr<Catalog> &catalog, const ApiRequest &req)
        : config_(config), catalog_(catalog), snap_(catalog->snapshot()), req_(req) {
    }

    json run(int &status) {
        static const std::regex machine_re(R"(^/machines/([^/]+)$)");
        static const std::regex snippet_re(R"(^/machines/([^/]+)/snippet$)");
        const std::string &p = req_.path;
        std::smatch m;
        status = 200;
        if (req_.method == "GET" && p == "/machines") {
            return list_machines();
        }
        if (req_.method == "GET" && std::regex_match(p, m, machine_re)) {
            return machine_to_json(machine(m[1].str()));
        }
        if (req_.method != "POST") {
            fail(404, "not_found", "no route for " + req_.method + " " + p);
        }
        if (p == "/machines/reload") {
            catalog_->reload();
            auto snap = catalog_->snapshot();
            return {{"machines", snap->machines.size()}, {"files", file_reports(*snap)}};
        }
        if (std::regex_match(p, m, snippet_re)) {
            return snippet(m[1].str());
        }
        if (p == "/circuits/synthesize") {
            return synthesize_route();
        }
        if (p == "/transpile") {
            const json b = body();
            return transpile_document(circuit(b), machine(machine_name(b)));
        }
        if (p == "/simulate") {
            const json b = body();
            Circuit c = circuit(b);
            if (c.n_qubits > config_.max_qubits_sim) {
                fail(422, "limit_exceeded", "simulation is limited to " + std::to_string(config_.max_qubits_sim) +
                                                " qubits");
            }
            return simulate_document(c, shots(b), seed(b));
        }
        if (p == "/error-adjust") {
            const json b = body();
            Circuit c = circuit(b);
            const MachineProperties &mach = machine(machine_name(b));
            if (c.n_qubits > config_.max_qubits_sim) {
                fail(422, "limit_exceeded", "simulation is limited to " + std::to_string(config_.max_qubits_sim) +
                                                " qubits");
            }
            return error_adjust_document(run_error_adjust(c, mach, shots(b), trials(b), seed(b), config_.threads));
        }
        if (p == "/viewmodel") {
            const json b = body();
            return build_view_model(circuit(b), machine(machine_name(b)));
        }
        fail(404, "not_found", "no route for POST " + p);
    }

   private:
    json list_machines() const {
        json machines = json::array();
        for (const auto &[name, m] : snap_->machines) {
            machines.push_back(machine_to_json(m));
        }
        auto it = req_.query.find("diagnostics");
        if (it != req_.query.end() && it->second != "0" && it->second != "false") {
            return {{"machines", std::move(machines)}, {"files", file_reports(*snap_)}};
        }
        return machines;
    }

    json snippet(const std::string &name) const {
        const MachineProperties &m = machine(name);
        const json b = body();
        if (!b.contains("paths") || !b["paths"].is_array()) {
            fail(400, "schema_violation", "body needs a 'paths' array");
        }
        std::vector<std::string> paths;
        for (const auto &p : b["paths"]) {
            if (!p.is_string()) {
                fail(400, "schema_violation", "paths must be strings");
            }
            paths.push_back(p.get<std::string>());
        }
        const std::string dialect_name = b.value("dialect", std::string("workbench-cli"));
        auto dialect = parse_dialect(dialect_name);
        if (!dialect) {
            fail(400, "schema_violation", "unknown dialect '" + dialect_name + "'");
        }
        PropertySelection sel = select_properties(m, paths);
        return {{"selection", selection_to_json(sel)}, {"snippet", emit_property_snippet(sel, *dialect)}};
    }

    json synthesize_route() const {
        const json b = body();
        if (!b.contains("spec")) {
            fail(400, "schema_violation", "body needs a 'spec' object");
        }
        return synthesize_document(parse_conceptual_spec(b["spec"]));
    }

    json body() const {
        json b = json::parse(req_.body, nullptr, false);
        if (b.is_discarded() || !b.is_object()) {
            fail(400, "malformed_json", "request body must be a JSON object");
        }
        return b;
    }

    Circuit circuit(const json &b) const {
        if (!b.contains("circuit")) {
            fail(400, "schema_violation", "body needs a 'circuit'");
        }
        BuildResult r = circuit_from_value(b["circuit"]);
        if (!r.ok()) {
            throw Failure{422, r.diagnostics};
        }
        Diagnostics checks = validate_circuit(*r.circuit);
        if (has_errors(checks)) {
            throw Failure{422, checks};
        }
        return *r.circuit;
    }

    std::string machine_name(const json &b) const {
        if (!b.contains("machine") || !b["machine"].is_string()) {
            fail(400, "schema_violation", "body needs a 'machine' name");
        }
        return b["machine"].get<std::string>();
    }

    const MachineProperties &machine(const std::string &name) const {
        const MachineProperties *m = snap_->find(name);
        if (!m) {
            fail(404, "unknown_machine", "unknown machine '" + name + "'");
        }
        return *m;
    }

    int64_t integer(const json &b, const char *key, int64_t fallback, int64_t lo, int64_t hi) const {
        if (!b.contains(key)) {
            return fallback;
        }
        if (!b[key].is_number_integer()) {
            fail(400, "schema_violation", std::string(key) + " must be an integer");
        }
        const int64_t v = b[key].get<int64_t>();
        if (v < lo || v > hi) {
            fail(422, "limit_exceeded", std::string(key) + " must lie in " + std::to_string(lo) + ".." +
                                            std::to_string(hi));
        }
        return v;
    }

    int64_t shots(const json &b) const {
        return integer(b, "shots", config_.default_shots, 0, config_.max_shots);
    }
    int trials(const json &b) const {
        return static_cast<int>(integer(b, "trials", config_.default_trials, 1, config_.max_trials));
    }
    uint64_t seed(const json &b) const {
        if (!b.contains("seed")) {
            return config_.seed;
        }
        if (!b["seed"].is_number_unsigned() && !(b["seed"].is_number_integer() && b["seed"].get<int64_t>() >= 0)) {
            fail(400, "schema_violation", "seed must be a non-negative integer");
        }
        return b["seed"].get<uint64_t>();
    }

    const ServiceConfig &config_;
    const std::shared_ptr<Catalog> &catalog_;
    std::shared_ptr<const CatalogSnapshot> snap_;
    const ApiRequest &req_;
};

}  // namespace

Api::Api(ServiceConfig config, std::shared_ptr<Catalog> catalog)
    : config_(std::move(config)), catalog_(std::move(catalog)) {
}

ApiResponse Api::handle(const ApiRequest &request) const {
    ApiResponse resp;
    try {
        Handler h(config_, catalog_, request);
        resp.body = h.run(resp.status).dump();
    } catch (const Failure &f) {
        resp.status = f.status;
        resp.body = json{{"diagnostics", diagnostics_to_json(f.diagnostics)}}.dump();
    } catch (const Error &e) {
        resp.status = e.code() == "schema_violation" ? 400 : 422;
        resp.body = json{{"diagnostics", diagnostics_to_json({make_error(e.code(), e.what())})}}.dump();
    } catch (const json::exception &e) {
        resp.status = 400;
        resp.body = json{{"diagnostics", diagnostics_to_json({make_error("malformed_json", e.what())})}}.dump();
    }
    return resp;
}

}  // namespace qcwb
