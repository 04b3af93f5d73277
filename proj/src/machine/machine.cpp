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

#include "qcwb/machine/machine.hpp"

#include <algorithm>
#include <cmath>
#include <regex>
#include <set>

namespace qcwb {

bool MachineProperties::has_edge(int from, int to) const {
    return std::find(coupling_map.begin(), coupling_map.end(), std::make_pair(from, to)) != coupling_map.end();
}

const GateProperties *MachineProperties::find_gate(std::string_view kind, const std::vector<int> &qs) const {
    for (const auto &g : gates) {
        if (g.kind == kind && g.qubits == qs) {
            return &g;
        }
    }
    return nullptr;
}

bool MachineProperties::supports(std::string_view kind) const {
    return std::find(basis_gates.begin(), basis_gates.end(), kind) != basis_gates.end();
}

std::vector<std::pair<int, int>> symmetric_coupling(const std::vector<std::pair<int, int>> &pairs) {
    std::set<std::pair<int, int>> all;
    for (auto [a, b] : pairs) {
        all.insert({a, b});
        all.insert({b, a});
    }
    return {all.begin(), all.end()};
}

namespace {

bool is_probability(double p) {
    return std::isfinite(p) && p >= 0.0 && p <= 1.0;
}

bool is_iso8601(const std::string &s) {
    static const std::regex re(R"(^\d{4}-\d{2}-\d{2}(T\d{2}:\d{2}(:\d{2}(\.\d+)?)?(Z|[+-]\d{2}:?\d{2})?)?$)");
    return std::regex_match(s, re);
}

}  // namespace

Diagnostics validate_machine(const MachineProperties &m) {
    Diagnostics out;
    auto err = [&](std::string code, std::string msg) { out.push_back(make_error(std::move(code), std::move(msg))); };
    if (m.name.empty()) {
        err("schema_violation", "machine name must not be empty");
    }
    if (m.n_qubits < 1) {
        err("schema_violation", "n_qubits must be at least 1");
    }
    if (static_cast<int>(m.qubits.size()) != m.n_qubits) {
        err("schema_violation", "qubits list has " + std::to_string(m.qubits.size()) + " entries for n_qubits = " +
                                    std::to_string(m.n_qubits));
    }
    if (m.status.pending_jobs < 0) {
        err("schema_violation", "status.pending_jobs must be non-negative");
    }
    if (!is_iso8601(m.status.last_calibrated)) {
        err("schema_violation", "status.last_calibrated is not an ISO-8601 timestamp");
    }
    for (size_t i = 0; i < m.qubits.size(); ++i) {
        const auto &q = m.qubits[i];
        const std::string where = "qubits[" + std::to_string(i) + "]";
        if (!(q.t1_us > 0) || !(q.t2_us > 0) || !std::isfinite(q.t1_us) || !std::isfinite(q.t2_us)) {
            err("out_of_range", where + ": coherence times must be positive");
        }
        if (!(q.frequency_ghz > 0) || !std::isfinite(q.frequency_ghz)) {
            err("out_of_range", where + ": frequency must be positive");
        }
        if (!is_probability(q.readout_error)) {
            err("probability_out_of_range", where + ".readout_error: probability out of range");
        }
        if (q.t1_us > 0 && q.t2_us > 2.0 * q.t1_us) {
            out.push_back(make_warning("t2_exceeds_bound", where + ": t2_us exceeds 2*t1_us"));
        }
    }
    auto in_range = [&](int q) { return q >= 0 && q < m.n_qubits; };
    for (auto [a, b] : m.coupling_map) {
        if (!in_range(a) || !in_range(b)) {
            err("index_out_of_range", "coupling pair (" + std::to_string(a) + "," + std::to_string(b) +
                                          "): index out of range");
        } else if (a == b) {
            err("schema_violation", "coupling pair joins qubit " + std::to_string(a) + " to itself");
        }
    }
    for (const auto &g : m.gates) {
        std::string where = "gates[" + g.kind;
        for (size_t i = 0; i < g.qubits.size(); ++i) {
            where += (i ? "," : ":") + std::to_string(g.qubits[i]);
        }
        where += "]";
        if (g.kind.empty()) {
            err("schema_violation", "gate entry without a kind");
        }
        if (g.qubits.empty()) {
            err("schema_violation", where + ": gate entry without qubits");
        }
        for (int q : g.qubits) {
            if (!in_range(q)) {
                err("index_out_of_range", where + ": index out of range");
            }
        }
        if (!is_probability(g.error)) {
            err("probability_out_of_range", where + ".error: probability out of range");
        }
        if (!(g.duration_ns >= 0) || !std::isfinite(g.duration_ns)) {
            err("out_of_range", where + ".duration_ns must be non-negative");
        }
        if (g.qubits.size() == 2 && m.supports(g.kind) && !m.has_edge(g.qubits[0], g.qubits[1])) {
            err("not_coupled", where + ": pair is not in the coupling map");
        }
    }
    if (m.basis_gates.empty()) {
        err("schema_violation", "basis_gates must not be empty");
    }
    return out;
}

namespace {

class Reader {
   public:
    explicit Reader(Diagnostics &d) : d_(d) {
    }

    template <class T>
    bool get(const json &obj, const char *key, T &out, const std::string &where) {
        if (!obj.is_object() || !obj.contains(key)) {
            fail(where + "." + key + " is missing");
            return false;
        }
        const auto &v = obj[key];
        if constexpr (std::is_same_v<T, bool>) {
            if (!v.is_boolean()) {
                return fail(where + "." + key + " must be a boolean");
            }
        } else if constexpr (std::is_integral_v<T>) {
            if (!v.is_number_integer()) {
                return fail(where + "." + key + " must be an integer");
            }
        } else if constexpr (std::is_floating_point_v<T>) {
            if (!v.is_number()) {
                return fail(where + "." + key + " must be a number");
            }
        } else if constexpr (std::is_same_v<T, std::string>) {
            if (!v.is_string()) {
                return fail(where + "." + key + " must be a string");
            }
        }
        out = v.get<T>();
        return true;
    }

    bool fail(const std::string &msg) {
        d_.push_back(make_error("schema_violation", "schema violation: " + msg));
        return false;
    }

   private:
    Diagnostics &d_;
};

}  // namespace

MachineParseResult machine_from_json(const json &doc) {
    MachineParseResult res;
    Reader r(res.diagnostics);
    if (!doc.is_object()) {
        r.fail("machine document must be an object");
        return res;
    }
    MachineProperties m;
    r.get(doc, "name", m.name, "machine");
    r.get(doc, "n_qubits", m.n_qubits, "machine");
    if (doc.contains("status")) {
        const auto &s = doc["status"];
        r.get(s, "operational", m.status.operational, "status");
        r.get(s, "pending_jobs", m.status.pending_jobs, "status");
        r.get(s, "last_calibrated", m.status.last_calibrated, "status");
    } else {
        r.fail("status is missing");
    }
    if (doc.contains("coupling_map") && doc["coupling_map"].is_array()) {
        for (const auto &p : doc["coupling_map"]) {
            if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() || !p[1].is_number_integer()) {
                r.fail("coupling_map entries must be [int, int] pairs");
                continue;
            }
            m.coupling_map.emplace_back(p[0].get<int>(), p[1].get<int>());
        }
    } else {
        r.fail("coupling_map must be an array");
    }
    if (doc.contains("qubits") && doc["qubits"].is_array()) {
        for (size_t i = 0; i < doc["qubits"].size(); ++i) {
            const auto &q = doc["qubits"][i];
            const std::string where = "qubits[" + std::to_string(i) + "]";
            QubitProperties qp;
            r.get(q, "t1_us", qp.t1_us, where);
            r.get(q, "t2_us", qp.t2_us, where);
            r.get(q, "frequency_ghz", qp.frequency_ghz, where);
            r.get(q, "readout_error", qp.readout_error, where);
            m.qubits.push_back(qp);
        }
    } else {
        r.fail("qubits must be an array");
    }
    if (doc.contains("gates") && doc["gates"].is_array()) {
        for (size_t i = 0; i < doc["gates"].size(); ++i) {
            const auto &g = doc["gates"][i];
            const std::string where = "gates[" + std::to_string(i) + "]";
            GateProperties gp;
            r.get(g, "kind", gp.kind, where);
            r.get(g, "error", gp.error, where);
            r.get(g, "duration_ns", gp.duration_ns, where);
            if (!g.is_object() || !g.contains("qubits") || !g["qubits"].is_array()) {
                r.fail(where + ".qubits must be an array of integers");
            } else {
                for (const auto &q : g["qubits"]) {
                    if (!q.is_number_integer()) {
                        r.fail(where + ".qubits must be an array of integers");
                        break;
                    }
                    gp.qubits.push_back(q.get<int>());
                }
            }
            m.gates.push_back(std::move(gp));
        }
    } else {
        r.fail("gates must be an array");
    }
    if (doc.contains("basis_gates") && doc["basis_gates"].is_array()) {
        for (const auto &b : doc["basis_gates"]) {
            if (!b.is_string()) {
                r.fail("basis_gates must be strings");
                continue;
            }
            m.basis_gates.push_back(b.get<std::string>());
        }
    } else {
        r.fail("basis_gates must be an array");
    }
    if (has_errors(res.diagnostics)) {
        return res;
    }
    m.coupling_map = symmetric_coupling(m.coupling_map);
    auto checks = validate_machine(m);
    res.diagnostics.insert(res.diagnostics.end(), checks.begin(), checks.end());
    if (!has_errors(res.diagnostics)) {
        res.machine = std::move(m);
    }
    return res;
}

json machine_to_json(const MachineProperties &m) {
    json doc;
    doc["name"] = m.name;
    doc["n_qubits"] = m.n_qubits;
    doc["status"] = {{"operational", m.status.operational},
                     {"pending_jobs", m.status.pending_jobs},
                     {"last_calibrated", m.status.last_calibrated}};
    json cm = json::array();
    for (auto [a, b] : m.coupling_map) {
        cm.push_back({a, b});
    }
    doc["coupling_map"] = std::move(cm);
    json qs = json::array();
    for (const auto &q : m.qubits) {
        qs.push_back({{"t1_us", q.t1_us},
                      {"t2_us", q.t2_us},
                      {"frequency_ghz", q.frequency_ghz},
                      {"readout_error", q.readout_error}});
    }
    doc["qubits"] = std::move(qs);
    json gs = json::array();
    for (const auto &g : m.gates) {
        gs.push_back({{"kind", g.kind}, {"qubits", g.qubits}, {"error", g.error}, {"duration_ns", g.duration_ns}});
    }
    doc["gates"] = std::move(gs);
    doc["basis_gates"] = m.basis_gates;
    return doc;
}

}  // namespace qcwb
