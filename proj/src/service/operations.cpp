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

#include "qcwb/service/operations.hpp"

#include "qcwb/circuit/qasm.hpp"
#include "qcwb/simulator/statevector.hpp"
#include "qcwb/transpiler/esp.hpp"
#include "qcwb/writer/snippet.hpp"

namespace qcwb {

BuildResult circuit_from_value(const json &value) {
    if (value.is_string()) {
        return parse_openqasm(value.get<std::string>());
    }
    return build_circuit(value);
}

json synthesize_document(const ConceptualSpec &spec) {
    SynthesisResult res = synthesize(spec);
    json doc = {{"circuit", circuit_to_json(res.circuit)}, {"diagnostics", diagnostics_to_json(res.diagnostics)}};
    if (has_errors(res.diagnostics)) {
        doc["snippets"] = nullptr;
    } else {
        doc["snippets"] = {{"openqasm2", emit_snippet(res.circuit, SnippetDialect::OpenQasm2)},
                           {"qiskit", emit_snippet(res.circuit, SnippetDialect::Qiskit)}};
    }
    return doc;
}

json transpile_document(const Circuit &circuit, const MachineProperties &machine) {
    CompiledCircuit cc = transpile(circuit, machine);
    return {{"compiled", compiled_to_json(cc)}, {"esp", esp_to_json(compute_esp(cc, machine))}};
}

json simulate_document(const Circuit &circuit, int64_t shots, uint64_t seed) {
    json doc = counts_to_json(sample_counts(circuit, shots, seed));
    json expectations = json::object();
    for (const auto &obs : circuit.observables) {
        expectations[obs.label] = pauli_expectation(circuit, obs);
    }
    doc["expectations"] = std::move(expectations);
    return doc;
}

ErrorAdjustRun run_error_adjust(const Circuit &circuit, const MachineProperties &machine, int64_t shots, int trials,
                                uint64_t seed, int threads) {
    if (circuit.n_clbits > kMaxAdjustBits) {
        throw Error("limit_exceeded", "error adjustment supports at most " + std::to_string(kMaxAdjustBits) +
                                          " classical bits");
    }
    ErrorAdjustRun run;
    run.ideal = sample_counts(circuit, shots, seed);
    run.p_err = shot_error_probability(transpile(circuit, machine), machine);
    run.adjusted = adjust_counts(run.ideal, run.p_err, circuit.n_clbits, trials, seed, {.threads = threads});
    return run;
}

json error_adjust_document(const ErrorAdjustRun &run) {
    json doc = {{"ideal", counts_to_json(run.ideal)},
                {"p_err", run.p_err},
                {"adjusted", adjusted_to_json(run.adjusted)}};
    if (run.adjusted.outcomes.size() <= 64) {
        json overlaps = json::array();
        for (auto a = run.adjusted.outcomes.begin(); a != run.adjusted.outcomes.end(); ++a) {
            for (auto b = std::next(a); b != run.adjusted.outcomes.end(); ++b) {
                if (ci_overlap(a->second, b->second)) {
                    overlaps.push_back({a->first, b->first});
                }
            }
        }
        doc["overlaps"] = std::move(overlaps);
    }
    return doc;
}

}  // namespace qcwb
