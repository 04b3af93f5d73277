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

#include <benchmark/benchmark.h>

#include <random>

#include "qcwb/simulator/adjust.hpp"
#include "qcwb/simulator/statevector.hpp"

using namespace qcwb;

namespace {

// Layers of H on every qubit followed by a CX ladder and an RZ sweep.
Circuit brickwork(int n, int depth) {
    Circuit c;
    c.n_qubits = n;
    for (int d = 0; d < depth; ++d) {
        for (int q = 0; q < n; ++q) {
            append_gate(c, GateKind::H, {q});
        }
        for (int q = d % 2; q + 1 < n; q += 2) {
            append_gate(c, GateKind::CX, {q, q + 1});
        }
        for (int q = 0; q < n; ++q) {
            append_gate(c, GateKind::RZ, {q}, {0.1 * (q + 1)});
        }
    }
    if (n >= 3) {
        append_gate(c, GateKind::CCX, {0, 1, 2});
    }
    return c;
}

Counts spread_counts(int n_bits, int64_t shots) {
    Counts c;
    c.n_bits = n_bits;
    std::mt19937_64 rng(1);
    for (int64_t s = 0; s < shots; ++s) {
        ++c.counts[to_bitstring(rng() % (uint64_t{1} << n_bits), n_bits)];
    }
    c.shots = shots;
    return c;
}

void BM_StatevectorSerial(benchmark::State &state) {
    const Circuit c = brickwork(static_cast<int>(state.range(0)), 4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(statevector(c, ExecPolicy::Serial));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(c.gates.size()));
}

void BM_StatevectorParallel(benchmark::State &state) {
    const Circuit c = brickwork(static_cast<int>(state.range(0)), 4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(statevector(c, ExecPolicy::Parallel));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(c.gates.size()));
}

void BM_AdjustSerial(benchmark::State &state) {
    const Counts ideal = spread_counts(4, state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(adjust_counts_serial(ideal, 0.05, 4, 2000, 3));
    }
    state.SetItemsProcessed(state.iterations() * 2000);
}

void BM_AdjustParallel(benchmark::State &state) {
    const Counts ideal = spread_counts(4, state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(adjust_counts(ideal, 0.05, 4, 2000, 3));
    }
    state.SetItemsProcessed(state.iterations() * 2000);
}

}  // namespace

BENCHMARK(BM_StatevectorSerial)->DenseRange(8, 16, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_StatevectorParallel)->DenseRange(8, 16, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AdjustSerial)->Arg(1024)->Arg(100000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AdjustParallel)->Arg(1024)->Arg(100000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
