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

#include "qcwb/simulator/statevector.hpp"

#include <omp.h>

#include <algorithm>
#include <bit>

namespace qcwb {

namespace {

// Below this size thread start-up costs more than the sweep.
constexpr size_t kParallelThreshold = size_t{1} << 12;

/// Inserts a zero bit at each (ascending) position in `sorted`.
inline size_t spread(size_t i, std::span<const int> sorted) {
    for (int b : sorted) {
        const size_t low = i & ((size_t{1} << b) - 1);
        i = ((i >> b) << (b + 1)) | low;
    }
    return i;
}

void apply_reference(State &state, std::span<const int> qubits, const Matrix &m) {
    const size_t k = qubits.size();
    const size_t local = size_t{1} << k;
    size_t mask = 0;
    for (int q : qubits) {
        mask |= size_t{1} << q;
    }
    std::vector<size_t> idx(local);
    std::vector<cplx> in(local);
    for (size_t base = 0; base < state.size(); ++base) {
        if (base & mask) {
            continue;
        }
        for (size_t j = 0; j < local; ++j) {
            size_t x = base;
            for (size_t b = 0; b < k; ++b) {
                if ((j >> b) & 1) {
                    x |= size_t{1} << qubits[b];
                }
            }
            idx[j] = x;
            in[j] = state[x];
        }
        for (size_t r = 0; r < local; ++r) {
            cplx acc = 0;
            for (size_t c = 0; c < local; ++c) {
                acc += m(r, c) * in[c];
            }
            state[idx[r]] = acc;
        }
    }
}

void apply_1q_parallel(State &state, int q, const Matrix &m) {
    const cplx m00 = m(0, 0), m01 = m(0, 1), m10 = m(1, 0), m11 = m(1, 1);
    const size_t half = state.size() / 2;
    const size_t bit = size_t{1} << q;
    const size_t low_mask = bit - 1;
    cplx *a = state.data();
    auto pair = [&](size_t i) {
        const size_t i0 = ((i & ~low_mask) << 1) | (i & low_mask);
        const size_t i1 = i0 | bit;
        const cplx x0 = a[i0], x1 = a[i1];
        a[i0] = m00 * x0 + m01 * x1;
        a[i1] = m10 * x0 + m11 * x1;
    };
    if (state.size() < kParallelThreshold) {
        for (size_t i = 0; i < half; ++i) {
            pair(i);
        }
        return;
    }
#pragma omp parallel for schedule(static)
    for (size_t i = 0; i < half; ++i) {
        pair(i);
    }
}

void apply_kq_parallel(State &state, std::span<const int> qubits, const Matrix &m) {
    const size_t k = qubits.size();
    const size_t local = size_t{1} << k;
    std::vector<int> sorted(qubits.begin(), qubits.end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<size_t> offset(local, 0);
    for (size_t j = 0; j < local; ++j) {
        for (size_t b = 0; b < k; ++b) {
            if ((j >> b) & 1) {
                offset[j] |= size_t{1} << qubits[b];
            }
        }
    }
    // Nonzero entries only, row by row: row_start[r]..row_start[r+1] index into cols/vals.
    std::vector<size_t> row_start(local + 1, 0), cols;
    std::vector<cplx> vals;
    for (size_t r = 0; r < local; ++r) {
        for (size_t c = 0; c < local; ++c) {
            if (m(r, c) != cplx(0.0)) {
                cols.push_back(c);
                vals.push_back(m(r, c));
            }
        }
        row_start[r + 1] = cols.size();
    }
    const size_t blocks = state.size() >> k;
    cplx *a = state.data();
    auto block = [&](size_t i, std::vector<cplx> &in) {
        const size_t base = spread(i, sorted);
        for (size_t j = 0; j < local; ++j) {
            in[j] = a[base | offset[j]];
        }
        for (size_t r = 0; r < local; ++r) {
            cplx acc = 0;
            for (size_t e = row_start[r]; e < row_start[r + 1]; ++e) {
                acc += vals[e] * in[cols[e]];
            }
            a[base | offset[r]] = acc;
        }
    };
    if (state.size() < kParallelThreshold) {
        std::vector<cplx> in(local);
        for (size_t i = 0; i < blocks; ++i) {
            block(i, in);
        }
        return;
    }
#pragma omp parallel
    {
        std::vector<cplx> in(local);
#pragma omp for schedule(static)
        for (size_t i = 0; i < blocks; ++i) {
            block(i, in);
        }
    }
}

}  // namespace

State zero_state(int n) {
    if (n < 1 || n > kMaxSimQubits) {
        throw Error("too_many_qubits", "statevector simulation supports 1.." + std::to_string(kMaxSimQubits) +
                                           " qubits, got " + std::to_string(n));
    }
    State s(size_t{1} << n, 0.0);
    s[0] = 1.0;
    return s;
}

void apply_matrix(State &state, std::span<const int> qubits, const Matrix &m, ExecPolicy policy) {
    if (policy == ExecPolicy::Serial) {
        apply_reference(state, qubits, m);
    } else if (qubits.size() == 1) {
        apply_1q_parallel(state, qubits[0], m);
    } else {
        apply_kq_parallel(state, qubits, m);
    }
}

void apply_gate(State &state, const GateInstance &gate, ExecPolicy policy) {
    if (gate.kind == GateKind::MEASURE || gate.kind == GateKind::BARRIER) {
        return;
    }
    apply_matrix(state, gate.qubits, gate_matrix(gate), policy);
}

State statevector(const Circuit &circuit, ExecPolicy policy) {
    State s = zero_state(circuit.n_qubits);
    for (const auto &g : circuit.gates) {
        apply_gate(s, g, policy);
    }
    return s;
}

std::vector<double> probabilities(const State &state) {
    std::vector<double> p(state.size());
    for (size_t i = 0; i < state.size(); ++i) {
        p[i] = std::norm(state[i]);
    }
    return p;
}

double norm_squared(const State &state) {
    double total = 0;
    for (const auto &a : state) {
        total += std::norm(a);
    }
    return total;
}

double pauli_expectation(const Circuit &circuit, const PauliObservable &obs, ExecPolicy policy) {
    auto diags = check_observable(obs, circuit.n_qubits);
    if (has_errors(diags)) {
        throw Error(diags[0].code, diags[0].message);
    }
    State s = statevector(circuit, policy);
    const int n = circuit.n_qubits;
    size_t mask = 0;
    for (int q = 0; q < n; ++q) {
        const char p = obs.label[n - 1 - q];
        const int qs[] = {q};
        if (p == 'X') {
            apply_matrix(s, qs, gate_matrix(GateKind::H, {}, 1), policy);
        } else if (p == 'Y') {
            apply_matrix(s, qs, gate_matrix(GateKind::H, {}, 1) * gate_matrix(GateKind::SDG, {}, 1), policy);
        }
        if (p != 'I') {
            mask |= size_t{1} << q;
        }
    }
    double total = 0;
    for (size_t i = 0; i < s.size(); ++i) {
        const double w = std::norm(s[i]);
        total += (std::popcount(i & mask) & 1) ? -w : w;
    }
    return obs.coefficient * total;
}

}  // namespace qcwb
