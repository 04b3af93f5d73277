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

#include "qcwb/simulator/adjust.hpp"

#include <omp.h>

#include <algorithm>
#include <random>

#include "qcwb/simulator/rng.hpp"

namespace qcwb {

namespace {

struct Plan {
    int n_bits;
    size_t n_strings;
    int64_t shots;
    std::vector<std::pair<uint32_t, int64_t>> ideal;  // (value, count), ascending value
};

Plan make_plan(const Counts &ideal, double p_err, int n_bits, int trials) {
    if (!(p_err >= 0.0 && p_err <= 1.0)) {
        throw Error("invalid_argument", "p_err must lie in [0, 1]");
    }
    if (n_bits < 1 || n_bits > kMaxAdjustBits) {
        throw Error("invalid_argument", "n_bits must lie in 1.." + std::to_string(kMaxAdjustBits));
    }
    if (trials < 1) {
        throw Error("invalid_argument", "trials must be at least 1");
    }
    Plan plan{n_bits, size_t{1} << n_bits, 0, {}};
    for (const auto &[key, count] : ideal.counts) {
        if (static_cast<int>(key.size()) != n_bits || key.find_first_not_of("01") != std::string::npos) {
            throw Error("invalid_argument", "bitstring '" + key + "' does not match n_bits = " + std::to_string(n_bits));
        }
        if (count < 0 || count > UINT32_MAX) {
            throw Error("invalid_argument", "count for '" + key + "' out of range");
        }
        if (count > 0) {
            plan.ideal.emplace_back(static_cast<uint32_t>(std::stoul(key, nullptr, 2)), count);
        }
        plan.shots += count;
    }
    if (plan.shots > UINT32_MAX) {
        throw Error("invalid_argument", "too many shots");
    }
    std::sort(plan.ideal.begin(), plan.ideal.end());
    return plan;
}

void run_trial(const Plan &plan, double p_err, uint64_t seed, int trial, uint32_t *row) {
    std::fill(row, row + plan.n_strings, 0u);
    CounterRng rng(seed, static_cast<uint64_t>(trial));
    std::uniform_int_distribution<uint32_t> other(0, static_cast<uint32_t>(plan.n_strings - 2));
    for (auto [value, count] : plan.ideal) {
        std::binomial_distribution<int64_t> errs(count, p_err);
        const int64_t k = errs(rng);
        row[value] += static_cast<uint32_t>(count - k);
        for (int64_t e = 0; e < k; ++e) {
            const uint32_t r = other(rng);
            ++row[r < value ? r : r + 1];
        }
    }
}

AdjustedOutcomes summarize(const Plan &plan, double p_err, int trials, std::vector<uint32_t> &table, bool keep_raw,
                           bool parallel, int threads) {
    AdjustedOutcomes out;
    out.trials = trials;
    out.shots = plan.shots;
    out.n_bits = plan.n_bits;
    out.p_err = p_err;
    const size_t ns = plan.n_strings;
    if (keep_raw) {
        out.raw.resize(trials);
        for (int t = 0; t < trials; ++t) {
            out.raw[t].assign(table.begin() + t * ns, table.begin() + (t + 1) * ns);
        }
    }
    const auto [lo, hi] = ci_ranks(trials);
    std::vector<OutcomeStats> stats(ns);
    auto one = [&](size_t s, std::vector<uint32_t> &column) {
        uint64_t sum = 0;
        for (int t = 0; t < trials; ++t) {
            column[t] = table[t * ns + s];
            sum += column[t];
        }
        std::sort(column.begin(), column.end());
        stats[s] = {static_cast<double>(sum) / trials, static_cast<double>(column[lo]),
                    static_cast<double>(column[hi])};
    };
    if (parallel) {
#pragma omp parallel num_threads(threads)
        {
            std::vector<uint32_t> column(trials);
#pragma omp for schedule(static)
            for (size_t s = 0; s < ns; ++s) {
                one(s, column);
            }
        }
    } else {
        std::vector<uint32_t> column(trials);
        for (size_t s = 0; s < ns; ++s) {
            one(s, column);
        }
    }
    for (size_t s = 0; s < ns; ++s) {
        out.outcomes[to_bitstring(s, plan.n_bits)] = stats[s];
    }
    return out;
}

}  // namespace

std::pair<size_t, size_t> ci_ranks(size_t trials) {
    const size_t m = trials - 1;
    return {(25 * m) / 1000, (975 * m + 999) / 1000};
}

AdjustedOutcomes adjust_counts(const Counts &ideal, double p_err, int n_bits, int trials, uint64_t seed,
                               const AdjustOptions &options) {
    const Plan plan = make_plan(ideal, p_err, n_bits, trials);
    const int threads = options.threads > 0 ? options.threads : omp_get_max_threads();
    std::vector<uint32_t> table(static_cast<size_t>(trials) * plan.n_strings);
#pragma omp parallel for schedule(dynamic, 64) num_threads(threads)
    for (int t = 0; t < trials; ++t) {
        run_trial(plan, p_err, seed, t, table.data() + static_cast<size_t>(t) * plan.n_strings);
    }
    return summarize(plan, p_err, trials, table, options.keep_raw, true, threads);
}

AdjustedOutcomes adjust_counts_serial(const Counts &ideal, double p_err, int n_bits, int trials, uint64_t seed,
                                      bool keep_raw) {
    const Plan plan = make_plan(ideal, p_err, n_bits, trials);
    std::vector<uint32_t> table(static_cast<size_t>(trials) * plan.n_strings);
    for (int t = 0; t < trials; ++t) {
        run_trial(plan, p_err, seed, t, table.data() + static_cast<size_t>(t) * plan.n_strings);
    }
    return summarize(plan, p_err, trials, table, keep_raw, false, 1);
}

bool ci_overlap(const OutcomeStats &a, const OutcomeStats &b) {
    return std::max(a.ci_low, b.ci_low) <= std::min(a.ci_high, b.ci_high);
}

json adjusted_to_json(const AdjustedOutcomes &a) {
    json outcomes = json::object();
    for (const auto &[k, s] : a.outcomes) {
        outcomes[k] = {{"mean", s.mean}, {"ci_low", s.ci_low}, {"ci_high", s.ci_high}};
    }
    json doc = {{"trials", a.trials}, {"shots", a.shots}, {"p_err", a.p_err}, {"outcomes", std::move(outcomes)}};
    if (!a.raw.empty()) {
        doc["raw"] = a.raw;
    }
    return doc;
}

}  // namespace qcwb
