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

#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "qcwb/simulator/sampling.hpp"

namespace qcwb::fixtures {

/// Shot-by-shot reference for the error adjustment: every shot errs with
/// probability p_err and then lands on a uniformly chosen different string.
/// Returns samples[string][trial].
inline std::vector<std::vector<double>> brute_force_adjust(const Counts &ideal, double p_err, int n_bits, int trials,
                                                           uint64_t seed) {
    const size_t ns = size_t{1} << n_bits;
    std::vector<std::vector<double>> samples(ns, std::vector<double>(trials));
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution err(p_err);
    std::uniform_int_distribution<size_t> pick(0, ns - 1);
    for (int t = 0; t < trials; ++t) {
        std::vector<int64_t> row(ns, 0);
        for (const auto &[key, count] : ideal.counts) {
            const size_t value = std::stoul(key, nullptr, 2);
            for (int64_t s = 0; s < count; ++s) {
                size_t out = value;
                if (err(rng)) {
                    do {
                        out = pick(rng);
                    } while (out == value);
                }
                ++row[out];
            }
        }
        for (size_t s = 0; s < ns; ++s) {
            samples[s][t] = static_cast<double>(row[s]);
        }
    }
    return samples;
}

/// Two-sample Kolmogorov-Smirnov statistic sup |F_a - F_b|.
inline double ks_statistic(std::vector<double> a, std::vector<double> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    size_t i = 0, j = 0;
    double d = 0;
    while (i < a.size() && j < b.size()) {
        const double x = std::min(a[i], b[j]);
        while (i < a.size() && a[i] <= x) {
            ++i;
        }
        while (j < b.size() && b[j] <= x) {
            ++j;
        }
        d = std::max(d, std::abs(static_cast<double>(i) / a.size() - static_cast<double>(j) / b.size()));
    }
    return d;
}

}  // namespace qcwb::fixtures
