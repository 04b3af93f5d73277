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

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qcwb/simulator/sampling.hpp"

namespace qcwb {

inline constexpr int kMaxAdjustBits = 10;

struct OutcomeStats {
    double mean = 0;
    double ci_low = 0;
    double ci_high = 0;

    bool operator==(const OutcomeStats &) const = default;
};

struct AdjustedOutcomes {
    int trials = 0;
    int64_t shots = 0;
    int n_bits = 0;
    double p_err = 0;
    /// Every one of the 2^n_bits strings, including those never observed.
    std::map<std::string, OutcomeStats> outcomes;
    /// raw[trial][value] when requested; value indexes strings as integers.
    std::vector<std::vector<uint32_t>> raw;

    bool operator==(const AdjustedOutcomes &) const = default;
};

struct AdjustOptions {
    int threads = 0;  // 0: OpenMP default
    bool keep_raw = false;
};

/// Monte-Carlo error adjustment. Per trial and per ideal string with count c,
/// k ~ Binomial(c, p_err) shots err and each moves to a uniformly chosen
/// different string. Trial t draws from CounterRng(seed, t), so the result
/// does not depend on the thread count. CI bounds are the nearest-rank
/// 2.5%/97.5% order statistics over trials.
AdjustedOutcomes adjust_counts(const Counts &ideal, double p_err, int n_bits, int trials, uint64_t seed,
                               const AdjustOptions &options = {});

/// Same procedure on one thread without OpenMP; kept as the reference.
AdjustedOutcomes adjust_counts_serial(const Counts &ideal, double p_err, int n_bits, int trials, uint64_t seed,
                                      bool keep_raw = false);

/// Closed-interval overlap test.
bool ci_overlap(const OutcomeStats &a, const OutcomeStats &b);

/// Nearest-rank indices floor(0.025 (T-1)) and ceil(0.975 (T-1)).
std::pair<size_t, size_t> ci_ranks(size_t trials);

json adjusted_to_json(const AdjustedOutcomes &a);

}  // namespace qcwb
