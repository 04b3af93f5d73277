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
#include <limits>

namespace qcwb {

/// Counter-based generator: the i-th output of stream `key` is a SplitMix64
/// finalizer applied to key + i * golden-gamma, so any (seed, trial) pair
/// names an independent, reproducible stream. Satisfies
/// UniformRandomBitGenerator for use with <random> distributions.
class CounterRng {
   public:
    using result_type = uint64_t;

    explicit CounterRng(uint64_t seed, uint64_t stream = 0) : key_(mix(seed ^ mix(stream + kGamma))) {
    }

    static constexpr result_type min() {
        return 0;
    }
    static constexpr result_type max() {
        return std::numeric_limits<result_type>::max();
    }

    result_type operator()() {
        return mix(key_ + (++counter_) * kGamma);
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() {
        return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
    }

   private:
    static constexpr uint64_t kGamma = 0x9e3779b97f4a7c15ULL;

    static constexpr uint64_t mix(uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    uint64_t key_;
    uint64_t counter_ = 0;
};

}  // namespace qcwb
