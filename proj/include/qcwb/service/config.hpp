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
#include <string>

namespace qcwb {

struct ServiceConfig {
    std::string host = "127.0.0.1";
    int port = 8080;
    std::string catalog_dir = "catalog";
    std::string static_dir;  // served at / when set
    int default_trials = 10000;
    int64_t default_shots = 1024;
    int max_qubits_sim = 16;
    int max_trials = 200000;
    int64_t max_shots = 10000000;
    uint64_t seed = 0;  // used when a request carries no seed
    int threads = 0;    // adjustment worker threads, 0 = OpenMP default
};

/// Applies QCWB_CATALOG_DIR, QCWB_PORT and QCWB_SEED on top of `base`.
/// Throws Error("invalid_config") for unparsable values.
ServiceConfig config_from_env(ServiceConfig base = {});

/// Throws Error("invalid_config") unless every limit is positive and the
/// defaults sit within them.
void check_config(const ServiceConfig &config);

}  // namespace qcwb
