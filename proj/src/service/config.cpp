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

#include "qcwb/service/config.hpp"

#include <charconv>
#include <cstdlib>

#include "qcwb/error.hpp"

namespace qcwb {

namespace {

template <class T>
T parse_env(const char *name, const char *text) {
    T value{};
    const char *end = text + std::char_traits<char>::length(text);
    auto [p, ec] = std::from_chars(text, end, value);
    if (ec != std::errc() || p != end) {
        throw Error("invalid_config", std::string(name) + " is not a valid number: '" + text + "'");
    }
    return value;
}

}  // namespace

ServiceConfig config_from_env(ServiceConfig base) {
    if (const char *dir = std::getenv("QCWB_CATALOG_DIR"); dir && *dir) {
        base.catalog_dir = dir;
    }
    if (const char *port = std::getenv("QCWB_PORT"); port && *port) {
        base.port = parse_env<int>("QCWB_PORT", port);
    }
    if (const char *seed = std::getenv("QCWB_SEED"); seed && *seed) {
        base.seed = parse_env<uint64_t>("QCWB_SEED", seed);
    }
    check_config(base);
    return base;
}

void check_config(const ServiceConfig &c) {
    auto fail = [](const std::string &msg) { throw Error("invalid_config", msg); };
    if (c.port < 0 || c.port > 65535) {
        fail("port must lie in 0..65535");
    }
    if (c.max_qubits_sim < 1 || c.max_trials < 1 || c.max_shots < 1) {
        fail("limits must be positive");
    }
    if (c.default_trials < 1 || c.default_trials > c.max_trials) {
        fail("default_trials must lie in 1..max_trials");
    }
    if (c.default_shots < 1 || c.default_shots > c.max_shots) {
        fail("default_shots must lie in 1..max_shots");
    }
    if (c.threads < 0) {
        fail("threads must be non-negative");
    }
}

}  // namespace qcwb
