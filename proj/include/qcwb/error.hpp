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

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qcwb {

/// Domain error raised by engine operations. `code` is a short stable token
/// (e.g. "index_out_of_range"); `what()` carries the human-readable message.
class Error : public std::runtime_error {
   public:
    Error(std::string code, const std::string &message) : std::runtime_error(message), code_(std::move(code)) {
    }
    const std::string &code() const noexcept {
        return code_;
    }

   private:
    std::string code_;
};

enum class Severity { Error, Warning };

struct Diagnostic {
    Severity severity = Severity::Error;
    std::string code;
    std::string message;
    std::optional<int> gate_id;

    bool operator==(const Diagnostic &) const = default;
};

using Diagnostics = std::vector<Diagnostic>;

inline bool has_errors(const Diagnostics &diags) {
    for (const auto &d : diags) {
        if (d.severity == Severity::Error) {
            return true;
        }
    }
    return false;
}

inline Diagnostic make_error(std::string code, std::string message, std::optional<int> gate_id = std::nullopt) {
    return Diagnostic{Severity::Error, std::move(code), std::move(message), gate_id};
}

inline Diagnostic make_warning(std::string code, std::string message, std::optional<int> gate_id = std::nullopt) {
    return Diagnostic{Severity::Warning, std::move(code), std::move(message), gate_id};
}

}  // namespace qcwb
