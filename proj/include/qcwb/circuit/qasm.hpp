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

#include <string>
#include <string_view>

#include "qcwb/circuit/document.hpp"

namespace qcwb {

/// Formats an angle as the closest rational multiple of pi (tolerance 1e-12,
/// denominators up to 1024) or with 17 significant digits otherwise.
std::string format_angle(double radians);

/// OpenQASM 2.0 text. MCX with k controls is written as `c<k>x` with an
/// `opaque` declaration; observables are carried as `// observable:` comments.
std::string to_openqasm(const Circuit &circuit);

/// Parses the dialect produced by `to_openqasm` (plus whole-register
/// broadcast for single-qubit gates and barriers).
BuildResult parse_openqasm(std::string_view text);

}  // namespace qcwb
