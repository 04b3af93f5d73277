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
#include <string>
#include <string_view>

#include "qcwb/circuit/circuit.hpp"

namespace qcwb {

/// Output dialect for generated snippets. `OpenQasm2` is normative for
/// circuits; `WorkbenchCli` is normative for machine-property selections;
/// `Qiskit` is a best-effort template for both.
enum class SnippetDialect { OpenQasm2, Qiskit, WorkbenchCli };

std::optional<SnippetDialect> parse_dialect(std::string_view name);
std::string_view dialect_name(SnippetDialect d);

/// Deterministic source text reproducing the circuit. Throws for
/// `WorkbenchCli`, which has no circuit form.
std::string emit_snippet(const Circuit &circuit, SnippetDialect dialect);

}  // namespace qcwb
