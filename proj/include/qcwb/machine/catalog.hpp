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

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "qcwb/machine/machine.hpp"

namespace qcwb {

struct FileReport {
    std::string file;  // file name relative to the catalog directory
    bool loaded = false;
    Diagnostics diagnostics;
};

struct CatalogSnapshot {
    std::string location;
    std::map<std::string, MachineProperties> machines;
    std::vector<FileReport> files;

    const MachineProperties *find(const std::string &name) const;
};

/// Reads every `*.machine.json` in `dir` (non-recursive, sorted by file name).
/// Invalid files are reported and skipped; a later file reusing a loaded name
/// is rejected. Throws Error("unreadable_catalog") if `dir` cannot be listed.
CatalogSnapshot load_catalog(const std::filesystem::path &dir);

/// Shared, read-mostly catalog. Readers grab a snapshot; reload swaps it whole.
class Catalog {
   public:
    Catalog() = default;
    explicit Catalog(CatalogSnapshot snapshot);

    std::shared_ptr<const CatalogSnapshot> snapshot() const;
    void replace(CatalogSnapshot snapshot);
    /// Re-reads the current location. On failure the old snapshot is kept.
    void reload();

   private:
    mutable std::mutex mu_;
    std::shared_ptr<const CatalogSnapshot> snap_ = std::make_shared<CatalogSnapshot>();
};

/// Fetches one machine document with a single HTTP GET (`http://host[:port]/path`)
/// and runs it through the same parser and validator as files.
MachineParseResult fetch_machine(const std::string &url);

}  // namespace qcwb
