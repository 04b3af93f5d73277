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

#include "qcwb/machine/catalog.hpp"

#include <algorithm>
#include <fstream>

namespace qcwb {

const MachineProperties *CatalogSnapshot::find(const std::string &name) const {
    auto it = machines.find(name);
    return it == machines.end() ? nullptr : &it->second;
}

namespace {

bool is_machine_file(const std::filesystem::path &p) {
    const std::string name = p.filename().string();
    const std::string suffix = ".machine.json";
    return name.size() > suffix.size() && name.compare(name.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace

CatalogSnapshot load_catalog(const std::filesystem::path &dir) {
    namespace fs = std::filesystem;
    std::error_code ec;
    if (!fs::is_directory(dir, ec)) {
        throw Error("unreadable_catalog", "catalog directory is not readable: " + dir.string());
    }
    std::vector<fs::path> paths;
    for (fs::directory_iterator it(dir, ec), end; !ec && it != end; it.increment(ec)) {
        if (it->is_regular_file(ec) && is_machine_file(it->path())) {
            paths.push_back(it->path());
        }
    }
    if (ec) {
        throw Error("unreadable_catalog", "catalog directory is not readable: " + dir.string() + ": " + ec.message());
    }
    std::sort(paths.begin(), paths.end());

    CatalogSnapshot snap;
    snap.location = dir.string();
    for (const auto &p : paths) {
        FileReport report;
        report.file = p.filename().string();
        std::ifstream in(p);
        json doc = json::parse(in, nullptr, false);
        if (!in.good() && !in.eof()) {
            report.diagnostics.push_back(make_error("unreadable_file", "cannot read " + report.file));
        } else if (doc.is_discarded()) {
            report.diagnostics.push_back(make_error("malformed_json", "malformed JSON in " + report.file));
        } else {
            auto parsed = machine_from_json(doc);
            report.diagnostics = std::move(parsed.diagnostics);
            if (parsed.machine) {
                const std::string name = parsed.machine->name;
                if (snap.machines.count(name)) {
                    report.diagnostics.push_back(
                        make_error("duplicate_machine", "machine name '" + name + "' already loaded"));
                } else {
                    snap.machines.emplace(name, std::move(*parsed.machine));
                    report.loaded = true;
                }
            }
        }
        snap.files.push_back(std::move(report));
    }
    return snap;
}

Catalog::Catalog(CatalogSnapshot snapshot) : snap_(std::make_shared<CatalogSnapshot>(std::move(snapshot))) {
}

std::shared_ptr<const CatalogSnapshot> Catalog::snapshot() const {
    std::lock_guard lock(mu_);
    return snap_;
}

void Catalog::replace(CatalogSnapshot snapshot) {
    auto next = std::make_shared<const CatalogSnapshot>(std::move(snapshot));
    std::lock_guard lock(mu_);
    snap_ = std::move(next);
}

void Catalog::reload() {
    std::string location = snapshot()->location;
    if (location.empty()) {
        return;
    }
    replace(load_catalog(location));
}

}  // namespace qcwb
