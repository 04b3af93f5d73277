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

#include <httplib.h>

#include <regex>

#include "qcwb/machine/catalog.hpp"

namespace qcwb {

MachineParseResult fetch_machine(const std::string &url) {
    MachineParseResult res;
    static const std::regex re(R"(^http://([^/:]+)(:(\d+))?(/.*)?$)");
    std::smatch m;
    if (!std::regex_match(url, m, re)) {
        res.diagnostics.push_back(make_error("bad_url", "unsupported machine URL: " + url));
        return res;
    }
    const std::string host = m[1].str();
    const int port = m[3].matched ? std::stoi(m[3].str()) : 80;
    const std::string path = m[4].matched ? m[4].str() : "/";
    httplib::Client client(host, port);
    client.set_connection_timeout(5);
    client.set_read_timeout(10);
    auto resp = client.Get(path);
    if (!resp) {
        res.diagnostics.push_back(make_error("fetch_failed", "request to " + url + " failed: " +
                                                                 httplib::to_string(resp.error())));
        return res;
    }
    if (resp->status != 200) {
        res.diagnostics.push_back(
            make_error("fetch_failed", "request to " + url + " returned status " + std::to_string(resp->status)));
        return res;
    }
    json doc = json::parse(resp->body, nullptr, false);
    if (doc.is_discarded()) {
        res.diagnostics.push_back(make_error("malformed_json", "malformed JSON from " + url));
        return res;
    }
    return machine_from_json(doc);
}

}  // namespace qcwb
