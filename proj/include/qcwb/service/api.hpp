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

#include <map>
#include <memory>
#include <string>

#include "qcwb/machine/catalog.hpp"
#include "qcwb/service/config.hpp"

namespace qcwb {

struct ApiRequest {
    std::string method;  // "GET", "POST"
    std::string path;    // without query string
    std::map<std::string, std::string> query;
    std::string body;
};

struct ApiResponse {
    int status = 200;
    std::string body;  // JSON text
};

/// Transport-free request router. Every response body is JSON; failures carry
/// {"diagnostics": [...]} with status 400 (malformed request), 404 (unknown
/// machine or route) or 422 (domain diagnostics). Safe for concurrent calls.
class Api {
   public:
    Api(ServiceConfig config, std::shared_ptr<Catalog> catalog);

    ApiResponse handle(const ApiRequest &request) const;

    const ServiceConfig &config() const {
        return config_;
    }
    const std::shared_ptr<Catalog> &catalog() const {
        return catalog_;
    }

   private:
    ServiceConfig config_;
    std::shared_ptr<Catalog> catalog_;
};

}  // namespace qcwb
