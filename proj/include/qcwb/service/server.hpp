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

#include <memory>
#include <ostream>

#include "qcwb/service/api.hpp"

namespace qcwb {

/// HTTP front end for Api. Binding and serving are split so callers can learn
/// the port before blocking (port 0 picks a free one).
class HttpServer {
   public:
    explicit HttpServer(std::shared_ptr<const Api> api);
    ~HttpServer();
    HttpServer(const HttpServer &) = delete;
    HttpServer &operator=(const HttpServer &) = delete;

    /// Returns the bound port; throws Error("bind_failed").
    int bind();
    /// Serves until stop() is called.
    void run();
    void stop();

   private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace qcwb
