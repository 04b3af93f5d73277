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

#include "qcwb/service/server.hpp"

#include <httplib.h>

namespace qcwb {

struct HttpServer::Impl {
    std::shared_ptr<const Api> api;
    httplib::Server server;
};

HttpServer::HttpServer(std::shared_ptr<const Api> api) : impl_(std::make_unique<Impl>()) {
    impl_->api = std::move(api);
    auto handler = [api = impl_->api](const httplib::Request &req, httplib::Response &res) {
        ApiRequest r;
        r.method = req.method;
        r.path = req.path;
        for (const auto &[k, v] : req.params) {
            r.query.emplace(k, v);
        }
        r.body = req.body;
        ApiResponse out = api->handle(r);
        res.status = out.status;
        res.set_content(out.body, "application/json");
    };
    auto &s = impl_->server;
    const std::string &static_dir = impl_->api->config().static_dir;
    if (!static_dir.empty() && !s.set_mount_point("/", static_dir)) {
        throw Error("invalid_config", "static directory not found: " + static_dir);
    }
    s.Get("/machines", handler);
    s.Get(R"(/machines/[^/]+)", handler);
    s.Post(R"(/.*)", handler);
    s.set_default_headers({{"Access-Control-Allow-Origin", "*"}});
    s.Options(R"(/.*)", [](const httplib::Request &, httplib::Response &res) {
        res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
        res.set_header("Access-Control-Allow-Headers", "Content-Type");
        res.status = 204;
    });
}

HttpServer::~HttpServer() {
    stop();
}

int HttpServer::bind() {
    const auto &cfg = impl_->api->config();
    int port = cfg.port == 0 ? impl_->server.bind_to_any_port(cfg.host) : cfg.port;
    if (cfg.port != 0 && !impl_->server.bind_to_port(cfg.host, cfg.port)) {
        port = -1;
    }
    if (port <= 0) {
        throw Error("bind_failed", "cannot bind " + cfg.host + ":" + std::to_string(cfg.port));
    }
    return port;
}

void HttpServer::run() {
    impl_->server.listen_after_bind();
}

void HttpServer::stop() {
    if (impl_ && impl_->server.is_running()) {
        impl_->server.stop();
    }
}

}  // namespace qcwb
