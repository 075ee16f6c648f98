#pragma once

#include "service.hpp"

#include <httplib.h>

#include <cstdlib>

namespace drops {

// Routes every request through Service::handle; all responses are application/json.
inline void bind_routes(httplib::Server& server, Service& service) {
    auto forward = [&service](const httplib::Request& req, httplib::Response& res) {
        const Response r = service.handle(req.method, req.path, req.body);
        res.status = r.status;
        res.set_content(r.body.dump(), "application/json");
    };
    const char* any = R"(/.*)";
    server.Get(any, forward);
    server.Post(any, forward);
    server.Delete(any, forward);
    server.Put(any, forward);
}

struct BindAddress {
    std::string host = "127.0.0.1";
    int port = 8080;
};

// DROPS_BIND (host) and DROPS_PORT override the defaults.
inline BindAddress bind_address_from_env() {
    BindAddress a;
    if (const char* h = std::getenv("DROPS_BIND"); h && *h) a.host = h;
    if (const char* p = std::getenv("DROPS_PORT"); p && *p) {
        try {
            a.port = std::stoi(p);
        } catch (const std::logic_error&) {
            throw Error(std::string("DROPS_PORT is not a number: ") + p);
        }
        if (a.port < 0 || a.port > 65535) throw Error("DROPS_PORT out of range");
    }
    return a;
}

}  // namespace drops
