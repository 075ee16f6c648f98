#include <drops/http.hpp>

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
    CLI::App app{"Droplet scene service"};
    drops::BindAddress addr;
    try {
        addr = drops::bind_address_from_env();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    int ttl_minutes = 30;
    app.add_option("--host", addr.host, "Bind address (env DROPS_BIND)");
    app.add_option("--port", addr.port, "Port (env DROPS_PORT)");
    app.add_option("--ttl", ttl_minutes, "Idle session lifetime in minutes");
    CLI11_PARSE(app, argc, argv);

    drops::Service service{std::chrono::minutes(ttl_minutes)};
    httplib::Server server;
    drops::bind_routes(server, service);
    std::cerr << "listening on " << addr.host << ":" << addr.port << "\n";
    if (!server.listen(addr.host, addr.port)) {
        std::cerr << "error: cannot bind " << addr.host << ":" << addr.port << "\n";
        return 1;
    }
    return 0;
}
