#include <iostream>

#include "vidp/errors.hpp"
#include "vidp/server.hpp"

int main() {
    try {
        return vidp::run_server(vidp::ServerConfig::from_env());
    } catch (const vidp::Error& e) {
        std::cerr << "vidp-server: " << e.what() << '\n';
        return 2;
    }
}
