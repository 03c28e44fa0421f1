#pragma once

#include <chrono>
#include <cstddef>
#include <memory>
#include <string>

namespace httplib {
class Server;
}

namespace vidp {

struct ServerConfig {
    std::string host = "127.0.0.1";
    int port = 8080;
    std::size_t max_points = 5'000'000;
    std::chrono::milliseconds idle_timeout = std::chrono::minutes(30);
    std::string cors_origin = "*";

    // VIDP_HOST, VIDP_PORT, VIDP_MAX_POINTS, VIDP_SESSION_IDLE_SECONDS and
    // VIDP_CORS_ORIGIN override the defaults when set.
    static ServerConfig from_env();
};

// In-memory session store plus the HTTP routes that operate on it.
//
//   POST   /sessions                 upload CSV (multipart field "file" or raw body)
//   GET    /sessions/{id}            session summary
//   DELETE /sessions/{id}
//   GET    /sessions/{id}/render     PNG, X-Revision header; ?rev= must match
//   PATCH  /sessions/{id}/params     {eta, phi, colormap, background, technique, light}
//   POST   /sessions/{id}/brush      {rect|polygon, eta_local, feather}
//   POST   /sessions/{id}/relight    {region?}
//   GET    /sessions/{id}/probe      ?x=&y= in image pixels (row 0 at the top)
//
// Mutations accept an If-Match revision and answer 409 when it is stale.
class RenderService {
public:
    explicit RenderService(ServerConfig config = {});
    ~RenderService();
    RenderService(const RenderService&) = delete;
    RenderService& operator=(const RenderService&) = delete;

    void mount(httplib::Server& server);

    std::size_t session_count() const;
    std::size_t evict_idle();
    const ServerConfig& config() const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

// Serves until the process is interrupted or listening fails; returns the
// process exit code.
int run_server(const ServerConfig& config);

}  // namespace vidp
