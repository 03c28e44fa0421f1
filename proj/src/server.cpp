#include "vidp/server.hpp"

#include <httplib.h>

#include <atomic>
#include <csignal>
#include <cstdlib>
#include <iostream>
#include <mutex>
#include <optional>
#include <random>
#include <sstream>
#include <unordered_map>

#include "json.hpp"
#include "vidp/errors.hpp"
#include "vidp/io.hpp"
#include "vidp/pipeline.hpp"

namespace vidp {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

namespace {

struct HttpError : std::runtime_error {
    HttpError(int status, const std::string& what) : std::runtime_error(what), status(status) {}
    int status;
};

struct Stroke {
    BrushRegion region;
    double eta_local;
    double feather;
};

struct Session {
    std::mutex mu;
    std::string id;
    std::shared_ptr<const PointSet> points;
    StagedRenderer renderer;
    RenderParams params;
    double global_eta = EtaField::kDefault;
    std::vector<Stroke> strokes;
    std::uint64_t revision = 1;
    Clock::time_point last_used = Clock::now();

    std::optional<RenderResult> result;
    std::uint64_t result_revision = 0;
    std::vector<std::uint8_t> png;

    explicit Session(std::shared_ptr<const PointSet> pts) : points(pts), renderer(std::move(pts)) {}

    const RenderResult& current() {
        if (!result || result_revision != revision) {
            result = renderer.render(params);
            png = encode_png(result->image);
            result_revision = revision;
        }
        return *result;
    }

    void rebuild_eta() {
        EtaField eta(global_eta);
        for (const auto& s : strokes) {
            eta = local_eta_apply(eta, s.region, s.eta_local, s.feather, params.width, params.height);
        }
        params.eta = eta;
    }
};

std::optional<std::size_t> env_size(const char* name) {
    const char* v = std::getenv(name);
    if (!v || !*v) return std::nullopt;
    try {
        return static_cast<std::size_t>(std::stoull(v));
    } catch (const std::logic_error&) {
        throw InvalidParams(std::string(name) + " must be a non-negative integer");
    }
}

std::string random_id() {
    static std::mutex mu;
    static std::mt19937_64 rng{std::random_device{}()};
    std::lock_guard lock(mu);
    std::ostringstream os;
    os << std::hex << rng() << rng();
    return os.str();
}

json parse_body(const httplib::Request& req) {
    if (req.body.empty()) return json::object();
    json doc = json::parse(req.body, nullptr, false);
    if (doc.is_discarded()) throw HttpError(400, "request body is not valid JSON");
    if (!doc.is_object()) throw HttpError(400, "request body must be a JSON object");
    return doc;
}

double number_field(const json& doc, const char* key) {
    const auto& v = doc.at(key);
    if (!v.is_number()) throw HttpError(400, std::string("'") + key + "' must be a number");
    return v.get<double>();
}

// Image pixel coordinates have row 0 at the top; the field grid has row 0 at
// the bottom.
BrushRegion parse_region(const json& doc, int height) {
    const double flip = static_cast<double>(height - 1);
    if (doc.contains("rect")) {
        const auto& r = doc.at("rect");
        if (r.is_array() && r.size() == 4) {
            return BrushRegion::rect(r[0].get<double>(), flip - r[1].get<double>(), r[2].get<double>(),
                                     flip - r[3].get<double>());
        }
        if (r.is_object()) {
            const double x = number_field(r, "x"), y = number_field(r, "y");
            const double w = number_field(r, "width"), h = number_field(r, "height");
            return BrushRegion::rect(x, flip - y, x + w, flip - (y + h));
        }
        throw HttpError(400, "'rect' must be [x0, y0, x1, y1] or {x, y, width, height}");
    }
    if (doc.contains("polygon")) {
        const auto& p = doc.at("polygon");
        if (!p.is_array()) throw HttpError(400, "'polygon' must be an array of [x, y] vertices");
        std::vector<Vec2> verts;
        for (const auto& v : p) {
            if (v.is_array() && v.size() == 2) {
                verts.push_back({v[0].get<double>(), flip - v[1].get<double>()});
            } else if (v.is_object()) {
                verts.push_back({number_field(v, "x"), flip - number_field(v, "y")});
            } else {
                throw HttpError(400, "polygon vertices must be [x, y] or {x, y}");
            }
        }
        return BrushRegion::poly(std::move(verts));
    }
    throw HttpError(400, "region needs 'rect' or 'polygon'");
}

json light_json(const LightConfig& l) { return {{"azimuth", l.azimuth()}, {"elevation", l.elevation()}}; }

void check_if_match(const httplib::Request& req, const Session& s) {
    if (!req.has_header("If-Match")) return;
    std::string tag = req.get_header_value("If-Match");
    if (tag == "*") return;
    if (tag.size() >= 2 && tag.front() == '"' && tag.back() == '"') tag = tag.substr(1, tag.size() - 2);
    if (tag != std::to_string(s.revision)) {
        throw HttpError(409, "stale revision " + tag + "; current is " + std::to_string(s.revision));
    }
}

void send_json(httplib::Response& res, const json& doc, int status = 200) {
    res.status = status;
    res.set_content(doc.dump(), "application/json");
}

}  // namespace

ServerConfig ServerConfig::from_env() {
    ServerConfig c;
    if (const char* h = std::getenv("VIDP_HOST"); h && *h) c.host = h;
    if (auto p = env_size("VIDP_PORT")) c.port = static_cast<int>(*p);
    if (auto m = env_size("VIDP_MAX_POINTS")) c.max_points = *m;
    if (auto s = env_size("VIDP_SESSION_IDLE_SECONDS")) c.idle_timeout = std::chrono::seconds(*s);
    if (const char* o = std::getenv("VIDP_CORS_ORIGIN"); o && *o) c.cors_origin = o;
    return c;
}

struct RenderService::Impl {
    ServerConfig config;
    mutable std::mutex mu;
    std::unordered_map<std::string, std::shared_ptr<Session>> sessions;

    std::shared_ptr<Session> find(const std::string& id) {
        evict();
        std::lock_guard lock(mu);
        auto it = sessions.find(id);
        if (it == sessions.end()) throw HttpError(404, "unknown session '" + id + "'");
        return it->second;
    }

    std::size_t evict() {
        const auto now = Clock::now();
        std::vector<std::shared_ptr<Session>> doomed;
        std::lock_guard lock(mu);
        for (auto it = sessions.begin(); it != sessions.end();) {
            std::unique_lock slock(it->second->mu, std::try_to_lock);
            if (slock.owns_lock() && now - it->second->last_used > config.idle_timeout) {
                slock.unlock();
                doomed.push_back(it->second);
                it = sessions.erase(it);
            } else {
                ++it;
            }
        }
        return doomed.size();
    }

    json summary(Session& s) {
        json params = params_to_json(s.params);
        params.erase("intensity_floor");
        params["eta"] = s.global_eta;
        const RenderResult& r = s.current();
        const Bounds& b = s.renderer.density(s.params).grid.bounds();
        return {{"session_id", s.id},
                {"n", s.points->size()},
                {"bounds", {{"xmin", b.xmin}, {"xmax", b.xmax}, {"ymin", b.ymin}, {"ymax", b.ymax}}},
                {"revision", s.revision},
                {"strokes", s.strokes.size()},
                {"light", light_json(r.light)},
                {"params", params}};
    }

    void create(const httplib::Request& req, httplib::Response& res) {
        std::string body;
        DatasetSource src;
        if (req.is_multipart_form_data()) {
            if (!req.has_file("file")) throw HttpError(400, "multipart upload needs a 'file' field");
            body = req.get_file_value("file").content;
            for (const char* key : {"x", "y"}) {
                if (!req.has_file(key)) continue;
                const std::string v = req.get_file_value(key).content;
                auto& name = key[0] == 'x' ? src.x_name : src.y_name;
                auto& index = key[0] == 'x' ? src.x_index : src.y_index;
                if (!v.empty() && v.find_first_not_of("0123456789") == std::string::npos) {
                    index = std::stoul(v);
                } else {
                    name = v;
                }
            }
        } else {
            body = req.body;
        }
        if (req.has_param("x")) src.x_name = req.get_param_value("x");
        if (req.has_param("y")) src.y_name = req.get_param_value("y");
        if (req.has_param("header")) src.header = req.get_param_value("header") != "false";
        src.row_limit = config.max_points + 1;

        std::istringstream in(body);
        LoadedDataset data = load_csv(in, src);
        if (data.points.size() > config.max_points) {
            throw HttpError(413, "dataset exceeds the limit of " + std::to_string(config.max_points) + " points");
        }
        auto pts = std::make_shared<const PointSet>(std::move(data.points));
        auto session = std::make_shared<Session>(pts);
        session->id = random_id();
        json doc;
        {
            std::lock_guard slock(session->mu);
            doc = summary(*session);
            doc["skipped_rows"] = data.skipped_rows;
            session->last_used = Clock::now();
        }
        {
            std::lock_guard lock(mu);
            sessions.emplace(session->id, session);
        }
        send_json(res, doc, 201);
    }

    void render(Session& s, const httplib::Request& req, httplib::Response& res) {
        if (req.has_param("rev") && req.get_param_value("rev") != std::to_string(s.revision)) {
            throw HttpError(409, "revision " + req.get_param_value("rev") + " is stale; current is " +
                                     std::to_string(s.revision));
        }
        s.current();
        res.set_header("X-Revision", std::to_string(s.revision));
        res.set_header("ETag", "\"" + std::to_string(s.revision) + "\"");
        res.set_header("Cache-Control", "no-store");
        res.set_content(reinterpret_cast<const char*>(s.png.data()), s.png.size(), "image/png");
    }

    void patch(Session& s, const httplib::Request& req, httplib::Response& res) {
        check_if_match(req, s);
        json doc = parse_body(req);
        RenderParams next = s.params;
        double eta = s.global_eta;
        bool reset_floor = false;
        json rest = json::object();
        for (auto& [key, v] : doc.items()) {
            if (key == "eta") {
                if (!v.is_number()) throw HttpError(400, "'eta' must be a number");
                eta = v.get<double>();
                if (!(eta > 0.0) || !std::isfinite(eta)) throw InvalidParams("eta must be positive");
                reset_floor = true;
            } else if (key == "phi" || key == "colormap" || key == "background" || key == "technique" ||
                       key == "light") {
                rest[key] = v;
                if (key == "light" || key == "technique") reset_floor = true;
            } else {
                throw HttpError(400, "unknown parameter '" + key + "'");
            }
        }
        next = params_from_json(rest, next);
        if (reset_floor) next.intensity_floor.reset();
        next.validate();
        if (rest.contains("colormap")) Colormap::resolve(next.colormap);

        const double prev_eta = s.global_eta;
        const RenderParams prev = s.params;
        s.params = next;
        s.global_eta = eta;
        try {
            if (eta != prev_eta) s.rebuild_eta();
        } catch (...) {
            s.params = prev;
            s.global_eta = prev_eta;
            throw;
        }
        ++s.revision;
        send_json(res, summary(s));
    }

    void brush(Session& s, const httplib::Request& req, httplib::Response& res) {
        check_if_match(req, s);
        json doc = parse_body(req);
        if (!doc.contains("eta_local")) throw HttpError(400, "brush needs 'eta_local'");
        const double eta_local = number_field(doc, "eta_local");
        const double feather = doc.contains("feather") ? number_field(doc, "feather") : 5.0;
        const BrushRegion region = parse_region(doc, s.params.height);
        const EtaField eta = local_eta_apply(s.params.eta, region, eta_local, feather, s.params.width,
                                             s.params.height);
        if (!(eta == s.params.eta)) {
            // Freeze the global light and intensity range so only brushed
            // pixels change.
            const RenderResult& r = s.current();
            if (s.params.technique == Technique::vidp) {
                if (!s.params.light) s.params.light = r.light;
                if (!s.params.intensity_floor) s.params.intensity_floor = r.i_min;
            }
            s.params.eta = eta;
            s.strokes.push_back({region, eta_local, feather});
        }
        ++s.revision;
        send_json(res, summary(s));
    }

    void relight(Session& s, const httplib::Request& req, httplib::Response& res) {
        check_if_match(req, s);
        json doc = parse_body(req);
        std::optional<LightConfig> light;
        if (doc.contains("region") && !doc.at("region").is_null()) {
            const BrushRegion region = parse_region(doc.at("region"), s.params.height);
            const std::vector<double> w = brush_weights(region, s.params.width, s.params.height, 0.0);
            std::vector<bool> mask(w.size());
            for (std::size_t k = 0; k < w.size(); ++k) mask[k] = w[k] > 0.0;
            RenderParams p = s.params;
            light = s.renderer.auto_light_for(p, &mask);
        } else {
            light = s.renderer.auto_light_for(s.params);
        }
        s.params.light = *light;
        s.params.intensity_floor.reset();
        ++s.revision;
        send_json(res, {{"azimuth", light->azimuth()}, {"elevation", light->elevation()}, {"revision", s.revision}});
    }

    void probe(Session& s, const httplib::Request& req, httplib::Response& res) {
        if (!req.has_param("x") || !req.has_param("y")) throw HttpError(400, "probe needs x and y");
        int x = 0, y = 0;
        try {
            x = std::stoi(req.get_param_value("x"));
            y = std::stoi(req.get_param_value("y"));
        } catch (const std::logic_error&) {
            throw HttpError(400, "x and y must be integers");
        }
        const RenderResult& r = s.current();
        const int w = r.image.width(), h = r.image.height();
        if (x < 0 || x >= w || y < 0 || y >= h) throw HttpError(400, "probe position outside the image");
        const int j = h - 1 - y;
        const Rgb8Image img = quantize(r.image);
        const std::size_t k = r.image.index(x, j);
        const double d = r.density(x, j);
        const double maxd = r.density.max();
        const Lab lab = rgb_to_lab(r.image(x, j));
        const GridTransform& g = r.density.transform();
        send_json(res, {{"x", x},
                        {"y", y},
                        {"data_x", g.node_x(x)},
                        {"data_y", g.node_y(j)},
                        {"density", d},
                        {"normalized", maxd > 0.0 ? d / maxd : 0.0},
                        {"color", {img.data[3 * k], img.data[3 * k + 1], img.data[3 * k + 2]}},
                        {"luminance", lab.l},
                        {"revision", s.revision}});
    }
};

RenderService::RenderService(ServerConfig config) : impl_(std::make_unique<Impl>()) {
    impl_->config = std::move(config);
}

RenderService::~RenderService() = default;

std::size_t RenderService::session_count() const {
    std::lock_guard lock(impl_->mu);
    return impl_->sessions.size();
}

std::size_t RenderService::evict_idle() { return impl_->evict(); }

const ServerConfig& RenderService::config() const { return impl_->config; }

void RenderService::mount(httplib::Server& server) {
    Impl* impl = impl_.get();

    server.set_default_headers({{"Access-Control-Allow-Origin", impl->config.cors_origin},
                                {"Access-Control-Expose-Headers", "X-Revision, ETag"}});
    server.set_payload_max_length(std::size_t{4} << 30);
    server.Options(R"(.*)", [](const httplib::Request&, httplib::Response& res) {
        res.set_header("Access-Control-Allow-Methods", "GET, POST, PATCH, DELETE, OPTIONS");
        res.set_header("Access-Control-Allow-Headers", "Content-Type, If-Match");
        res.status = 204;
    });

    using Handler = std::function<void(const httplib::Request&, httplib::Response&)>;
    auto guarded = [](Handler fn) {
        return [fn = std::move(fn)](const httplib::Request& req, httplib::Response& res) {
            try {
                fn(req, res);
            } catch (const HttpError& e) {
                send_json(res, {{"error", e.what()}}, e.status);
            } catch (const json::exception& e) {
                send_json(res, {{"error", std::string("invalid request body: ") + e.what()}}, 400);
            } catch (const IoError& e) {
                send_json(res, {{"error", e.what()}}, 500);
            } catch (const Error& e) {
                send_json(res, {{"error", e.what()}}, 400);
            } catch (const std::exception& e) {
                send_json(res, {{"error", e.what()}}, 500);
            }
        };
    };
    // Runs `fn` with the session locked and its idle clock refreshed.
    auto with_session = [impl, guarded](void (Impl::*fn)(Session&, const httplib::Request&, httplib::Response&)) {
        return guarded([impl, fn](const httplib::Request& req, httplib::Response& res) {
            auto s = impl->find(req.path_params.at("id"));
            std::lock_guard lock(s->mu);
            s->last_used = Clock::now();
            (impl->*fn)(*s, req, res);
            s->last_used = Clock::now();
        });
    };

    server.Post("/sessions", guarded([impl](const httplib::Request& req, httplib::Response& res) {
                    impl->evict();
                    impl->create(req, res);
                }));
    server.Get("/sessions/:id", guarded([impl](const httplib::Request& req, httplib::Response& res) {
                   auto s = impl->find(req.path_params.at("id"));
                   std::lock_guard lock(s->mu);
                   s->last_used = Clock::now();
                   send_json(res, impl->summary(*s));
               }));
    server.Delete("/sessions/:id", guarded([impl](const httplib::Request& req, httplib::Response& res) {
                      const std::string id = req.path_params.at("id");
                      std::lock_guard lock(impl->mu);
                      if (impl->sessions.erase(id) == 0) throw HttpError(404, "unknown session '" + id + "'");
                      res.status = 204;
                  }));
    server.Get("/sessions/:id/render", with_session(&Impl::render));
    server.Patch("/sessions/:id/params", with_session(&Impl::patch));
    server.Post("/sessions/:id/brush", with_session(&Impl::brush));
    server.Post("/sessions/:id/relight", with_session(&Impl::relight));
    server.Get("/sessions/:id/probe", with_session(&Impl::probe));
    server.Get("/health", [](const httplib::Request&, httplib::Response& res) {
        send_json(res, {{"status", "ok"}});
    });
}

namespace {
std::atomic<httplib::Server*> g_server{nullptr};
extern "C" void stop_on_signal(int) {
    if (auto* s = g_server.load()) s->stop();
}
}  // namespace

int run_server(const ServerConfig& config) {
    RenderService service(config);
    httplib::Server server;
    service.mount(server);
    g_server = &server;
    std::signal(SIGINT, stop_on_signal);
    std::signal(SIGTERM, stop_on_signal);
    std::cerr << "vidp-server listening on http://" << config.host << ':' << config.port << '\n';
    const bool ok = server.listen(config.host, config.port);
    g_server = nullptr;
    if (!ok) {
        std::cerr << "vidp-server: cannot listen on " << config.host << ':' << config.port << '\n';
        return 1;
    }
    return 0;
}

}  // namespace vidp
