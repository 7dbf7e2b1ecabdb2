#include "faultlens/service/http_api.hpp"

#include <httplib.h>

#include <vector>

#include "faultlens/assets.hpp"
#include "faultlens/error.hpp"

namespace faultlens::service {

using nlohmann::json;

namespace {

std::vector<std::string_view> split_path(std::string_view path) {
    if (const auto q = path.find('?'); q != std::string_view::npos) {
        path = path.substr(0, q);
    }
    std::vector<std::string_view> parts;
    while (!path.empty()) {
        const auto slash = path.find('/');
        const auto part = path.substr(0, slash);
        if (!part.empty()) {
            parts.push_back(part);
        }
        if (slash == std::string_view::npos) {
            break;
        }
        path.remove_prefix(slash + 1);
    }
    return parts;
}

json parse_body(std::string_view body) {
    if (body.find_first_not_of(" \t\r\n") == std::string_view::npos) {
        return nullptr;
    }
    try {
        return json::parse(body);
    } catch (const json::parse_error& e) {
        throw InvalidArgumentError(std::string("malformed JSON body: ") + e.what());
    }
}

struct MethodNotAllowed {};

ApiResponse error(int status, std::string_view message) { return {status, {{"error", message}}}; }

ApiResponse route(StudyService& service, std::string_view method, const std::vector<std::string_view>& p,
                  std::string_view body) {
    const bool get = method == "GET";
    const bool post = method == "POST";
    if (p.size() < 2 || p[0] != "api") {
        return error(404, "no such route");
    }
    auto expect = [&](bool ok) {
        if (!ok) {
            throw MethodNotAllowed{};
        }
    };
    try {
        if (p.size() == 2 && p[1] == "health") {
            expect(get);
            return {200, {{"status", "ok"}, {"sessions", service.session_count()}}};
        }
        if (p.size() == 2 && p[1] == "schema") {
            expect(get);
            return {200, api_schema()};
        }
        if (p.size() == 3 && p[1] == "domains") {
            expect(get);
            return {200, service.domain(p[2])};
        }
        if (p[1] == "sessions") {
            if (p.size() == 2) {
                expect(post);
                return {201, service.create_session(parse_body(body))};
            }
            const auto id = p[2];
            if (p.size() == 3) {
                expect(get);
                return {200, service.session_state(id)};
            }
            if (p.size() == 4 && p[3] == "phase") {
                expect(get);
                return {200, service.phase_content(id)};
            }
            if (p.size() == 4 && p[3] == "trials") {
                expect(get);
                return {200, service.trials(id)};
            }
            if (p.size() == 4 && p[3] == "responses") {
                expect(post);
                return {200, service.submit(id, parse_body(body))};
            }
            if (p.size() == 4 && p[3] == "finalize") {
                expect(post);
                return {200, service.finalize(id)};
            }
        }
    } catch (const MethodNotAllowed&) {
        return error(405, "method not allowed");
    }
    return error(404, "no such route");
}

}  // namespace

const json& api_schema() {
    static const json schema = json::parse(assets::get("api/schema.json"));
    return schema;
}

ApiResponse dispatch(StudyService& service, std::string_view method, std::string_view path, std::string_view body) {
    try {
        return route(service, method, split_path(path), body);
    } catch (const NotFoundError& e) {
        return error(404, e.what());
    } catch (const ConflictError& e) {
        return error(409, e.what());
    } catch (const InvalidArgumentError& e) {
        return error(400, e.what());
    } catch (const ParseError& e) {
        return error(400, e.what());
    } catch (const std::exception& e) {
        return error(500, e.what());
    }
}

struct HttpServer::Impl {
    explicit Impl(StudyService& s) : service(s) {}

    StudyService& service;
    httplib::Server server;
};

HttpServer::HttpServer(StudyService& service) : impl_(std::make_unique<Impl>(service)) {
    auto handler = [this](const httplib::Request& req, httplib::Response& res) {
        const auto out = dispatch(impl_->service, req.method, req.path, req.body);
        res.status = out.status;
        res.set_header("Access-Control-Allow-Origin", "*");
        res.set_content(out.body.dump(), "application/json");
    };
    impl_->server.Get(".*", handler);
    impl_->server.Post(".*", handler);
    impl_->server.Options(".*", [](const httplib::Request&, httplib::Response& res) {
        res.set_header("Access-Control-Allow-Origin", "*");
        res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
        res.set_header("Access-Control-Allow-Headers", "Content-Type");
        res.status = 204;
    });
}

HttpServer::~HttpServer() { stop(); }

int HttpServer::bind(const std::string& host, int port) {
    const int bound = port == 0 ? impl_->server.bind_to_any_port(host) : (impl_->server.bind_to_port(host, port) ? port : -1);
    if (bound <= 0) {
        throw TransportError("cannot bind " + host + ":" + std::to_string(port));
    }
    return bound;
}

void HttpServer::listen() { impl_->server.listen_after_bind(); }

void HttpServer::stop() {
    if (impl_) {
        impl_->server.stop();
    }
}

}  // namespace faultlens::service
