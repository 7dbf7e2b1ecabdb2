#pragma once

/// @file http_api.hpp
/// @brief JSON-over-HTTP front end of StudyService.
///
/// Routes:
///
///     GET  /api/health                      {"status": "ok", "sessions": N}
///     GET  /api/schema                      JSON Schema of every payload
///     GET  /api/domains/{name}              vocabulary and introduction
///     POST /api/sessions                    create a session
///     GET  /api/sessions/{id}               session state
///     GET  /api/sessions/{id}/phase         content of the current phase
///     POST /api/sessions/{id}/responses     answer the current phase
///     GET  /api/sessions/{id}/trials        trial order of the session
///     POST /api/sessions/{id}/finalize      trial records and scores
///
/// Errors carry {"error": message} with status 400 (malformed body or
/// arguments), 404 (unknown session, domain or route), 405 (wrong method)
/// or 409 (phase-order violation).

#include <memory>
#include <string>
#include <string_view>

#include <json.hpp>

#include "faultlens/service/study_service.hpp"

namespace faultlens::service {

struct ApiResponse {
    int status = 200;
    nlohmann::json body;
};

/// Routes one request without any network involvement.
[[nodiscard]] ApiResponse dispatch(StudyService& service, std::string_view method, std::string_view path,
                                   std::string_view body);

/// The published schema (also served at /api/schema).
[[nodiscard]] const nlohmann::json& api_schema();

class HttpServer {
  public:
    explicit HttpServer(StudyService& service);
    HttpServer(const HttpServer&) = delete;
    HttpServer& operator=(const HttpServer&) = delete;
    ~HttpServer();

    /// Binds `host:port`; port 0 picks a free port.
    /// @return the bound port
    /// @throws TransportError if binding fails
    int bind(const std::string& host, int port);
    /// Serves until stop(); call after bind().
    void listen();
    void stop();

  private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace faultlens::service
