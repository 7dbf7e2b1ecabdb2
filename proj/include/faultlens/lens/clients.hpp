#pragma once

/// @file clients.hpp
/// @brief Model client contract and the fixture, echo and HTTP adapters.

#include <chrono>
#include <filesystem>
#include <functional>
#include <memory>
#include <string>
#include <string_view>

namespace faultlens::lens {

enum class ClientRole { Coding, Reasoning, Judging };

[[nodiscard]] std::string_view to_string(ClientRole role);
[[nodiscard]] ClientRole parse_client_role(std::string_view name);

/// One completion request. `repetition` distinguishes repeated samples of the same prompt.
struct ModelRequest {
    std::string client;
    std::string system_text;
    std::string user_text;
    double temperature = 0.0;
    std::size_t repetition = 0;
};

/// Lowercase hex SHA-256 of a canonical JSON encoding of the request.
[[nodiscard]] std::string request_digest(const ModelRequest& request);
[[nodiscard]] std::string sha256_hex(std::string_view data);

class ModelClient {
  public:
    virtual ~ModelClient() = default;

    [[nodiscard]] virtual const std::string& name() const = 0;
    /// @throws TransportError when no response could be obtained
    [[nodiscard]] virtual std::string complete(const ModelRequest& request) = 0;
};

/// Canned responses read from `<dir>/<request digest>.txt`, falling back to `<dir>/default.txt`.
class FixtureClient : public ModelClient {
  public:
    FixtureClient(std::string name, std::filesystem::path directory);

    [[nodiscard]] const std::string& name() const override { return name_; }
    [[nodiscard]] std::string complete(const ModelRequest& request) override;

  private:
    std::string name_;
    std::filesystem::path directory_;
};

/// Synthetic deterministic responses derived from the request digest. As a
/// judge it ends with a rating, so whole runs work without any model.
class EchoClient : public ModelClient {
  public:
    EchoClient(std::string name, ClientRole role);

    [[nodiscard]] const std::string& name() const override { return name_; }
    [[nodiscard]] std::string complete(const ModelRequest& request) override;

  private:
    std::string name_;
    ClientRole role_;
};

struct HttpEndpoint {
    /// Scheme, host and optional port, e.g. `https://api.example.com`.
    std::string base_url;
    std::string path = "/v1/chat/completions";
    std::string model;
    /// Environment variable holding the bearer token; empty for none.
    std::string api_key_env;
    std::chrono::seconds timeout{120};
};

/// OpenAI-compatible chat completions endpoint.
class HttpChatClient : public ModelClient {
  public:
    HttpChatClient(std::string name, HttpEndpoint endpoint);

    [[nodiscard]] const std::string& name() const override { return name_; }
    [[nodiscard]] std::string complete(const ModelRequest& request) override;

  private:
    std::string name_;
    HttpEndpoint endpoint_;
};

struct RetryPolicy {
    std::size_t max_attempts = 3;
    std::chrono::milliseconds initial_backoff{500};
    double multiplier = 2.0;
};

/// Calls `client` until it succeeds or `policy.max_attempts` is exhausted,
/// sleeping with exponential backoff between attempts.
/// @throws TransportError carrying the last failure
[[nodiscard]] std::string complete_with_retry(
    ModelClient& client, const ModelRequest& request, const RetryPolicy& policy,
    const std::function<void(std::chrono::milliseconds)>& sleep = {});

}  // namespace faultlens::lens
