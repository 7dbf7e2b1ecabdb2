#include "faultlens/lens/clients.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#include <httplib.h>
#include <json.hpp>
#include <openssl/evp.h>

#include "faultlens/error.hpp"

namespace faultlens::lens {

using nlohmann::json;

std::string_view to_string(ClientRole role) {
    switch (role) {
    case ClientRole::Coding:
        return "coding";
    case ClientRole::Reasoning:
        return "reasoning";
    case ClientRole::Judging:
        return "judging";
    }
    return "coding";
}

ClientRole parse_client_role(std::string_view name) {
    for (auto role : {ClientRole::Coding, ClientRole::Reasoning, ClientRole::Judging}) {
        if (to_string(role) == name) {
            return role;
        }
    }
    throw InvalidArgumentError("unknown client role '" + std::string(name) + "'");
}

std::string sha256_hex(std::string_view data) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int length = 0;
    if (EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
        throw Error("SHA-256 computation failed");
    }
    static constexpr char kHex[] = "0123456789abcdef";
    std::string hex;
    hex.reserve(length * 2);
    for (unsigned int i = 0; i < length; ++i) {
        hex.push_back(kHex[digest[i] >> 4]);
        hex.push_back(kHex[digest[i] & 0xf]);
    }
    return hex;
}

std::string request_digest(const ModelRequest& request) {
    const json canonical{{"client", request.client},
                         {"system", request.system_text},
                         {"user", request.user_text},
                         {"temperature", request.temperature},
                         {"repetition", request.repetition}};
    return sha256_hex(canonical.dump());
}

FixtureClient::FixtureClient(std::string name, std::filesystem::path directory)
    : name_(std::move(name)), directory_(std::move(directory)) {}

std::string FixtureClient::complete(const ModelRequest& request) {
    for (const auto& file : {request_digest(request) + ".txt", std::string("default.txt")}) {
        std::ifstream in(directory_ / file, std::ios::binary);
        if (in) {
            std::ostringstream text;
            text << in.rdbuf();
            return text.str();
        }
    }
    throw TransportError("fixture client '" + name_ + "' has no response for request " +
                         request_digest(request).substr(0, 12) + " in " + directory_.string());
}

EchoClient::EchoClient(std::string name, ClientRole role) : name_(std::move(name)), role_(role) {}

std::string EchoClient::complete(const ModelRequest& request) {
    const auto digest = request_digest(request);
    std::string text = name_ + " response " + digest.substr(0, 12) + " (" +
                       std::to_string(request.user_text.size()) + " characters of input, repetition " +
                       std::to_string(request.repetition) + ").";
    if (role_ == ClientRole::Judging) {
        const int rating = 1 + static_cast<int>(std::stoul(digest.substr(0, 8), nullptr, 16) % 10);
        text += "\nRating: [[" + std::to_string(rating) + "]]";
    }
    return text;
}

HttpChatClient::HttpChatClient(std::string name, HttpEndpoint endpoint)
    : name_(std::move(name)), endpoint_(std::move(endpoint)) {}

std::string HttpChatClient::complete(const ModelRequest& request) {
    httplib::Client http(endpoint_.base_url);
    http.set_connection_timeout(endpoint_.timeout);
    http.set_read_timeout(endpoint_.timeout);

    httplib::Headers headers;
    if (!endpoint_.api_key_env.empty()) {
        const char* key = std::getenv(endpoint_.api_key_env.c_str());
        if (key == nullptr || *key == '\0') {
            throw TransportError("environment variable " + endpoint_.api_key_env + " is not set");
        }
        headers.emplace("Authorization", std::string("Bearer ") + key);
    }
    const json body{{"model", endpoint_.model},
                    {"temperature", request.temperature},
                    {"messages",
                     json::array({json{{"role", "system"}, {"content", request.system_text}},
                                  json{{"role", "user"}, {"content", request.user_text}}})}};
    const auto response = http.Post(endpoint_.path, headers, body.dump(), "application/json");
    if (!response) {
        throw TransportError("request to " + endpoint_.base_url + " failed: " + httplib::to_string(response.error()));
    }
    if (response->status != 200) {
        throw TransportError("endpoint " + endpoint_.base_url + " answered HTTP " + std::to_string(response->status));
    }
    try {
        return json::parse(response->body).at("choices").at(0).at("message").at("content").get<std::string>();
    } catch (const json::exception& e) {
        throw TransportError(std::string("unexpected response shape: ") + e.what());
    }
}

std::string complete_with_retry(ModelClient& client, const ModelRequest& request, const RetryPolicy& policy,
                                const std::function<void(std::chrono::milliseconds)>& sleep) {
    auto backoff = policy.initial_backoff;
    std::string last_error = "no attempt made";
    for (std::size_t attempt = 1; attempt <= std::max<std::size_t>(1, policy.max_attempts); ++attempt) {
        try {
            return client.complete(request);
        } catch (const TransportError& e) {
            last_error = e.what();
        }
        if (attempt < policy.max_attempts) {
            if (sleep) {
                sleep(backoff);
            } else {
                std::this_thread::sleep_for(backoff);
            }
            backoff = std::chrono::milliseconds(
                static_cast<long long>(static_cast<double>(backoff.count()) * policy.multiplier));
        }
    }
    throw TransportError(client.name() + ": " + last_error);
}

}  // namespace faultlens::lens
