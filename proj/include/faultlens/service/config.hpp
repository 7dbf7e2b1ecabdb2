#pragma once

/// @file config.hpp
/// @brief Application configuration: a JSON document with environment overrides for secrets.
///
/// Every key is optional. Unknown keys are rejected at any nesting level.
///
///     {
///       "data_dir": "data",
///       "seed": 0,
///       "parallelism": 4,
///       "mwu": {"exact_max_n": 8, "exact_work_limit": 5e8},
///       "anonymization": {"seed": 0, "allowlist": ["find_all", "..."], "extra_allowlist": []},
///       "clients": [{"name": "coder", "role": "coding|reasoning|judging", "type": "fixture|echo|http",
///                    "temperature": 0.0, "fixture_dir": "...", "base_url": "...",
///                    "path": "/v1/chat/completions", "model": "...", "api_key_env": "...",
///                    "timeout_s": 120}],
///       "lens": {"tasks": ["circuit_1"], "conditions": ["lens_np_gc_lc"], "coding": ["coder"],
///                "reasoning": "name", "judges": ["name"], "coding_repetitions": 3,
///                "judge_repetitions": 3, "ledger": "lens_ledger.jsonl", "alpha": 0.05,
///                "retry": {"max_attempts": 3, "initial_backoff_ms": 500, "multiplier": 2.0},
///                "retry_failed": false},
///       "server": {"host": "127.0.0.1", "port": 8080, "trials": null, "layout": null}
///     }
///
/// Relative paths resolve against the directory of the config file. For an
/// http client named `judge-1`, `FAULTLENS_JUDGE_1_BASE_URL` overrides its
/// base URL and the bearer token is read from `api_key_env`, which defaults
/// to `FAULTLENS_JUDGE_1_API_KEY`.

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "faultlens/lens/pipeline.hpp"
#include "faultlens/study/statistics.hpp"

namespace faultlens::service {

struct LensConfig {
    std::vector<std::string> tasks;
    std::vector<lens::Condition> conditions = lens::default_condition_lattice();
    std::vector<std::string> coding;
    std::string reasoning;
    std::vector<std::string> judges;
    std::size_t coding_repetitions = 3;
    std::size_t judge_repetitions = 3;
    std::filesystem::path ledger;
    double alpha = 0.05;
    lens::RetryPolicy retry;
    bool retry_failed = false;
};

struct ServerConfig {
    std::string host = "127.0.0.1";
    int port = 8080;
    /// Trial set; the shipped one when empty.
    std::optional<std::filesystem::path> trials;
    /// Layout sidecar with node positions.
    std::optional<std::filesystem::path> layout;
};

struct AppConfig {
    std::filesystem::path data_dir = "data";
    std::uint64_t seed = 0;
    std::size_t parallelism = 4;
    study::MannWhitneyOptions mwu;
    std::uint64_t anonymization_seed = 0;
    std::set<std::string, std::less<>> allowlist = lens::default_allowlist();
    std::vector<lens::ClientSpec> clients;
    LensConfig lens;
    ServerConfig server;

    /// The lens plan described by the `lens` section.
    /// @throws NotFoundError if it names an unconfigured client
    /// @throws InvalidArgumentError if a client has the wrong role for its slot
    [[nodiscard]] faultlens::lens::LensPlan lens_plan() const;
    /// `lens.ledger`, or `<data_dir>/lens_ledger.jsonl` when unset.
    [[nodiscard]] std::filesystem::path ledger_path() const;
};

/// Reads one environment variable.
using EnvLookup = std::function<std::optional<std::string>(const std::string&)>;

[[nodiscard]] EnvLookup process_environment();

/// @throws InvalidArgumentError naming the offending key path
[[nodiscard]] AppConfig parse_config(const nlohmann::json& document, const std::filesystem::path& base_dir,
                                     const EnvLookup& env = process_environment());

/// @throws NotFoundError if the file cannot be read
/// @throws ParseError for malformed JSON
/// @throws InvalidArgumentError for invalid content
[[nodiscard]] AppConfig load_config(const std::filesystem::path& path, const EnvLookup& env = process_environment());

/// `FAULTLENS_<NAME>_<SUFFIX>` with the name upper-cased and non-alphanumerics mapped to `_`.
[[nodiscard]] std::string client_env_name(std::string_view client, std::string_view suffix);

}  // namespace faultlens::service
