#include "faultlens/service/config.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "faultlens/error.hpp"

namespace faultlens::service {

using nlohmann::json;

namespace {

/// Typed access to one JSON object, remembering its path for error messages.
class Section {
  public:
    Section(const json& value, std::string path) : value_(value), path_(std::move(path)) {
        if (!value_.is_object()) {
            fail("", "expected an object");
        }
    }

    void allow(std::initializer_list<std::string_view> keys) const {
        for (const auto& [key, _] : value_.items()) {
            if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
                fail(key, "unknown key");
            }
        }
    }

    [[nodiscard]] bool has(const std::string& key) const {
        return value_.contains(key) && !value_.at(key).is_null();
    }

    [[nodiscard]] const json& raw(const std::string& key) const { return value_.at(key); }

    [[nodiscard]] std::string path(std::string_view key) const {
        return path_ + "/" + std::string(key);
    }

    [[noreturn]] void fail(std::string_view key, const std::string& what) const {
        throw InvalidArgumentError("config " + (key.empty() ? path_ : path(key)) + ": " + what);
    }

    std::string string(const std::string& key, std::string fallback) const {
        if (!has(key)) {
            return fallback;
        }
        if (!raw(key).is_string()) {
            fail(key, "expected a string");
        }
        return raw(key).get<std::string>();
    }

    std::uint64_t unsigned_int(const std::string& key, std::uint64_t fallback) const {
        if (!has(key)) {
            return fallback;
        }
        if (!raw(key).is_number_unsigned()) {
            fail(key, "expected a non-negative integer");
        }
        return raw(key).get<std::uint64_t>();
    }

    double number(const std::string& key, double fallback) const {
        if (!has(key)) {
            return fallback;
        }
        if (!raw(key).is_number()) {
            fail(key, "expected a number");
        }
        return raw(key).get<double>();
    }

    bool boolean(const std::string& key, bool fallback) const {
        if (!has(key)) {
            return fallback;
        }
        if (!raw(key).is_boolean()) {
            fail(key, "expected true or false");
        }
        return raw(key).get<bool>();
    }

    std::vector<std::string> strings(const std::string& key) const {
        std::vector<std::string> out;
        if (!has(key)) {
            return out;
        }
        if (!raw(key).is_array()) {
            fail(key, "expected an array of strings");
        }
        for (const auto& v : raw(key)) {
            if (!v.is_string()) {
                fail(key, "expected an array of strings");
            }
            out.push_back(v.get<std::string>());
        }
        return out;
    }

  private:
    const json& value_;
    std::string path_;
};

std::filesystem::path resolve(const std::filesystem::path& base, const std::string& value) {
    const std::filesystem::path p(value);
    return p.is_absolute() ? p : base / p;
}

lens::ClientSpec parse_client(const Section& s, const std::filesystem::path& base, const EnvLookup& env) {
    s.allow({"name", "role", "type", "temperature", "fixture_dir", "base_url", "path", "model", "api_key_env",
             "timeout_s"});
    lens::ClientSpec spec;
    spec.name = s.string("name", "");
    if (spec.name.empty()) {
        s.fail("name", "missing client name");
    }
    try {
        spec.role = lens::parse_client_role(s.string("role", "coding"));
        spec.type = lens::parse_client_type(s.string("type", "echo"));
    } catch (const InvalidArgumentError& e) {
        s.fail("", e.what());
    }
    spec.temperature = s.number("temperature", 0.0);
    switch (spec.type) {
    case lens::ClientType::Fixture:
        if (!s.has("fixture_dir")) {
            s.fail("fixture_dir", "required for fixture clients");
        }
        spec.fixture_dir = resolve(base, s.string("fixture_dir", ""));
        break;
    case lens::ClientType::Http:
        spec.http.base_url = s.string("base_url", "");
        if (auto url = env(client_env_name(spec.name, "BASE_URL"))) {
            spec.http.base_url = *url;
        }
        if (spec.http.base_url.empty()) {
            s.fail("base_url", "required for http clients");
        }
        spec.http.path = s.string("path", spec.http.path);
        spec.http.model = s.string("model", "");
        spec.http.api_key_env = s.string("api_key_env", client_env_name(spec.name, "API_KEY"));
        spec.http.timeout = std::chrono::seconds(s.unsigned_int("timeout_s", 120));
        break;
    case lens::ClientType::Echo:
        break;
    }
    return spec;
}

const lens::ClientSpec& client_named(const std::vector<lens::ClientSpec>& clients, const std::string& name) {
    for (const auto& c : clients) {
        if (c.name == name) {
            return c;
        }
    }
    throw NotFoundError("lens plan names unconfigured client '" + name + "'");
}

const lens::ClientSpec& with_role(const std::vector<lens::ClientSpec>& clients, const std::string& name,
                                  lens::ClientRole role) {
    const auto& spec = client_named(clients, name);
    if (spec.role != role) {
        throw InvalidArgumentError("client '" + name + "' has role " + std::string(lens::to_string(spec.role)) +
                                   ", expected " + std::string(lens::to_string(role)));
    }
    return spec;
}

}  // namespace

EnvLookup process_environment() {
    return [](const std::string& name) -> std::optional<std::string> {
        if (const char* value = std::getenv(name.c_str())) {
            return std::string(value);
        }
        return std::nullopt;
    };
}

std::string client_env_name(std::string_view client, std::string_view suffix) {
    std::string out = "FAULTLENS_";
    for (char c : client) {
        out.push_back(std::isalnum(static_cast<unsigned char>(c)) ? static_cast<char>(std::toupper(static_cast<unsigned char>(c)))
                                                                   : '_');
    }
    out += "_";
    out += suffix;
    return out;
}

AppConfig parse_config(const json& document, const std::filesystem::path& base_dir, const EnvLookup& env) {
    AppConfig config;
    const Section root(document, "");
    root.allow({"data_dir", "seed", "parallelism", "mwu", "anonymization", "clients", "lens", "server"});
    config.data_dir = resolve(base_dir, root.string("data_dir", "data"));
    config.seed = root.unsigned_int("seed", 0);
    config.parallelism = root.unsigned_int("parallelism", 4);
    if (config.parallelism == 0) {
        root.fail("parallelism", "must be at least 1");
    }

    if (root.has("mwu")) {
        const Section mwu(root.raw("mwu"), "/mwu");
        mwu.allow({"exact_max_n", "exact_work_limit"});
        config.mwu.exact_max_n = mwu.unsigned_int("exact_max_n", config.mwu.exact_max_n);
        config.mwu.exact_work_limit = mwu.number("exact_work_limit", config.mwu.exact_work_limit);
    }

    if (root.has("anonymization")) {
        const Section anon(root.raw("anonymization"), "/anonymization");
        anon.allow({"seed", "allowlist", "extra_allowlist"});
        config.anonymization_seed = anon.unsigned_int("seed", 0);
        if (anon.has("allowlist")) {
            const auto names = anon.strings("allowlist");
            config.allowlist = {names.begin(), names.end()};
        }
        for (auto& name : anon.strings("extra_allowlist")) {
            config.allowlist.insert(std::move(name));
        }
    }

    if (root.has("clients")) {
        if (!root.raw("clients").is_array()) {
            root.fail("clients", "expected an array");
        }
        std::size_t i = 0;
        for (const auto& entry : root.raw("clients")) {
            const Section s(entry, "/clients/" + std::to_string(i++));
            config.clients.push_back(parse_client(s, base_dir, env));
            for (std::size_t j = 0; j + 1 < config.clients.size(); ++j) {
                if (config.clients[j].name == config.clients.back().name) {
                    s.fail("name", "duplicate client name '" + config.clients.back().name + "'");
                }
            }
        }
    }

    if (root.has("lens")) {
        const Section s(root.raw("lens"), "/lens");
        s.allow({"tasks", "conditions", "coding", "reasoning", "judges", "coding_repetitions", "judge_repetitions",
                 "ledger", "alpha", "retry", "retry_failed"});
        auto& lens = config.lens;
        lens.tasks = s.strings("tasks");
        if (s.has("conditions")) {
            lens.conditions.clear();
            for (const auto& id : s.strings("conditions")) {
                try {
                    lens.conditions.push_back(faultlens::lens::Condition::parse(id));
                } catch (const InvalidArgumentError& e) {
                    s.fail("conditions", e.what());
                }
            }
        }
        lens.coding = s.strings("coding");
        lens.reasoning = s.string("reasoning", "");
        lens.judges = s.strings("judges");
        lens.coding_repetitions = s.unsigned_int("coding_repetitions", 3);
        lens.judge_repetitions = s.unsigned_int("judge_repetitions", 3);
        if (s.has("ledger")) {
            lens.ledger = resolve(base_dir, s.string("ledger", ""));
        }
        lens.alpha = s.number("alpha", 0.05);
        lens.retry_failed = s.boolean("retry_failed", false);
        if (s.has("retry")) {
            const Section r(s.raw("retry"), "/lens/retry");
            r.allow({"max_attempts", "initial_backoff_ms", "multiplier"});
            lens.retry.max_attempts = r.unsigned_int("max_attempts", 3);
            lens.retry.initial_backoff = std::chrono::milliseconds(r.unsigned_int("initial_backoff_ms", 500));
            lens.retry.multiplier = r.number("multiplier", 2.0);
            if (lens.retry.max_attempts == 0) {
                r.fail("max_attempts", "must be at least 1");
            }
        }
    }

    if (root.has("server")) {
        const Section s(root.raw("server"), "/server");
        s.allow({"host", "port", "trials", "layout"});
        config.server.host = s.string("host", config.server.host);
        const auto port = s.unsigned_int("port", 8080);
        if (port > 65535) {
            s.fail("port", "out of range");
        }
        config.server.port = static_cast<int>(port);
        if (s.has("trials")) {
            config.server.trials = resolve(base_dir, s.string("trials", ""));
        }
        if (s.has("layout")) {
            config.server.layout = resolve(base_dir, s.string("layout", ""));
        }
    }
    return config;
}

AppConfig load_config(const std::filesystem::path& path, const EnvLookup& env) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw NotFoundError("cannot open config file '" + path.string() + "'");
    }
    std::ostringstream text;
    text << in.rdbuf();
    json document;
    try {
        document = json::parse(text.str());
    } catch (const json::parse_error& e) {
        // Byte offsets are reported as line/column of the config text.
        const std::string content = text.str();
        const std::size_t offset = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, content.size());
        std::size_t line = 1;
        std::size_t column = 1;
        for (std::size_t i = 0; i < offset; ++i) {
            if (content[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw ParseError("malformed config JSON in '" + path.string() + "'", line, column);
    }
    return parse_config(document, path.has_parent_path() ? path.parent_path() : std::filesystem::path("."), env);
}

faultlens::lens::LensPlan AppConfig::lens_plan() const {
    faultlens::lens::LensPlan plan;
    plan.tasks = lens.tasks;
    if (plan.tasks.empty()) {
        for (const auto& task : faultlens::lens::shipped_tasks()) {
            plan.tasks.push_back(task.id);
        }
    }
    plan.conditions = lens.conditions;
    for (const auto& name : lens.coding) {
        plan.coding.push_back(with_role(clients, name, faultlens::lens::ClientRole::Coding));
    }
    if (lens.reasoning.empty()) {
        throw InvalidArgumentError("lens plan needs a reasoning client");
    }
    plan.reasoning = with_role(clients, lens.reasoning, faultlens::lens::ClientRole::Reasoning);
    for (const auto& name : lens.judges) {
        plan.judges.push_back(with_role(clients, name, faultlens::lens::ClientRole::Judging));
    }
    plan.coding_repetitions = lens.coding_repetitions;
    plan.judge_repetitions = lens.judge_repetitions;
    plan.anonymization_seed = anonymization_seed;
    plan.allowlist = allowlist;
    plan.parallelism = parallelism;
    plan.retry = lens.retry;
    plan.retry_failed = lens.retry_failed;
    return plan;
}

std::filesystem::path AppConfig::ledger_path() const {
    return lens.ledger.empty() ? data_dir / "lens_ledger.jsonl" : lens.ledger;
}

}  // namespace faultlens::service
