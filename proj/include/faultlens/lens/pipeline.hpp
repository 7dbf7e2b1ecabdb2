#pragma once

/// @file pipeline.hpp
/// @brief Explanation and judging pipelines over a condition lattice.
///
/// A run has three stages. Coding clients interpret the task's programs,
/// one reasoning client merges the interpretations into a consensus
/// explanation per condition, and judge clients rate every explanation
/// against a reference answer. Each model call is a ledger cell keyed by a
/// digest of its inputs, so interrupted runs resume without repeating work.

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "faultlens/lens/anonymize.hpp"
#include "faultlens/lens/clients.hpp"
#include "faultlens/lens/ledger.hpp"
#include "faultlens/lens/templates.hpp"

namespace faultlens::lens {

enum class ProgramNaming { Named, Anonymized };

/// One explanation-generation variant.
struct Condition {
    ProgramNaming naming = ProgramNaming::Named;
    bool global_context = true;
    bool local_context = true;
    /// Skip the coding clients and prompt the reasoning client directly.
    bool direct_prompting = false;

    /// E.g. `lens_np_gc_lc`, `direct_ap`.
    [[nodiscard]] std::string id() const;
    /// @throws InvalidArgumentError for a malformed id
    [[nodiscard]] static Condition parse(std::string_view id);
    /// Prompt pair used by the reasoning client.
    [[nodiscard]] std::string prompt_pair() const;

    friend bool operator==(const Condition&, const Condition&) = default;
};

/// Named/anonymised programs crossed with global and local context, all via coding clients.
[[nodiscard]] std::vector<Condition> default_condition_lattice();

/// A task the explanations should teach, with its judging material.
struct LensTask {
    std::string id;
    std::string domain_context;
    std::string description;
    std::string example_type;
    std::string example;
    std::string question;
    std::string instructions;
    std::string reference;
    std::vector<std::string> program_ids;
    /// The programs concatenated in listing order.
    std::string program;
};

/// Tasks shipped under assets/lens.
[[nodiscard]] const std::vector<LensTask>& shipped_tasks();
/// @throws NotFoundError for an unknown id
[[nodiscard]] const LensTask& find_task(std::string_view id);

enum class ClientType { Fixture, Echo, Http };

[[nodiscard]] std::string_view to_string(ClientType type);
[[nodiscard]] ClientType parse_client_type(std::string_view name);

struct ClientSpec {
    std::string name;
    ClientRole role = ClientRole::Coding;
    ClientType type = ClientType::Echo;
    /// Sampling temperature sent with every request.
    double temperature = 0.0;
    std::filesystem::path fixture_dir;
    HttpEndpoint http;
};

[[nodiscard]] std::shared_ptr<ModelClient> make_client(const ClientSpec& spec);

/// Client instances by name.
using ClientSet = std::map<std::string, std::shared_ptr<ModelClient>, std::less<>>;

[[nodiscard]] ClientSet make_clients(const std::vector<ClientSpec>& specs);

struct LensPlan {
    std::vector<std::string> tasks;
    std::vector<Condition> conditions = default_condition_lattice();
    /// Interpretations are concatenated in this order.
    std::vector<ClientSpec> coding;
    ClientSpec reasoning;
    std::vector<ClientSpec> judges;
    std::size_t coding_repetitions = 3;
    std::size_t judge_repetitions = 3;
    std::uint64_t anonymization_seed = 0;
    std::set<std::string, std::less<>> allowlist = default_allowlist();
    std::size_t parallelism = 4;
    RetryPolicy retry;
    /// Re-run cells whose latest record failed.
    bool retry_failed = false;

    /// Every client spec of the plan.
    [[nodiscard]] std::vector<ClientSpec> clients() const;
};

struct StageSummary {
    std::size_t planned = 0;
    std::size_t executed = 0;
    std::size_t reused = 0;
    std::size_t failed = 0;
};

struct RunSummary {
    StageSummary interpretations;
    StageSummary consensus;
    StageSummary judgements;
};

/// Interpretation and consensus stages.
/// @throws NotFoundError if a task or client named by the plan is missing
RunSummary run_explanations(const LensPlan& plan, const ClientSet& clients, RunLedger& ledger);

/// Judges every successful consensus explanation of the plan.
RunSummary run_judging(const LensPlan& plan, const ClientSet& clients, RunLedger& ledger);

/// run_explanations followed by run_judging.
RunSummary run_pipeline(const LensPlan& plan, const ClientSet& clients, RunLedger& ledger);

struct JudgeScore {
    std::string judge;
    std::size_t repetition = 0;
    /// Empty when the response carried no valid rating.
    std::optional<int> rating;
    std::string justification;
};

/// Everything recorded about one consensus explanation.
struct ExplanationRun {
    std::string cell;
    std::string task;
    Condition condition;
    std::vector<std::string> interpretations;
    std::string explanation;
    std::vector<JudgeScore> scores;
};

/// Successful explanations of a ledger with their judge scores, in ledger order.
[[nodiscard]] std::vector<ExplanationRun> collect_runs(const RunLedger& ledger);

}  // namespace faultlens::lens
