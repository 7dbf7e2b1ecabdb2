#pragma once

/// @file records.hpp
/// @brief Line-delimited JSON formats for trial sets, response logs and scored records.
///
/// Every line is one object carrying a `schema` field. Malformed lines raise
/// ParseError with the 1-based line number.

#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "faultlens/study/scoring.hpp"
#include "faultlens/study/statistics.hpp"

namespace faultlens::study {

inline constexpr std::string_view kTrialItemSchema = "faultlens.trial_item/1";
inline constexpr std::string_view kResponseSchema = "faultlens.response/1";
inline constexpr std::string_view kTrialRecordSchema = "faultlens.trial_record/1";

/// Serialised with explicit facts, options and hypotheses.
[[nodiscard]] nlohmann::json to_json(const TrialItem& item);

/// Parses a trial set.
///
/// Besides explicit `facts`, a line may derive its circuit: `{"from": ID}`
/// relabels an earlier circuits item into waterflow vocabulary and
/// `{"length": N}` builds a list item.
[[nodiscard]] std::vector<TrialItem> parse_trial_items(std::string_view jsonl);
[[nodiscard]] std::string format_trial_items(std::span<const TrialItem> items);

struct Response {
    std::string participant;
    std::string group;
    std::string item;
    Choice choice;
    std::optional<double> elapsed_ms;
};

[[nodiscard]] nlohmann::json to_json(const Response& response);
[[nodiscard]] std::vector<Response> parse_responses(std::string_view jsonl);
[[nodiscard]] std::string format_responses(std::span<const Response> responses);

[[nodiscard]] nlohmann::json to_json(const TrialRecord& record);
[[nodiscard]] std::vector<TrialRecord> parse_records(std::string_view jsonl);
[[nodiscard]] std::string format_records(std::span<const TrialRecord> records);

/// Scores each response against its item.
/// @throws NotFoundError for a response naming an unknown item
[[nodiscard]] std::vector<TrialRecord> score_responses(std::span<const TrialItem> items,
                                                       std::span<const Response> responses);

/// Per-participant mean normalised score over Scored records of `group`,
/// skipping participants in `excluded` and those without any scored trial.
[[nodiscard]] std::vector<ParticipantScore> participant_means(std::span<const TrialRecord> records,
                                                              std::string_view group,
                                                              const std::set<std::string>& excluded = {});

}  // namespace faultlens::study
