#pragma once

/// @file scoring.hpp
/// @brief Information-gain scoring of trial responses and the uniform random responder.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "faultlens/study/domains.hpp"

namespace faultlens::study {

/// A participant's answer: a test label, or the escape option when empty.
struct Choice {
    std::optional<std::string> label;

    [[nodiscard]] static Choice escape() { return {}; }
    [[nodiscard]] static Choice of(std::string label) { return {std::move(label)}; }
    [[nodiscard]] bool is_escape() const { return !label.has_value(); }

    friend bool operator==(const Choice&, const Choice&) = default;
};

enum class RecordStatus {
    Scored,
    /// The participant chose the escape option.
    Excluded,
    /// No presented option carries information, so the trial cannot be normalised.
    Invalid,
};

[[nodiscard]] std::string_view to_string(RecordStatus status);
[[nodiscard]] RecordStatus parse_record_status(std::string_view name);

struct TrialRecord {
    std::string participant;
    std::string group;
    std::string item;
    Domain domain = Domain::Circuits;
    Choice choice;
    RecordStatus status = RecordStatus::Scored;
    /// Entropy of the chosen test in bits; 0 for escapes.
    double raw_entropy = 0.0;
    /// raw_entropy over the best presented option; set only for Scored records.
    std::optional<double> normalized_score;
    std::optional<double> elapsed_ms;
};

/// Entropy of each presented option, in presentation order.
[[nodiscard]] std::vector<double> option_entropies(const TrialItem& item);

/// @throws InvalidArgumentError if the choice is not among the item's options
[[nodiscard]] TrialRecord score_response(const TrialItem& item, const Choice& choice,
                                         std::string participant = {});

/// Mean normalised score of a uniformly chosen option; nullopt for invalid items.
[[nodiscard]] std::optional<double> expected_random_score(const TrialItem& item);

/// Scores of a responder picking options uniformly, escape excluded.
///
/// Item i draws `samples` options from an mt19937_64 seeded with
/// seed_seq{lo32(seed), hi32(seed), i}, so items can be sampled independently.
/// Invalid items contribute no samples. Output is grouped by item in input order.
/// @throws InvalidArgumentError if `items` is empty or `samples` is zero
[[nodiscard]] std::vector<double> random_baseline(std::span<const TrialItem> items, std::size_t samples,
                                                  std::uint64_t seed);

}  // namespace faultlens::study
