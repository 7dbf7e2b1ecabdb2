#include "faultlens/study/scoring.hpp"

#include <algorithm>
#include <random>

#include "faultlens/error.hpp"
#include "sampling.hpp"

namespace faultlens::study {

using detail::uniform_index;

std::string_view to_string(RecordStatus status) {
    switch (status) {
    case RecordStatus::Scored:
        return "scored";
    case RecordStatus::Excluded:
        return "excluded";
    case RecordStatus::Invalid:
        return "invalid";
    }
    return "scored";
}

RecordStatus parse_record_status(std::string_view name) {
    for (auto s : {RecordStatus::Scored, RecordStatus::Excluded, RecordStatus::Invalid}) {
        if (to_string(s) == name) {
            return s;
        }
    }
    throw InvalidArgumentError("unknown record status '" + std::string(name) + "'");
}

std::vector<double> option_entropies(const TrialItem& item) {
    std::vector<double> entropies;
    entropies.reserve(item.options.size());
    for (const auto& option : item.options) {
        entropies.push_back(strategy::evaluate_test(*item.circuit, option, item.hypotheses).entropy);
    }
    return entropies;
}

TrialRecord score_response(const TrialItem& item, const Choice& choice, std::string participant) {
    TrialRecord record;
    record.participant = std::move(participant);
    record.item = item.id;
    record.domain = item.domain;
    record.choice = choice;
    if (choice.is_escape()) {
        record.status = RecordStatus::Excluded;
        return record;
    }

    const auto position = std::find(item.options.begin(), item.options.end(), *choice.label);
    if (position == item.options.end()) {
        throw InvalidArgumentError("choice '" + *choice.label + "' is not an option of item '" +
                                   item.id + "'");
    }
    const auto entropies = option_entropies(item);
    const double best = *std::max_element(entropies.begin(), entropies.end());
    record.raw_entropy = entropies[static_cast<std::size_t>(position - item.options.begin())];
    if (best <= 0.0) {
        record.status = RecordStatus::Invalid;
        return record;
    }
    record.normalized_score = record.raw_entropy / best;
    return record;
}

std::optional<double> expected_random_score(const TrialItem& item) {
    const auto entropies = option_entropies(item);
    const double best = *std::max_element(entropies.begin(), entropies.end());
    if (best <= 0.0) {
        return std::nullopt;
    }
    double sum = 0.0;
    for (double e : entropies) {
        sum += e / best;
    }
    return sum / static_cast<double>(entropies.size());
}

std::vector<double> random_baseline(std::span<const TrialItem> items, std::size_t samples,
                                    std::uint64_t seed) {
    if (items.empty()) {
        throw InvalidArgumentError("random baseline needs at least one item");
    }
    if (samples == 0) {
        throw InvalidArgumentError("random baseline needs at least one sample per item");
    }
    std::vector<double> scores;
    scores.reserve(items.size() * samples);
    for (std::size_t i = 0; i < items.size(); ++i) {
        const auto& item = items[i];
        const auto entropies = option_entropies(item);
        const double best = *std::max_element(entropies.begin(), entropies.end());
        if (best <= 0.0) {
            continue;
        }
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(i)};
        std::mt19937_64 rng(seq);
        for (std::size_t s = 0; s < samples; ++s) {
            scores.push_back(entropies[uniform_index(rng, entropies.size())] / best);
        }
    }
    return scores;
}

}  // namespace faultlens::study
