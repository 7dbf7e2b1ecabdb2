#pragma once

/// @file responders.hpp
/// @brief Synthetic participants for baseline comparisons.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "faultlens/study/records.hpp"

namespace faultlens::study {

enum class ResponderKind {
    /// Picks a presented option uniformly, never the escape option.
    Random,
    /// Picks the first presented option of maximal entropy.
    Optimal,
};

[[nodiscard]] std::string_view to_string(ResponderKind kind);
[[nodiscard]] ResponderKind parse_responder_kind(std::string_view name);

/// Responses of `participants` synthetic participants named `<group>_<NNN>`
/// to every item. Participant p answers item i with an mt19937_64 seeded by
/// seed_seq{lo32(seed), hi32(seed), p, i}.
[[nodiscard]] std::vector<Response> simulate_responses(std::span<const TrialItem> items, ResponderKind kind,
                                                       std::size_t participants, const std::string& group,
                                                       std::uint64_t seed);

}  // namespace faultlens::study
