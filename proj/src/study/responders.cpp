#include "faultlens/study/responders.hpp"

#include <algorithm>
#include <cstdio>

#include "faultlens/error.hpp"
#include "sampling.hpp"

namespace faultlens::study {

std::string_view to_string(ResponderKind kind) { return kind == ResponderKind::Random ? "random" : "optimal"; }

ResponderKind parse_responder_kind(std::string_view name) {
    if (name == "random") {
        return ResponderKind::Random;
    }
    if (name == "optimal") {
        return ResponderKind::Optimal;
    }
    throw InvalidArgumentError("unknown responder '" + std::string(name) + "'");
}

std::vector<Response> simulate_responses(std::span<const TrialItem> items, ResponderKind kind,
                                         std::size_t participants, const std::string& group,
                                         std::uint64_t seed) {
    std::vector<std::size_t> best(items.size(), 0);
    if (kind == ResponderKind::Optimal) {
        for (std::size_t i = 0; i < items.size(); ++i) {
            const auto entropies = option_entropies(items[i]);
            best[i] = static_cast<std::size_t>(std::max_element(entropies.begin(), entropies.end()) -
                                               entropies.begin());
        }
    }

    std::vector<Response> responses;
    responses.reserve(participants * items.size());
    for (std::size_t p = 0; p < participants; ++p) {
        char name[32];
        std::snprintf(name, sizeof name, "_%03zu", p + 1);
        for (std::size_t i = 0; i < items.size(); ++i) {
            std::size_t pick = best[i];
            if (kind == ResponderKind::Random) {
                std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                                  static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(i)};
                std::mt19937_64 rng(seq);
                pick = detail::uniform_index(rng, items[i].options.size());
            }
            responses.push_back({group + name, group, items[i].id, Choice::of(items[i].options[pick]), std::nullopt});
        }
    }
    return responses;
}

}  // namespace faultlens::study
