#pragma once

/// @file statistics.hpp
/// @brief Mann-Whitney U test and the comprehension effect between two participant groups.

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace faultlens::study {

enum class PValueMethod { Exact, Normal };

[[nodiscard]] std::string_view to_string(PValueMethod method);

struct MannWhitneyOptions {
    /// Exact p-values whenever one sample has at most this many values.
    std::size_t exact_max_n = 8;
    /// Upper bound on DP cell updates before falling back to the normal approximation.
    double exact_work_limit = 5e8;
};

struct MannWhitneyResult {
    /// U of sample a: pairs with a > b plus half the ties.
    double u = 0.0;
    /// U of sample b; u + u_b = n_a * n_b.
    double u_b = 0.0;
    double p_two_sided = 1.0;
    /// Probability that a random b value exceeds a random a value, ties counted half: u_b / (n_a n_b).
    double cles = 0.5;
    PValueMethod method = PValueMethod::Exact;
    std::size_t n_a = 0;
    std::size_t n_b = 0;
};

/// Two-sided Mann-Whitney U test with midranks for ties.
///
/// The exact p-value is the permutation probability of a rank sum at least as
/// far from its mean as observed, over all C(n_a + n_b, n_a) splits of the
/// pooled midranks. The normal approximation applies the tie-corrected
/// variance and a 0.5 continuity correction.
/// @throws InvalidArgumentError for an empty or non-finite sample
[[nodiscard]] MannWhitneyResult mann_whitney_u(std::span<const double> a, std::span<const double> b,
                                               const MannWhitneyOptions& options = {});

struct ParticipantScore {
    std::string participant;
    double score = 0.0;
};

struct EffectReport {
    double mean_self = 0.0;
    double mean_explained = 0.0;
    /// mean_explained - mean_self.
    double effect = 0.0;
    /// Sample a is the self-learning group, sample b the machine-explained group.
    MannWhitneyResult test;
};

/// @throws InvalidArgumentError if a participant appears in both groups or a group is empty
[[nodiscard]] EffectReport comprehension_effect(std::span<const ParticipantScore> self_scores,
                                                std::span<const ParticipantScore> explained_scores,
                                                const MannWhitneyOptions& options = {});

}  // namespace faultlens::study
