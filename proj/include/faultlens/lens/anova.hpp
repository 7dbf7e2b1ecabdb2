#pragma once

/// @file anova.hpp
/// @brief One-way ANOVA and Tukey-Kramer pairwise comparisons for judge scores.

#include <cstddef>
#include <span>
#include <vector>

namespace faultlens::lens {

using Sample = std::vector<double>;

/// Regularized incomplete beta I_x(a, b), by continued fraction.
/// @throws InvalidArgumentError unless a, b > 0 and 0 <= x <= 1
[[nodiscard]] double regularized_incomplete_beta(double a, double b, double x);

/// P(F > f) for an F(d1, d2) variable.
[[nodiscard]] double f_survival(double f, double d1, double d2);

struct AnovaResult {
    double f = 0.0;
    double p = 1.0;
    double ss_between = 0.0;
    double ss_within = 0.0;
    std::size_t df_between = 0;
    std::size_t df_within = 0;
};

/// @throws InvalidArgumentError with fewer than two groups, a group of fewer
///         than two values, non-finite values, or zero within-group variance
[[nodiscard]] AnovaResult one_way_anova(std::span<const Sample> groups);

struct TukeyComparison {
    std::size_t first = 0;
    std::size_t second = 0;
    /// mean(second) - mean(first)
    double mean_difference = 0.0;
    double q = 0.0;
    double q_critical = 0.0;
    bool significant = false;
};

struct TukeyResult {
    double alpha = 0.05;
    std::size_t df_within = 0;
    /// Tabulated df actually used: the largest one not above df_within.
    double df_used = 0.0;
    std::vector<TukeyComparison> comparisons;
};

/// Studentized-range critical value from the shipped table.
/// @throws InvalidArgumentError for an untabulated alpha ("alpha not tabulated"),
///         k outside 2..20 or df below 2
[[nodiscard]] double studentized_range_critical(double alpha, std::size_t k, double df);

/// All pairs (i < j), in lexicographic order.
/// @throws as one_way_anova and studentized_range_critical
[[nodiscard]] TukeyResult tukey_hsd(std::span<const Sample> groups, double alpha);

}  // namespace faultlens::lens
