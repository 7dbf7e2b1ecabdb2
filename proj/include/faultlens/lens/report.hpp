#pragma once

/// @file report.hpp
/// @brief Per-condition judge score summaries, ANOVA/Tukey tables and the top-quartile list.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "faultlens/lens/anova.hpp"
#include "faultlens/lens/pipeline.hpp"

namespace faultlens::lens {

struct ConditionSummary {
    std::string condition;
    std::size_t explanations = 0;
    /// Ratings entering the statistics.
    std::size_t scores = 0;
    /// Judge responses without a valid rating.
    std::size_t flagged = 0;
    double mean = 0.0;
    double sd = 0.0;
};

struct RankedExplanation {
    std::string cell;
    std::string task;
    std::string condition;
    double mean_rating = 0.0;
    std::string explanation;
};

struct LensReport {
    std::vector<ConditionSummary> conditions;
    std::optional<AnovaResult> anova;
    std::optional<TukeyResult> tukey;
    /// Why the ANOVA/Tukey tables are absent, if they are.
    std::string statistics_note;
    /// Explanations whose mean rating reaches the 75th percentile, best first.
    std::vector<RankedExplanation> top_quartile;
    std::size_t failed_cells = 0;
};

/// Conditions appear in order of first appearance in the ledger.
[[nodiscard]] LensReport build_report(const RunLedger& ledger, double alpha = 0.05);

[[nodiscard]] nlohmann::json to_json(const LensReport& report);
[[nodiscard]] std::string format_text(const LensReport& report);

}  // namespace faultlens::lens
