#include "faultlens/lens/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <numeric>
#include <sstream>

#include "faultlens/error.hpp"

namespace faultlens::lens {

using nlohmann::json;

namespace {

/// Linear-interpolation quantile of sorted values.
double quantile(const std::vector<double>& sorted, double q) {
    const double position = q * static_cast<double>(sorted.size() - 1);
    const auto lower = static_cast<std::size_t>(std::floor(position));
    const auto upper = std::min(lower + 1, sorted.size() - 1);
    return sorted[lower] + (position - static_cast<double>(lower)) * (sorted[upper] - sorted[lower]);
}

std::string fixed(double value, int digits) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.*f", digits, value);
    return buffer;
}

}  // namespace

LensReport build_report(const RunLedger& ledger, double alpha) {
    LensReport report;
    for (const auto& record : ledger.current()) {
        if (record.value("status", "") != "ok") {
            ++report.failed_cells;
        }
    }

    std::vector<std::string> order;
    std::map<std::string, ConditionSummary> summaries;
    std::map<std::string, Sample> ratings;
    std::vector<RankedExplanation> ranked;
    for (const auto& run : collect_runs(ledger)) {
        const auto id = run.condition.id();
        if (!summaries.contains(id)) {
            order.push_back(id);
            summaries[id].condition = id;
        }
        auto& summary = summaries[id];
        ++summary.explanations;
        Sample mine;
        for (const auto& score : run.scores) {
            if (score.rating) {
                mine.push_back(*score.rating);
                ratings[id].push_back(*score.rating);
            } else {
                ++summary.flagged;
            }
        }
        if (!mine.empty()) {
            ranked.push_back({run.cell, run.task, id,
                              std::accumulate(mine.begin(), mine.end(), 0.0) / static_cast<double>(mine.size()),
                              run.explanation});
        }
    }

    std::vector<Sample> groups;
    for (const auto& id : order) {
        auto& summary = summaries[id];
        const auto& values = ratings[id];
        summary.scores = values.size();
        if (!values.empty()) {
            summary.mean = std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
            double ss = 0.0;
            for (double v : values) {
                ss += (v - summary.mean) * (v - summary.mean);
            }
            summary.sd = values.size() > 1 ? std::sqrt(ss / static_cast<double>(values.size() - 1)) : 0.0;
        }
        report.conditions.push_back(summary);
        groups.push_back(values);
    }

    try {
        report.anova = one_way_anova(groups);
        report.tukey = tukey_hsd(groups, alpha);
    } catch (const InvalidArgumentError& e) {
        report.anova.reset();
        report.tukey.reset();
        report.statistics_note = e.what();
    }

    if (!ranked.empty()) {
        std::vector<double> means;
        for (const auto& r : ranked) {
            means.push_back(r.mean_rating);
        }
        std::sort(means.begin(), means.end());
        const double threshold = quantile(means, 0.75);
        for (const auto& r : ranked) {
            if (r.mean_rating >= threshold) {
                report.top_quartile.push_back(r);
            }
        }
        std::stable_sort(report.top_quartile.begin(), report.top_quartile.end(),
                         [](const RankedExplanation& a, const RankedExplanation& b) {
                             return a.mean_rating > b.mean_rating;
                         });
    }
    return report;
}

json to_json(const LensReport& report) {
    json conditions = json::array();
    for (const auto& c : report.conditions) {
        conditions.push_back({{"condition", c.condition},
                              {"explanations", c.explanations},
                              {"scores", c.scores},
                              {"flagged", c.flagged},
                              {"mean", c.mean},
                              {"sd", c.sd}});
    }
    json out{{"conditions", conditions}, {"failed_cells", report.failed_cells}};
    if (report.anova) {
        out["anova"] = {{"f", report.anova->f},
                        {"p", report.anova->p},
                        {"df_between", report.anova->df_between},
                        {"df_within", report.anova->df_within}};
    } else {
        out["anova"] = nullptr;
    }
    if (report.tukey) {
        json pairs = json::array();
        for (const auto& c : report.tukey->comparisons) {
            pairs.push_back({{"first", report.conditions[c.first].condition},
                             {"second", report.conditions[c.second].condition},
                             {"mean_difference", c.mean_difference},
                             {"q", c.q},
                             {"q_critical", c.q_critical},
                             {"significant", c.significant}});
        }
        out["tukey"] = {{"alpha", report.tukey->alpha}, {"df_used", report.tukey->df_used}, {"pairs", pairs}};
    } else {
        out["tukey"] = nullptr;
    }
    if (!report.statistics_note.empty()) {
        out["statistics_note"] = report.statistics_note;
    }
    json top = json::array();
    for (const auto& r : report.top_quartile) {
        top.push_back({{"cell", r.cell},
                       {"task", r.task},
                       {"condition", r.condition},
                       {"mean_rating", r.mean_rating},
                       {"explanation", r.explanation}});
    }
    out["top_quartile"] = top;
    return out;
}

std::string format_text(const LensReport& report) {
    std::ostringstream out;
    out << "condition               explanations  scores  flagged   mean     sd\n";
    for (const auto& c : report.conditions) {
        char line[160];
        std::snprintf(line, sizeof line, "%-22s  %12zu  %6zu  %7zu  %5.2f  %5.2f\n", c.condition.c_str(),
                      c.explanations, c.scores, c.flagged, c.mean, c.sd);
        out << line;
    }
    if (report.anova) {
        out << "\nANOVA: F(" << report.anova->df_between << ", " << report.anova->df_within
            << ") = " << fixed(report.anova->f, 4) << ", p = " << fixed(report.anova->p, 6) << "\n";
    } else {
        out << "\nANOVA: not computed (" << report.statistics_note << ")\n";
    }
    if (report.tukey) {
        out << "Tukey HSD (alpha " << report.tukey->alpha << ", df " << report.tukey->df_used << "):\n";
        for (const auto& c : report.tukey->comparisons) {
            out << "  " << report.conditions[c.first].condition << " vs " << report.conditions[c.second].condition
                << ": diff " << fixed(c.mean_difference, 3) << ", q " << fixed(c.q, 3) << " (critical "
                << fixed(c.q_critical, 3) << ")" << (c.significant ? " significant" : "") << "\n";
        }
    }
    out << "\nTop quartile explanations (" << report.top_quartile.size() << "):\n";
    for (const auto& r : report.top_quartile) {
        out << "  " << r.cell << "  " << r.task << "  " << r.condition << "  " << fixed(r.mean_rating, 2) << "\n";
    }
    if (report.failed_cells > 0) {
        out << "\nFailed cells: " << report.failed_cells << "\n";
    }
    return out.str();
}

}  // namespace faultlens::lens
