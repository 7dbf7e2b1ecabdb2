#include "faultlens/study/statistics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "faultlens/error.hpp"

namespace faultlens::study {

namespace {

void require_sample(std::span<const double> sample, const char* name) {
    if (sample.empty()) {
        throw InvalidArgumentError(std::string("sample ") + name + " is empty");
    }
    for (double x : sample) {
        if (!std::isfinite(x)) {
            throw InvalidArgumentError(std::string("sample ") + name + " has a non-finite value");
        }
    }
}

/// Pooled midranks doubled so that every rank is an integer.
struct RankedPool {
    std::vector<long> doubled_ranks;  // pooled order: a first, then b
    double tie_term = 0.0;            // sum of t^3 - t over tie groups
};

RankedPool rank(std::span<const double> a, std::span<const double> b) {
    const std::size_t n = a.size() + b.size();
    std::vector<double> values(a.begin(), a.end());
    values.insert(values.end(), b.begin(), b.end());
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return values[x] < values[y]; });

    RankedPool pool;
    pool.doubled_ranks.assign(n, 0);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && values[order[j + 1]] == values[order[i]]) {
            ++j;
        }
        // Ranks i+1 .. j+1 share their mean; doubled it is i + j + 2.
        const long doubled = static_cast<long>(i + j + 2);
        for (std::size_t k = i; k <= j; ++k) {
            pool.doubled_ranks[order[k]] = doubled;
        }
        const double t = static_cast<double>(j - i + 1);
        pool.tie_term += t * t * t - t;
        i = j + 1;
    }
    return pool;
}

/// Two-sided exact p for the rank sum of a subset of size k drawn from `ranks`.
double exact_p(const std::vector<long>& ranks, std::size_t k, long observed_doubled_sum) {
    const std::size_t n = ranks.size();
    long max_sum = 0;
    std::vector<long> sorted = ranks;
    std::sort(sorted.rbegin(), sorted.rend());
    for (std::size_t i = 0; i < k; ++i) {
        max_sum += sorted[i];
    }
    // counts[j][s]: subsets of size j with doubled rank sum s.
    std::vector<std::vector<double>> counts(k + 1, std::vector<double>(static_cast<std::size_t>(max_sum) + 1, 0.0));
    counts[0][0] = 1.0;
    for (std::size_t item = 0; item < n; ++item) {
        const long r = ranks[item];
        for (std::size_t j = std::min(k, item + 1); j >= 1; --j) {
            auto& row = counts[j];
            const auto& prev = counts[j - 1];
            for (long s = max_sum; s >= r; --s) {
                row[static_cast<std::size_t>(s)] += prev[static_cast<std::size_t>(s - r)];
            }
        }
    }
    const long centre2 = static_cast<long>(k * (n + 1));  // mean of the doubled sum
    const long observed_gap = std::labs(observed_doubled_sum - centre2);
    double total = 0.0;
    double extreme = 0.0;
    for (long s = 0; s <= max_sum; ++s) {
        const double c = counts[k][static_cast<std::size_t>(s)];
        total += c;
        if (std::labs(s - centre2) >= observed_gap) {
            extreme += c;
        }
    }
    return std::min(1.0, extreme / total);
}

}  // namespace

std::string_view to_string(PValueMethod method) {
    return method == PValueMethod::Exact ? "exact" : "normal";
}

MannWhitneyResult mann_whitney_u(std::span<const double> a, std::span<const double> b,
                                 const MannWhitneyOptions& options) {
    require_sample(a, "a");
    require_sample(b, "b");
    const auto pool = rank(a, b);
    const std::size_t na = a.size();
    const std::size_t nb = b.size();
    const std::size_t n = na + nb;

    long doubled_sum_a = 0;
    for (std::size_t i = 0; i < na; ++i) {
        doubled_sum_a += pool.doubled_ranks[i];
    }
    const double nanb = static_cast<double>(na) * static_cast<double>(nb);

    MannWhitneyResult result;
    result.n_a = na;
    result.n_b = nb;
    result.u = static_cast<double>(doubled_sum_a) / 2.0 - static_cast<double>(na * (na + 1)) / 2.0;
    result.u_b = nanb - result.u;
    result.cles = result.u_b / nanb;

    const std::size_t k = std::min(na, nb);
    const double work = static_cast<double>(n) * static_cast<double>(k) *
                        (2.0 * static_cast<double>(k) * static_cast<double>(n) + 1.0);
    if (k <= options.exact_max_n && work <= options.exact_work_limit) {
        result.method = PValueMethod::Exact;
        if (na <= nb) {
            result.p_two_sided = exact_p(pool.doubled_ranks, na, doubled_sum_a);
        } else {
            // Use b as the subset; its doubled sum is the remainder of the total n (n + 1).
            std::vector<long> ranks = pool.doubled_ranks;
            std::rotate(ranks.begin(), ranks.begin() + static_cast<long>(na), ranks.end());
            const long total = static_cast<long>(n * (n + 1));
            result.p_two_sided = exact_p(ranks, nb, total - doubled_sum_a);
        }
        return result;
    }

    result.method = PValueMethod::Normal;
    const double nd = static_cast<double>(n);
    const double variance = nanb / 12.0 * ((nd + 1.0) - pool.tie_term / (nd * (nd - 1.0)));
    if (variance <= 0.0) {
        result.p_two_sided = 1.0;
        return result;
    }
    const double gap = std::max(0.0, std::fabs(result.u - nanb / 2.0) - 0.5);
    result.p_two_sided = std::min(1.0, std::erfc(gap / std::sqrt(variance) / std::sqrt(2.0)));
    return result;
}

EffectReport comprehension_effect(std::span<const ParticipantScore> self_scores,
                                  std::span<const ParticipantScore> explained_scores,
                                  const MannWhitneyOptions& options) {
    std::set<std::string> self_ids;
    for (const auto& s : self_scores) {
        self_ids.insert(s.participant);
    }
    for (const auto& s : explained_scores) {
        if (self_ids.contains(s.participant)) {
            throw InvalidArgumentError("participant '" + s.participant + "' appears in both groups");
        }
    }
    std::vector<double> a;
    std::vector<double> b;
    for (const auto& s : self_scores) {
        a.push_back(s.score);
    }
    for (const auto& s : explained_scores) {
        b.push_back(s.score);
    }
    EffectReport report;
    report.test = mann_whitney_u(a, b, options);
    report.mean_self = std::accumulate(a.begin(), a.end(), 0.0) / static_cast<double>(a.size());
    report.mean_explained = std::accumulate(b.begin(), b.end(), 0.0) / static_cast<double>(b.size());
    report.effect = report.mean_explained - report.mean_self;
    return report;
}

}  // namespace faultlens::study
