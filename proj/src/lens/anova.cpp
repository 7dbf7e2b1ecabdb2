#include "faultlens/lens/anova.hpp"

#include <cmath>
#include <limits>
#include <numeric>

#include "faultlens/error.hpp"
#include "faultlens/lens/studentized_range_table.hpp"

namespace faultlens::lens {

namespace {

/// Lentz evaluation of the continued fraction for I_x(a, b).
double beta_continued_fraction(double a, double b, double x) {
    constexpr int kMaxIterations = 10000;
    constexpr double kEpsilon = 1e-15;
    constexpr double kTiny = 1e-300;

    const double qab = a + b;
    const double qap = a + 1.0;
    const double qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::fabs(d) < kTiny) {
        d = kTiny;
    }
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= kMaxIterations; ++m) {
        const double m2 = 2.0 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        d = std::fabs(d) < kTiny ? kTiny : d;
        c = 1.0 + aa / c;
        c = std::fabs(c) < kTiny ? kTiny : c;
        d = 1.0 / d;
        h *= d * c;

        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        d = std::fabs(d) < kTiny ? kTiny : d;
        c = 1.0 + aa / c;
        c = std::fabs(c) < kTiny ? kTiny : c;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::fabs(delta - 1.0) < kEpsilon) {
            return h;
        }
    }
    throw Error("incomplete beta continued fraction did not converge");
}

double mean(const Sample& s) { return std::accumulate(s.begin(), s.end(), 0.0) / static_cast<double>(s.size()); }

}  // namespace

double regularized_incomplete_beta(double a, double b, double x) {
    if (!(a > 0.0) || !(b > 0.0) || !(x >= 0.0 && x <= 1.0)) {
        throw InvalidArgumentError("incomplete beta needs a, b > 0 and x in [0, 1]");
    }
    if (x == 0.0 || x == 1.0) {
        return x;
    }
    const double log_front =
        std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) + a * std::log(x) + b * std::log1p(-x);
    const double front = std::exp(log_front);
    // The fraction converges quickly only below the mean; use the symmetry otherwise.
    if (x < (a + 1.0) / (a + b + 2.0)) {
        return front * beta_continued_fraction(a, b, x) / a;
    }
    return 1.0 - front * beta_continued_fraction(b, a, 1.0 - x) / b;
}

double f_survival(double f, double d1, double d2) {
    if (f <= 0.0) {
        return 1.0;
    }
    if (std::isinf(f)) {
        return 0.0;
    }
    return regularized_incomplete_beta(d2 / 2.0, d1 / 2.0, d2 / (d2 + d1 * f));
}

AnovaResult one_way_anova(std::span<const Sample> groups) {
    if (groups.size() < 2) {
        throw InvalidArgumentError("ANOVA needs at least two groups");
    }
    double grand_sum = 0.0;
    std::size_t n = 0;
    for (const auto& g : groups) {
        if (g.size() < 2) {
            throw InvalidArgumentError("every ANOVA group needs at least two values");
        }
        for (double x : g) {
            if (!std::isfinite(x)) {
                throw InvalidArgumentError("ANOVA values must be finite");
            }
            grand_sum += x;
        }
        n += g.size();
    }
    const double grand_mean = grand_sum / static_cast<double>(n);

    AnovaResult result;
    for (const auto& g : groups) {
        const double m = mean(g);
        result.ss_between += static_cast<double>(g.size()) * (m - grand_mean) * (m - grand_mean);
        for (double x : g) {
            result.ss_within += (x - m) * (x - m);
        }
    }
    result.df_between = groups.size() - 1;
    result.df_within = n - groups.size();
    if (!(result.ss_within > 0.0)) {
        throw InvalidArgumentError("degenerate groups: no variance within groups");
    }
    const double ms_between = result.ss_between / static_cast<double>(result.df_between);
    const double ms_within = result.ss_within / static_cast<double>(result.df_within);
    result.f = ms_between / ms_within;
    result.p = f_survival(result.f, static_cast<double>(result.df_between), static_cast<double>(result.df_within));
    return result;
}

double studentized_range_critical(double alpha, std::size_t k, double df) {
    if (k < 2 || k > 20) {
        throw InvalidArgumentError("studentized range table covers 2 to 20 groups, got " + std::to_string(k));
    }
    if (df < detail::kTabulatedDf.front()) {
        throw InvalidArgumentError("studentized range table needs at least 2 error degrees of freedom");
    }
    std::size_t column = 0;
    while (column + 1 < detail::kTabulatedDf.size() && detail::kTabulatedDf[column + 1] <= df) {
        ++column;
    }
    for (const auto& row : detail::kQRows) {
        if (row.alpha == alpha && static_cast<std::size_t>(row.k) == k) {
            return row.q[column];
        }
    }
    throw InvalidArgumentError("alpha not tabulated: " + std::to_string(alpha) + " (use 0.05, 0.01 or 0.001)");
}

TukeyResult tukey_hsd(std::span<const Sample> groups, double alpha) {
    const auto anova = one_way_anova(groups);
    TukeyResult result;
    result.alpha = alpha;
    result.df_within = anova.df_within;
    const double df = static_cast<double>(anova.df_within);
    const double critical = studentized_range_critical(alpha, groups.size(), df);
    for (double tabulated : detail::kTabulatedDf) {
        if (tabulated <= df) {
            result.df_used = tabulated;
        }
    }
    const double ms_within = anova.ss_within / df;
    for (std::size_t i = 0; i < groups.size(); ++i) {
        for (std::size_t j = i + 1; j < groups.size(); ++j) {
            TukeyComparison c;
            c.first = i;
            c.second = j;
            c.mean_difference = mean(groups[j]) - mean(groups[i]);
            const double se = std::sqrt(ms_within / 2.0 *
                                        (1.0 / static_cast<double>(groups[i].size()) +
                                         1.0 / static_cast<double>(groups[j].size())));
            c.q = std::fabs(c.mean_difference) / se;
            c.q_critical = critical;
            c.significant = c.q > critical;
            result.comparisons.push_back(c);
        }
    }
    return result;
}

}  // namespace faultlens::lens
