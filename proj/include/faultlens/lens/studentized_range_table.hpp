#pragma once

/// @file studentized_range_table.hpp
/// @brief Upper-tail critical values of the studentized range distribution.

#include <array>
#include <cstddef>
#include <limits>

namespace faultlens::lens::detail {

/// Error degrees of freedom with a tabulated column; the last entry is infinity.
inline constexpr std::size_t kTabulatedDfCount = 37;
extern const std::array<double, kTabulatedDfCount> kTabulatedDf;

/// Critical q for one (alpha, number of groups) pair, one value per tabulated df.
struct QRow {
    double alpha;
    int k;
    std::array<double, kTabulatedDfCount> q;
};

/// alpha in {0.05, 0.01, 0.001} times k in 2..20.
inline constexpr std::size_t kQRowCount = 57;
extern const std::array<QRow, kQRowCount> kQRows;

}  // namespace faultlens::lens::detail
