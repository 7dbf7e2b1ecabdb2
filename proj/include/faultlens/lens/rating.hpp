#pragma once

/// @file rating.hpp
/// @brief Extraction of `Rating: [[k]]` verdicts from judge responses.

#include <optional>
#include <string_view>

namespace faultlens::lens {

/// The last `Rating: [[k]]` in `text`.
/// @throws InvalidArgumentError if no rating is present or k is outside 1..10
[[nodiscard]] int parse_rating(std::string_view text);

/// As parse_rating(), but nullopt instead of throwing.
[[nodiscard]] std::optional<int> try_parse_rating(std::string_view text);

}  // namespace faultlens::lens
